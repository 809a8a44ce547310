#pragma once

// The invariant battery: every theorem-backed property the toolkit relies
// on, run over a corpus. Used by the CLI `crosscheck` command and by the
// acceptance suite. Failures are collected as messages, never thrown, so a
// whole corpus can be surveyed in one pass.

#include <chrono>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "skewlat/classify.hpp"
#include "skewlat/cosets.hpp"
#include "skewlat/generators.hpp"
#include "skewlat/order_green.hpp"
#include "skewlat/skew_lattice.hpp"
#include "skewlat/skl_format.hpp"

namespace skewlat {

struct AlgebraCheck {
  ClassificationReport report;
  std::vector<std::string> failures;
};

namespace detail {

inline void expect(std::vector<std::string>& failures, bool ok,
                   const std::string& what) {
  if (!ok) failures.push_back(what);
}

inline void check_order_invariants(const SkewLattice& a,
                                   std::vector<std::string>& failures) {
  const auto ord = compute_orders(a);
  const auto g = green_partitions(a);
  const int n = a.size();
  for (int x = 0; x < n; ++x) {
    expect(failures, ord.pre_geq(x, x), "preorder not reflexive");
    for (int y = 0; y < n; ++y) {
      if (ord.geq(x, y))
        expect(failures, ord.pre_geq(x, y), "order not inside preorder");
      if (ord.geq(x, y) && ord.geq(y, x))
        expect(failures, x == y, "order not antisymmetric");
      expect(failures,
             (ord.pre_geq(x, y) && ord.pre_geq(y, x)) == g.d.same(x, y),
             "mutual preorder differs from D");
      for (int z = 0; z < n; ++z)
        if (ord.pre_geq(x, y) && ord.pre_geq(y, z))
          expect(failures, ord.pre_geq(x, z), "preorder not transitive");
    }
  }

  const auto flags = handedness(a);
  if (flags.left_handed || flags.right_handed) {
    for (int x = 0; x < n; ++x)
      for (int x2 = 0; x2 < n; ++x2) {
        if (!ord.pre_geq(x, x2)) continue;
        for (int y = 0; y < n; ++y) {
          if (flags.left_handed) {
            expect(failures,
                   a.meet(x2, y, x) == a.meet(x2, y) &&
                       a.join(x2, y, x) == a.join(y, x),
                   "left-handed variant identity fails");
          }
          if (flags.right_handed) {
            expect(failures,
                   a.meet(x, y, x2) == a.meet(y, x2) &&
                       a.join(x, y, x2) == a.join(x, y),
                   "right-handed variant identity fails");
          }
        }
      }
  }
}

inline void check_decomposition(const SkewLattice& a,
                                std::vector<std::string>& failures) {
  try {
    maximal_images(a);  // verifies handedness of the images and S/D
  } catch (const InternalError& e) {
    failures.push_back(std::string("maximal images: ") + e.what());
  }
  expect(failures, verify_pullback(a), "pullback reconstruction fails");
}

inline void check_coset_machinery(const SkewLattice& a,
                                  std::vector<std::string>& failures) {
  const auto ord = compute_orders(a);
  for (const auto& pair : primitive_pairs(a)) {
    const auto& up = pair.classes[0];
    const auto& lo = pair.classes[1];
    CosetPartition cp;
    try {
      cp = coset_partitions(pair);
      coset_bijections(pair);  // bijectivity + isomorphism verified inside
    } catch (const InternalError& e) {
      failures.push_back(std::string("coset machinery: ") + e.what());
      continue;
    }

    // two-variable coset forms agree with the one-variable forms
    for (const auto& block : cp.lower_cosets) {
      for (int b : block)
        expect(failures, coset_two_variable_meet(a, up, b) == block,
               "two-variable meet coset differs");
    }
    for (const auto& block : cp.upper_cosets) {
      for (int x : block)
        expect(failures, coset_two_variable_join(a, lo, x) == block,
               "two-variable join coset differs");
    }

    // the coset recipe reproduces the stored tables entrywise
    auto block_of = [](const std::vector<std::vector<int>>& blocks, int e) {
      for (const auto& blk : blocks)
        if (std::count(blk.begin(), blk.end(), e)) return &blk;
      return static_cast<const std::vector<int>*>(nullptr);
    };
    for (int x : up)
      for (int y : lo) {
        const auto* xblk = block_of(cp.upper_cosets, x);
        const auto* yblk = block_of(cp.lower_cosets, y);
        int xmate = -1, ymate = -1;
        for (int u : *xblk)
          if (ord.geq(u, y)) {
            expect(failures, xmate < 0, "coset recipe mate not unique");
            xmate = u;
          }
        for (int v : *yblk)
          if (ord.geq(x, v)) {
            expect(failures, ymate < 0, "coset recipe mate not unique");
            ymate = v;
          }
        if (xmate < 0 || ymate < 0) {
          failures.push_back("coset recipe mate missing");
          continue;
        }
        expect(failures,
               a.join(x, y) == a.join(x, xmate) &&
                   a.join(y, x) == a.join(xmate, x),
               "join recipe disagrees with table");
        expect(failures,
               a.meet(x, y) == a.meet(ymate, y) &&
                   a.meet(y, x) == a.meet(y, ymate),
               "meet recipe disagrees with table");
      }
  }

  try {
    parallel_classes(a);  // parallelism laws and class/bijection agreement
  } catch (const InternalError& e) {
    failures.push_back(std::string("parallelism: ") + e.what());
  }
}

inline void check_closure_properties(const SkewLattice& a,
                                     std::vector<std::string>& failures) {
  const int n = a.size();
  const std::vector<std::vector<int>> seeds = {
      {0}, {n - 1}, {0, n - 1}, {0, n / 2, n - 1}};
  for (const auto& s : seeds) {
    auto cl = subalgebra_closure(a, s);
    for (int e : s)
      expect(failures, std::count(cl.begin(), cl.end(), e) > 0,
             "closure not extensive");
    expect(failures, subalgebra_closure(a, cl) == cl, "closure not idempotent");
  }
  auto small = subalgebra_closure(a, seeds[0]);
  auto big = subalgebra_closure(a, seeds[2]);
  for (int e : small)
    expect(failures, std::count(big.begin(), big.end(), e) > 0,
           "closure not monotone");
}

inline void check_classification(const SkewLattice& a,
                                 const ClassificationReport& rep,
                                 std::vector<std::string>& failures) {
  for (const auto& [prop, ok] : rep.agreement)
    expect(failures, ok, "mode disagreement on property " + prop);

  const bool cat = rep.verdicts.at("categorical");
  const bool strict = rep.verdicts.at("strictly_categorical");
  expect(failures, !rep.verdicts.at("distributive") || cat,
         "distributive algebra not categorical");
  expect(failures, !rep.verdicts.at("normal") || strict,
         "normal algebra not strictly categorical");
  expect(failures, !rep.verdicts.at("conormal") || strict,
         "conormal algebra not strictly categorical");
  expect(failures, !strict || cat,
         "strictly categorical algebra not categorical");

  expect(failures, rep.forbidden.has_value() == !cat,
         "forbidden witness exactly on non-categorical algebras");
  if (rep.forbidden) {
    expect(failures, rep.forbidden->n >= 2, "forbidden witness with n < 2");
    expect(failures, check_embedding(rep.forbidden->embedding),
           "forbidden witness embedding fails");
  }

  // categorical iff every reflective 3-chain factors
  bool all_reflective_factor = true;
  for (const auto& triple : chain_triples(a)) {
    const auto rf = reflective_factorization(triple);
    if (rf.reflective && !rf.iso) all_reflective_factor = false;
  }
  expect(failures, cat == all_reflective_factor,
         "reflective factorization biconditional fails");
}

}  // namespace detail

inline AlgebraCheck check_algebra(const SkewLattice& a) {
  AlgebraCheck out;
  auto rep = validate(a);
  if (!rep.ok) {
    out.failures.push_back("algebra fails validation: " + rep.failures[0].law);
    return out;
  }
  detail::expect(out.failures, parse_algebra(serialize_algebra(a)) == a,
                 "serialize/parse round trip changes the algebra");
  try {
    detail::check_order_invariants(a, out.failures);
    detail::check_decomposition(a, out.failures);
    detail::check_coset_machinery(a, out.failures);
    detail::check_closure_properties(a, out.failures);
    out.report = classify_report(a);
    detail::check_classification(a, out.report, out.failures);
  } catch (const InternalError& e) {
    out.failures.push_back(std::string("internal error: ") + e.what());
  }
  return out;
}

struct CrosscheckResult {
  int algebras = 0;
  std::map<std::string, int> property_counts;
  std::vector<std::string> failures;  // prefixed with the algebra index
  double seconds = 0.0;
};

inline CrosscheckResult crosscheck_corpus(const std::vector<SkewLattice>& corpus) {
  CrosscheckResult res;
  const auto start = std::chrono::steady_clock::now();
  std::vector<const SkewLattice*> categorical_sample, strict_sample, closed_sample;
  for (const auto& a : corpus) {
    auto chk = check_algebra(a);
    for (auto& f : chk.failures)
      res.failures.push_back("algebra #" + std::to_string(res.algebras) + " (" +
                             std::to_string(a.size()) + " elements): " + f);
    for (const auto& [prop, v] : chk.report.verdicts)
      if (v) ++res.property_counts[prop];
    if (chk.failures.empty()) {
      if (chk.report.verdicts.at("categorical") &&
          categorical_sample.size() < 4)
        categorical_sample.push_back(&a);
      if (chk.report.verdicts.at("strictly_categorical") &&
          strict_sample.size() < 4)
        strict_sample.push_back(&a);
      if (chk.report.verdicts.at("order_closed") && closed_sample.size() < 4)
        closed_sample.push_back(&a);
    }
    ++res.algebras;
  }

  // variety closure spot-checks: products and subalgebra closures of members
  // stay in the variety
  auto spot = [&](const std::vector<const SkewLattice*>& sample,
                  auto membership, const std::string& label) {
    for (std::size_t i = 0; i < sample.size(); ++i)
      for (std::size_t j = i; j < sample.size(); ++j) {
        if (static_cast<std::size_t>(sample[i]->size()) * sample[j]->size() > 64)
          continue;
        const auto prod = direct_product(*sample[i], *sample[j]);
        if (!membership(prod))
          res.failures.push_back(label + " not closed under direct product");
      }
    for (const auto* s : sample) {
      auto cl = subalgebra_closure(*s, {0, s->size() - 1});
      const auto sub = induced_subalgebra(*s, cl).algebra;
      if (!membership(sub))
        res.failures.push_back(label + " not closed under subalgebras");
    }
  };
  spot(categorical_sample,
       [](const SkewLattice& s) { return is_categorical(s, "catshort").holds; },
       "categorical");
  spot(strict_sample,
       [](const SkewLattice& s) {
         return is_strictly_categorical(s, "identity").holds;
       },
       "strictly categorical");
  spot(closed_sample,
       [](const SkewLattice& s) { return is_order_closed(s, "identity").holds; },
       "order-closed");

  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
  return res;
}

// Summary table; deterministic for a fixed corpus (timing is reported
// separately by callers that want it).
inline std::string format_summary(const CrosscheckResult& res) {
  std::ostringstream os;
  os << "algebras checked: " << res.algebras << "\n";
  os << "property counts:\n";
  for (const auto& [prop, count] : res.property_counts)
    os << "  " << std::left << std::setw(38) << prop << " " << count << "/"
       << res.algebras << "\n";
  os << "invariant failures: " << res.failures.size() << "\n";
  for (const auto& f : res.failures) os << "  FAIL " << f << "\n";
  return os.str();
}

}  // namespace skewlat
