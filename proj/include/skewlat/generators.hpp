#pragma once

// Example algebras and the seeded test corpus. Skew chains (including the
// X_n / Y_n family) are assembled from coset partitions and coset
// bijections: the cross-class table entries are derived from the coset
// recipe, never hand-coded.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "skewlat/skew_lattice.hpp"

namespace skewlat {

// ------------------------------------------------------------------------
// Elementary generators

// Total-order lattice on k elements, e1 < e2 < ... < ek.
inline SkewLattice gen_chain(int k) {
  if (k < 1) throw std::invalid_argument("chain length must be >= 1");
  std::vector<std::string> names;
  for (int i = 1; i <= k; ++i) names.push_back("e" + std::to_string(i));
  std::vector<int> meet(k * k), join(k * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      meet[i * k + j] = std::min(i, j);
      join[i * k + j] = std::max(i, j);
    }
  return SkewLattice{std::move(names), std::move(meet), std::move(join)};
}

// Rectangular skew lattice on p*q pairs: (a,b)^(c,d) = (a,d),
// (a,b)v(c,d) = (c,b). Anti-commutative; a single D-class.
inline SkewLattice gen_rectangular(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("need p,q >= 1");
  const int n = p * q;
  std::vector<std::string> names;
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= q; ++j)
      names.push_back("r" + std::to_string(i) + "c" + std::to_string(j));
  std::vector<int> meet(n * n), join(n * n);
  auto pack = [&](int i, int j) { return i * q + j; };
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j)
      for (int k = 0; k < p; ++k)
        for (int l = 0; l < q; ++l) {
          meet[pack(i, j) * n + pack(k, l)] = pack(i, l);
          join[pack(i, j) * n + pack(k, l)] = pack(k, j);
        }
  return SkewLattice{std::move(names), std::move(meet), std::move(join)};
}

// ------------------------------------------------------------------------
// Skew chains from coset data

namespace detail {

// One totally ordered class in a chain-to-be. Within the class the
// structure is a left-zero (x^y = x, xvy = y) or right-zero band.
struct ChainClass {
  std::vector<std::string> names;
  bool left_handed = true;
};

// Coset system for one comparable pair (upper, lower):
//  - cosets_in_upper: lower-class cosets partitioning the upper class
//  - cosets_in_lower: upper-class cosets partitioning the lower class
//  - bijection[{i,j}]: upper-local -> lower-local, total on coset i,
//    onto coset j. x > y holds iff some bijection maps x to y.
struct ChainPairCosets {
  std::vector<std::vector<int>> cosets_in_upper;
  std::vector<std::vector<int>> cosets_in_lower;
  std::map<std::pair<int, int>, std::map<int, int>> bijection;
};

// Fills both tables of a skew chain from per-pair coset data by the coset
// recipe: with x in the upper class and y in the lower,
//   x ^ y = y' ^ y,  y ^ x = y ^ y'   where y' is x's image in y's coset,
//   x v y = x v x',  y v x = x' v x   where x' is y's preimage in x's coset.
// Consistency across three or more classes is NOT automatic; callers must
// validate the result.
inline SkewLattice build_skew_chain(
    const std::vector<ChainClass>& classes,
    const std::map<std::pair<int, int>, ChainPairCosets>& pairs) {
  std::vector<std::string> names;
  std::vector<int> offset;
  for (const auto& c : classes) {
    offset.push_back(static_cast<int>(names.size()));
    names.insert(names.end(), c.names.begin(), c.names.end());
  }
  const int n = static_cast<int>(names.size());
  std::vector<int> meet(n * n, -1), join(n * n, -1);
  auto put = [&](int x, int y, int m, int j) {
    meet[x * n + y] = m;
    join[x * n + y] = j;
  };

  // within-class blocks
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const int off = offset[c];
    const int sz = static_cast<int>(classes[c].names.size());
    for (int i = 0; i < sz; ++i)
      for (int j = 0; j < sz; ++j) {
        if (classes[c].left_handed)
          put(off + i, off + j, off + i, off + j);
        else
          put(off + i, off + j, off + j, off + i);
      }
  }

  auto coset_index = [](const std::vector<std::vector<int>>& cosets, int local) {
    for (std::size_t i = 0; i < cosets.size(); ++i)
      for (int e : cosets[i])
        if (e == local) return static_cast<int>(i);
    throw std::invalid_argument("cosets do not cover the class");
  };

  // cross-class blocks
  for (const auto& [uv, data] : pairs) {
    const auto [u, l] = uv;
    if (u >= l) throw std::invalid_argument("pair must be (upper, lower)");
    const int uoff = offset[u], loff = offset[l];
    const int usz = static_cast<int>(classes[u].names.size());
    const int lsz = static_cast<int>(classes[l].names.size());
    const bool ulh = classes[u].left_handed, llh = classes[l].left_handed;
    for (int xi = 0; xi < usz; ++xi) {
      const int ci = coset_index(data.cosets_in_upper, xi);
      for (int yj = 0; yj < lsz; ++yj) {
        const int cj = coset_index(data.cosets_in_lower, yj);
        const auto& bij = data.bijection.at({ci, cj});
        const int down = bij.at(xi);  // y' with x >= y'
        int up = -1;                  // x' with x' >= y
        for (const auto& [from, to] : bij)
          if (to == yj) up = from;
        if (up < 0) throw std::invalid_argument("bijection not onto its coset");
        const int x = uoff + xi, y = loff + yj;
        const int dphys = loff + down, uphys = uoff + up;
        const int xy_m = llh ? dphys : y;   // y' ^ y in the lower class
        const int yx_m = llh ? y : dphys;   // y ^ y'
        const int xy_j = ulh ? uphys : x;   // x v x' in the upper class
        const int yx_j = ulh ? x : uphys;   // x' v x
        put(x, y, xy_m, xy_j);
        put(y, x, yx_m, yx_j);
      }
    }
  }

  for (int v : meet)
    if (v < 0) throw std::invalid_argument("coset data left table gaps");
  return SkewLattice{std::move(names), std::move(meet), std::move(join)};
}

}  // namespace detail

// ------------------------------------------------------------------------
// Primitive skew lattices (two D-classes) from an explicit coset system

struct PrimitiveSpec {
  std::vector<std::vector<std::string>> upper_cosets;  // partition of A
  std::vector<std::vector<std::string>> lower_cosets;  // partition of B
  // bijections[i][j] maps upper coset i onto lower coset j, given as pairs
  // (position in upper_cosets[i], position in lower_cosets[j]).
  std::vector<std::vector<std::vector<std::pair<int, int>>>> bijections;
  bool upper_left_handed = true;
  bool lower_left_handed = true;
};

inline SkewLattice gen_primitive(const PrimitiveSpec& spec) {
  if (spec.upper_cosets.empty() || spec.lower_cosets.empty())
    throw std::invalid_argument("primitive spec needs both classes nonempty");
  std::size_t coset_size = spec.upper_cosets[0].size();
  for (const auto* side : {&spec.upper_cosets, &spec.lower_cosets})
    for (const auto& c : *side)
      if (c.size() != coset_size || c.empty())
        throw std::invalid_argument("all cosets must share one nonzero size");
  if (spec.bijections.size() != spec.upper_cosets.size())
    throw std::invalid_argument("need one bijection row per upper coset");

  detail::ChainClass upper, lower;
  upper.left_handed = spec.upper_left_handed;
  lower.left_handed = spec.lower_left_handed;
  std::vector<int> ubase, lbase;  // local index of each coset's first element
  for (const auto& c : spec.upper_cosets) {
    ubase.push_back(static_cast<int>(upper.names.size()));
    upper.names.insert(upper.names.end(), c.begin(), c.end());
  }
  for (const auto& c : spec.lower_cosets) {
    lbase.push_back(static_cast<int>(lower.names.size()));
    lower.names.insert(lower.names.end(), c.begin(), c.end());
  }

  detail::ChainPairCosets data;
  for (std::size_t i = 0; i < spec.upper_cosets.size(); ++i) {
    std::vector<int> c;
    for (std::size_t p = 0; p < coset_size; ++p)
      c.push_back(ubase[i] + static_cast<int>(p));
    data.cosets_in_upper.push_back(std::move(c));
  }
  for (std::size_t j = 0; j < spec.lower_cosets.size(); ++j) {
    std::vector<int> c;
    for (std::size_t p = 0; p < coset_size; ++p)
      c.push_back(lbase[j] + static_cast<int>(p));
    data.cosets_in_lower.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < spec.upper_cosets.size(); ++i) {
    if (spec.bijections[i].size() != spec.lower_cosets.size())
      throw std::invalid_argument("need one bijection per coset pair");
    for (std::size_t j = 0; j < spec.lower_cosets.size(); ++j) {
      std::map<int, int> bij;
      for (auto [up, lo] : spec.bijections[i][j]) {
        if (up < 0 || up >= static_cast<int>(coset_size) || lo < 0 ||
            lo >= static_cast<int>(coset_size))
          throw std::invalid_argument("bijection index out of range");
        if (!bij.emplace(ubase[i] + up, lbase[j] + lo).second)
          throw std::invalid_argument("bijection maps an element twice");
      }
      if (bij.size() != coset_size)
        throw std::invalid_argument("bijection not total on its coset");
      data.bijection[{static_cast<int>(i), static_cast<int>(j)}] = std::move(bij);
    }
  }

  auto alg = detail::build_skew_chain({upper, lower}, {{{0, 1}, data}});
  if (auto rep = validate(alg); !rep.ok) {
    std::string msg = "primitive spec is inconsistent: " + rep.failures[0].law + " fails at (";
    for (std::size_t i = 0; i < rep.failures[0].witness.size(); ++i)
      msg += (i ? "," : "") + rep.failures[0].witness[i];
    throw std::invalid_argument(msg + ")");
  }
  return alg;
}

// The two-coset primitive with one twisted bijection; it validates but is
// not order-closed (witness a1,a3,b1,b3).
inline SkewLattice gen_twisted_primitive(bool left_handed = true) {
  PrimitiveSpec spec;
  spec.upper_cosets = {{"a1", "a2"}, {"a3", "a4"}};
  spec.lower_cosets = {{"b1", "b2"}, {"b3", "b4"}};
  spec.bijections = {
      {{{0, 0}, {1, 1}}, {{0, 0}, {1, 1}}},
      {{{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}},
  };
  spec.upper_left_handed = left_handed;
  spec.lower_left_handed = left_handed;
  return gen_primitive(spec);
}

// ------------------------------------------------------------------------
// The X_n / Y_n family

namespace detail {

// Coset layout shared by X_n and Y_n: A = {a1,a2} and C = {c1,c2} are full
// cosets of each other and full B-cosets; in B = {b1..b_2n} the A-cosets
// are {b1,b2 | b3,b4 | ...} and the C-cosets {b_2n,b1 | b2,b3 | ...}, with
// order given by parity (a1 > b_odd > c1, a2 > b_even > c2).
inline SkewLattice gen_xy(int n, bool left_handed) {
  if (n < 1 ||
      static_cast<std::size_t>(2 * n + 4) > kDefaultMaxCarrier)
    throw std::invalid_argument("n out of bounds");
  ChainClass a_cls, b_cls, c_cls;
  a_cls.left_handed = b_cls.left_handed = c_cls.left_handed = left_handed;
  a_cls.names = {"a1", "a2"};
  c_cls.names = {"c1", "c2"};
  for (int i = 1; i <= 2 * n; ++i) b_cls.names.push_back("b" + std::to_string(i));

  // local index e holds b_{e+1}; even e <=> odd name <=> under a1/c1
  auto lower_of = [](int e) { return e % 2 == 0 ? 0 : 1; };  // c1 or c2

  ChainPairCosets ab;
  ab.cosets_in_upper = {{0, 1}};
  for (int k = 0; k < n; ++k) ab.cosets_in_lower.push_back({2 * k, 2 * k + 1});
  for (int k = 0; k < n; ++k)
    ab.bijection[{0, k}] = {{0, 2 * k}, {1, 2 * k + 1}};

  ChainPairCosets bc;
  bc.cosets_in_lower = {{0, 1}};
  bc.cosets_in_upper.push_back({2 * n - 1, 0});
  for (int k = 1; k < n; ++k) bc.cosets_in_upper.push_back({2 * k - 1, 2 * k});
  for (int k = 0; k < n; ++k) {
    std::map<int, int> bij;
    for (int e : bc.cosets_in_upper[k]) bij[e] = lower_of(e);
    bc.bijection[{k, 0}] = std::move(bij);
  }

  ChainPairCosets ac;
  ac.cosets_in_upper = {{0, 1}};
  ac.cosets_in_lower = {{0, 1}};
  ac.bijection[{0, 0}] = {{0, 0}, {1, 1}};

  auto alg = build_skew_chain({a_cls, b_cls, c_cls},
                              {{{0, 1}, ab}, {{1, 2}, bc}, {{0, 2}, ac}});
  if (auto rep = validate(alg); !rep.ok)
    throw InternalError("X_n/Y_n construction failed validation: " +
                        rep.failures[0].law);
  return alg;
}

}  // namespace detail

inline SkewLattice gen_xn(int n) { return detail::gen_xy(n, true); }
inline SkewLattice gen_yn(int n) { return detail::gen_xy(n, false); }

// ------------------------------------------------------------------------
// Partial functions from an m-set to a k-set

// f^g = g restricted to dom f n dom g; fvg = f together with g off dom f.
// Elements are encoded as m digits in 0..k, digit 0 meaning "undefined".
inline SkewLattice gen_partial_functions(
    int m, int k, std::size_t max_carrier = kDefaultMaxCarrier) {
  if (m < 1 || k < 1) throw std::invalid_argument("need m,k >= 1");
  std::size_t count = 1;
  for (int i = 0; i < m; ++i) {
    count *= static_cast<std::size_t>(k + 1);
    if (count > max_carrier)
      throw LimitError("partial function carrier exceeds max " +
                       std::to_string(max_carrier));
  }
  const int n = static_cast<int>(count);
  auto digits = [&](int idx) {
    std::vector<int> d(m);
    for (int i = 0; i < m; ++i) {
      d[i] = idx % (k + 1);
      idx /= (k + 1);
    }
    return d;
  };
  auto pack = [&](const std::vector<int>& d) {
    int idx = 0;
    for (int i = m - 1; i >= 0; --i) idx = idx * (k + 1) + d[i];
    return idx;
  };
  std::vector<std::string> names;
  for (int idx = 0; idx < n; ++idx) {
    auto d = digits(idx);
    std::string nm = "f[";
    for (int i = 0; i < m; ++i) {
      if (i) nm += ",";
      nm += d[i] == 0 ? "-" : std::to_string(d[i]);
    }
    names.push_back(nm + "]");
  }
  std::vector<int> meet(n * n), join(n * n);
  for (int x = 0; x < n; ++x) {
    auto f = digits(x);
    for (int y = 0; y < n; ++y) {
      auto g = digits(y);
      std::vector<int> mt(m), jn(m);
      for (int i = 0; i < m; ++i) {
        mt[i] = (f[i] && g[i]) ? g[i] : 0;
        jn[i] = f[i] ? f[i] : g[i];
      }
      meet[x * n + y] = pack(mt);
      join[x * n + y] = pack(jn);
    }
  }
  return SkewLattice{std::move(names), std::move(meet), std::move(join)};
}

// ------------------------------------------------------------------------
// Seeded corpus

// Small deterministic generator; identical streams on every platform.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}
  std::uint32_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::uint32_t>(state_ >> 32);
  }
  int below(int bound) {
    return static_cast<int>(next() % static_cast<std::uint32_t>(bound));
  }

 private:
  std::uint64_t state_;
};

struct CorpusLimits {
  std::size_t max_size = 24;   // per-algebra carrier cap
  std::size_t min_count = 200; // generation keeps going until at least this
};

// Chains, rectangles, X_n/Y_n, partial-function algebras and twisted
// primitives, plus their pairwise products under the size cap and
// subalgebra closures of random seeds inside those products.
inline std::vector<SkewLattice> gen_corpus(std::uint64_t seed,
                                           const CorpusLimits& limits = {}) {
  std::vector<SkewLattice> base;
  for (int k = 1; k <= 4; ++k) base.push_back(gen_chain(k));
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q) base.push_back(gen_rectangular(p, q));
  for (int n = 1; n <= 4; ++n) {
    base.push_back(gen_xn(n));
    base.push_back(gen_yn(n));
  }
  for (int m = 1; m <= 2; ++m)
    for (int k = 1; k <= 2; ++k) base.push_back(gen_partial_functions(m, k));
  base.push_back(gen_twisted_primitive(true));
  base.push_back(gen_twisted_primitive(false));

  std::vector<SkewLattice> corpus = base;
  Lcg rng(seed);

  std::vector<SkewLattice> products;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i; j < base.size(); ++j) {
      const std::size_t sz =
          static_cast<std::size_t>(base[i].size()) * base[j].size();
      if (sz <= limits.max_size)
        products.push_back(direct_product(base[i], base[j]));
    }
  corpus.insert(corpus.end(), products.begin(), products.end());

  for (const auto& p : products) {
    for (int seed_size : {2, 4}) {
      std::vector<int> sd;
      for (int i = 0; i < seed_size; ++i) sd.push_back(rng.below(p.size()));
      auto cl = subalgebra_closure(p, sd);
      if (static_cast<int>(cl.size()) == p.size()) continue;  // just p again
      corpus.push_back(induced_subalgebra(p, cl).algebra);
    }
  }

  if (corpus.size() < limits.min_count)
    throw InternalError("corpus smaller than configured minimum");
  for (const auto& a : corpus)
    if (!validate(a).ok)
      throw InternalError("corpus generator emitted an invalid algebra");
  return corpus;
}

}  // namespace skewlat
