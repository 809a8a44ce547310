#pragma once

// The property hierarchy: categorical, strictly categorical, distributive,
// normal/conormal, order-closed. Each property is decided by several
// provably-equivalent modes that act as mutual oracles, plus the forbidden
// subalgebra detector (X_n / Y_n) with explicit verified embeddings.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "skewlat/cosets.hpp"
#include "skewlat/generators.hpp"
#include "skewlat/order_green.hpp"
#include "skewlat/skew_lattice.hpp"

namespace skewlat {

struct ModeResult {
  bool holds = true;
  std::vector<std::string> witness;  // element labels of the first violation
};

inline const std::vector<std::string>& categorical_modes() {
  static const std::vector<std::string> m = {"structural", "catshort", "catsymm",
                                             "conditional", "midpoint"};
  return m;
}

inline const std::vector<std::string>& strictly_categorical_modes() {
  static const std::vector<std::string> m = {
      "intersection", "midpoint-order", "midpoint-weak", "forbidden-four",
      "interval",     "updown",         "identity",      "unique-factorization"};
  return m;
}

inline const std::vector<std::string>& order_closed_modes() {
  static const std::vector<std::string> m = {"direct", "identity"};
  return m;
}

namespace detail {

inline ModeResult fail_at(const SkewLattice& a, std::initializer_list<int> w) {
  return ModeResult{false, labels(a, w)};
}

// ---- categorical, mode "structural" -----------------------------------
// Every nonempty composite of coset bijections must fill out the full
// coset bijection that contains it.
inline ModeResult categorical_structural(const SkewLattice& a) {
  const auto g = green_partitions(a);
  for (const auto& triple : chain_triples(a)) {
    SkewChain ab{&a, {triple.classes[0], triple.classes[1]}};
    SkewChain bc{&a, {triple.classes[1], triple.classes[2]}};
    const auto bij_ab = coset_bijections(ab);
    const auto bij_bc = coset_bijections(bc);
    for (const auto& psi : bij_bc)
      for (const auto& phi : bij_ab) {
        const auto comp = compose_bijections(psi, phi);
        if (comp.empty()) continue;
        const auto [a0, c0] = comp.pairs[0];
        const auto chi = coset_bijection_through(a, g, a0, c0);
        for (const auto& p : comp.pairs)
          if (!std::count(chi.pairs.begin(), chi.pairs.end(), p))
            throw InternalError("composite escapes its containing coset bijection");
        if (comp.pairs.size() != chi.pairs.size()) {
          for (const auto& [u, w] : chi.pairs)
            if (!comp.image_of(u))
              return fail_at(a, {a0, c0, u});
          throw InternalError("composite smaller than chi yet chi has no extra pair");
        }
      }
  }
  return {};
}

// ---- categorical, identity modes (catshort / catsymm) -----------------
inline ModeResult categorical_catshort(const SkewLattice& a) {
  const int n = a.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const int core = a.meet(a.meet(a.meet(a.meet(x, y), z), y), x);
        const int lhs = a.meet(a.meet(x, a.join(a.join(core, y), core)), x);
        if (lhs != a.meet(x, y, x)) return fail_at(a, {x, y, z});
      }
  return {};
}

inline ModeResult categorical_catsymm(const SkewLattice& a) {
  const int n = a.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const int xzx = a.meet(x, z, x);
        const int zxz = a.meet(z, x, z);
        const int lhs = a.meet(a.meet(x, a.join(a.join(xzx, y), xzx)), x);
        const int rhs = a.meet(a.meet(x, a.join(a.join(zxz, y), zxz)), x);
        if (lhs != rhs) return fail_at(a, {x, y, z});
      }
  return {};
}

// ---- categorical, conditional mode (catimp1 / catimp2) ----------------
inline ModeResult categorical_conditional(const SkewLattice& a,
                                          const OrderRelations& ord) {
  const int n = a.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (ord.geq(x, y) && ord.pre_geq(y, z)) {
          const int lhs = a.meet(a.meet(x, a.join(z, y, z)), x);
          const int xzx = a.meet(x, z, x);
          const int rhs = a.join(a.join(xzx, y), xzx);
          if (lhs != rhs) return fail_at(a, {x, y, z});
        }
        if (ord.pre_geq(x, y) && ord.geq(y, z)) {
          const int lhs = a.join(a.join(z, a.meet(x, y, x)), z);
          const int zxz = a.join(z, x, z);
          const int rhs = a.meet(a.meet(zxz, y), zxz);
          if (lhs != rhs) return fail_at(a, {x, y, z});
        }
      }
  return {};
}

// ---- categorical, midpoint mode (unique parallel midpoint) ------------
inline ModeResult categorical_midpoint(const SkewLattice& a,
                                       const GreenPartitions& g,
                                       const OrderRelations& ord) {
  const int n = a.size();
  for (int x = 0; x < n; ++x)
    for (int b = 0; b < n; ++b) {
      if (!ord.gt(x, b)) continue;
      for (int c = 0; c < n; ++c) {
        if (!ord.gt(b, c)) continue;
        const auto chi = coset_bijection_through(a, g, x, c);
        for (const auto& [x2, c2] : chi.pairs) {
          // the midpoint must be both a2^b^a2 and c2vbvc2, and the two
          // stacked pairs must be parallel
          const int b1 = a.meet(x2, b, x2);
          const int b2 = a.join(c2, b, c2);
          if (b1 != b2) return fail_at(a, {x, b, c, x2, c2});
          if (!ord.gt(x2, b1) || !ord.gt(b1, c2))
            return fail_at(a, {x, b, c, x2, c2});
          if (!are_parallel(a, {x, b}, {x2, b1}) ||
              !are_parallel(a, {b, c}, {b1, c2}))
            return fail_at(a, {x, b, c, x2, c2});
        }
      }
    }
  return {};
}

// ---- strictly categorical modes ----------------------------------------

inline ModeResult strict_intersection(const SkewLattice& a) {
  if (auto cat = categorical_structural(a); !cat.holds) return cat;
  for (const auto& triple : chain_triples(a)) {
    SkewChain ab{&a, {triple.classes[0], triple.classes[1]}};
    SkewChain bc{&a, {triple.classes[1], triple.classes[2]}};
    const auto a_cosets = coset_partitions(ab).lower_cosets;
    const auto c_cosets = coset_partitions(bc).upper_cosets;
    for (const auto& x : a_cosets)
      for (const auto& y : c_cosets) {
        std::vector<int> inter;
        std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                              std::back_inserter(inter));
        if (inter.empty()) return fail_at(a, {x[0], y[0]});
      }
  }
  return {};
}

inline ModeResult strict_midpoint(const SkewLattice& a,
                                  const GreenPartitions& g,
                                  const OrderRelations& ord, bool strict_order) {
  const int n = a.size();
  for (int y = 0; y < n; ++y)
    for (int y2 = 0; y2 < n; ++y2) {
      if (y == y2 || !g.d.same(y, y2)) continue;
      for (int x = 0; x < n; ++x) {
        const bool above = strict_order ? (ord.gt(x, y) && ord.gt(x, y2))
                                        : (ord.geq(x, y) && ord.geq(x, y2));
        if (!above) continue;
        for (int z = 0; z < n; ++z) {
          const bool below = strict_order ? (ord.gt(y, z) && ord.gt(y2, z))
                                          : (ord.geq(y, z) && ord.geq(y2, z));
          if (below) return fail_at(a, {x, y, y2, z});
        }
      }
    }
  return {};
}

// no 4-element subalgebra a > {b -L b'} > c or a > {b -R b'} > c
inline ModeResult strict_forbidden_four(const SkewLattice& a,
                                        const GreenPartitions& g,
                                        const OrderRelations& ord) {
  const int n = a.size();
  for (int x = 0; x < n; ++x)
    for (int b = 0; b < n; ++b) {
      if (!ord.gt(x, b)) continue;
      for (int b2 = 0; b2 < n; ++b2) {
        if (b2 == b || !ord.gt(x, b2)) continue;
        if (!g.l.same(b, b2) && !g.r.same(b, b2)) continue;
        for (int z = 0; z < n; ++z)
          if (ord.gt(b, z) && ord.gt(b2, z)) return fail_at(a, {x, b, b2, z});
      }
    }
  return {};
}

// every interval [a,b] is a sublattice (it is always a subalgebra)
inline ModeResult strict_interval(const SkewLattice& a,
                                  const OrderRelations& ord) {
  const int n = a.size();
  for (int hi = 0; hi < n; ++hi)
    for (int lo = 0; lo < n; ++lo) {
      if (!ord.gt(hi, lo)) continue;
      std::vector<int> box;
      for (int x = 0; x < n; ++x)
        if (ord.geq(hi, x) && ord.geq(x, lo)) box.push_back(x);
      for (int x : box)
        for (int y : box)
          if (a.meet(x, y) != a.meet(y, x) || a.join(x, y) != a.join(y, x))
            return fail_at(a, {hi, lo, x, y});
    }
  return {};
}

inline ModeResult normality_within(const SkewLattice& a,
                                   const std::vector<int>& set, bool meet_side,
                                   int tag) {
  for (int x : set)
    for (int y : set)
      for (int z : set)
        for (int w : set) {
          const int lhs = meet_side ? a.meet(a.meet(a.meet(x, y), z), w)
                                    : a.join(a.join(a.join(x, y), z), w);
          const int rhs = meet_side ? a.meet(a.meet(a.meet(x, z), y), w)
                                    : a.join(a.join(a.join(x, z), y), w);
          if (lhs != rhs) return fail_at(a, {tag, x, y, z, w});
        }
  return {};
}

// [a]-up is a normal subalgebra and [a]-down a conormal one, for every a
inline ModeResult strict_updown(const SkewLattice& a,
                                const OrderRelations& ord) {
  const int n = a.size();
  for (int e = 0; e < n; ++e) {
    std::vector<int> up, down;
    for (int x = 0; x < n; ++x) {
      if (ord.geq(x, e)) up.push_back(x);
      if (ord.geq(e, x)) down.push_back(x);
    }
    if (auto r = normality_within(a, up, true, e); !r.holds) return r;
    if (auto r = normality_within(a, down, false, e); !r.holds) return r;
  }
  return {};
}

inline ModeResult strict_identity(const SkewLattice& a) {
  const int n = a.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int u = 0; u < n; ++u) {
          const int lhs =
              a.join(a.join(x, a.meet(a.meet(a.meet(y, z), u), y)), x);
          const int rhs =
              a.join(a.join(x, a.meet(a.meet(a.meet(y, u), z), y)), x);
          if (lhs != rhs) return fail_at(a, {x, y, z, u});
        }
  return {};
}

// categorical, and every coset bijection A->C factors through B uniquely
inline ModeResult strict_unique_factorization(const SkewLattice& a) {
  if (auto cat = categorical_structural(a); !cat.holds) return cat;
  for (const auto& triple : chain_triples(a)) {
    SkewChain ab{&a, {triple.classes[0], triple.classes[1]}};
    SkewChain bc{&a, {triple.classes[1], triple.classes[2]}};
    SkewChain ac{&a, {triple.classes[0], triple.classes[2]}};
    const auto bij_ab = coset_bijections(ab);
    const auto bij_bc = coset_bijections(bc);
    const auto bij_ac = coset_bijections(ac);
    for (const auto& phi : bij_ac) {
      int count = 0;
      for (const auto& psi : bij_ab)
        for (const auto& chi : bij_bc) {
          auto comp = compose_bijections(chi, psi);
          std::sort(comp.pairs.begin(), comp.pairs.end());
          auto want = phi.pairs;
          std::sort(want.begin(), want.end());
          if (comp.pairs == want) ++count;
        }
      if (count != 1)
        return fail_at(a, {phi.pairs[0].first, phi.pairs[0].second});
    }
  }
  return {};
}

// ---- distributivity, normality, order-closedness ----------------------

inline ModeResult distributive_identities(const SkewLattice& a) {
  const int n = a.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (a.meet(a.meet(x, a.join(y, z)), x) !=
            a.join(a.meet(x, y, x), a.meet(x, z, x)))
          return fail_at(a, {x, y, z});
        if (a.join(a.join(x, a.meet(y, z)), x) !=
            a.meet(a.join(x, y, x), a.join(x, z, x)))
          return fail_at(a, {x, y, z});
      }
  return {};
}

inline ModeResult normal_identity(const SkewLattice& a) {
  const int n = a.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w)
          if (a.meet(a.meet(a.meet(x, y), z), w) !=
              a.meet(a.meet(a.meet(x, z), y), w))
            return fail_at(a, {x, y, z, w});
  return {};
}

inline ModeResult conormal_identity(const SkewLattice& a) {
  const int n = a.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w)
          if (a.join(a.join(a.join(x, y), z), w) !=
              a.join(a.join(a.join(x, z), y), w))
            return fail_at(a, {x, y, z, w});
  return {};
}

inline ModeResult order_closed_direct(const SkewLattice& a) {
  const auto ord = compute_orders(a);
  for (const auto& pair : primitive_pairs(a)) {
    const auto& up = pair.classes[0];
    const auto& lo = pair.classes[1];
    for (int x : up)
      for (int b : lo) {
        if (!ord.gt(x, b)) continue;
        for (int x2 : up) {
          if (!ord.gt(x2, b)) continue;
          for (int b2 : lo)
            if (ord.gt(x, b2) && !ord.gt(x2, b2))
              return fail_at(a, {x, x2, b, b2});
        }
      }
  }
  return {};
}

inline ModeResult order_closed_identity(const SkewLattice& a) {
  const int n = a.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xy = a.meet(x, y);
      const int yx = a.meet(y, x);
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          const int evu = a.meet(a.meet(a.meet(xy, v), u), xy);
          const int euv = a.meet(a.meet(a.meet(xy, u), v), xy);
          if (a.join(a.join(evu, yx), euv) != a.join(a.join(euv, yx), evu))
            return fail_at(a, {x, y, u, v});
        }
    }
  return {};
}

}  // namespace detail

// ------------------------------------------------------------------------
// Public per-property entry points

inline ModeResult is_categorical(const SkewLattice& a, const std::string& mode) {
  if (mode == "structural") return detail::categorical_structural(a);
  if (mode == "catshort") return detail::categorical_catshort(a);
  if (mode == "catsymm") return detail::categorical_catsymm(a);
  if (mode == "conditional")
    return detail::categorical_conditional(a, compute_orders(a));
  if (mode == "midpoint")
    return detail::categorical_midpoint(a, green_partitions(a),
                                        compute_orders(a));
  throw std::invalid_argument("unknown is_categorical mode: " + mode);
}

inline ModeResult is_strictly_categorical(const SkewLattice& a,
                                          const std::string& mode) {
  if (mode == "intersection") return detail::strict_intersection(a);
  if (mode == "midpoint-order")
    return detail::strict_midpoint(a, green_partitions(a), compute_orders(a),
                                   true);
  if (mode == "midpoint-weak")
    return detail::strict_midpoint(a, green_partitions(a), compute_orders(a),
                                   false);
  if (mode == "forbidden-four")
    return detail::strict_forbidden_four(a, green_partitions(a),
                                         compute_orders(a));
  if (mode == "interval") return detail::strict_interval(a, compute_orders(a));
  if (mode == "updown") return detail::strict_updown(a, compute_orders(a));
  if (mode == "identity") return detail::strict_identity(a);
  if (mode == "unique-factorization")
    return detail::strict_unique_factorization(a);
  throw std::invalid_argument("unknown is_strictly_categorical mode: " + mode);
}

inline ModeResult is_distributive(const SkewLattice& a) {
  return detail::distributive_identities(a);
}

struct NormalityFlags {
  bool normal = false;
  bool conormal = false;
};

inline NormalityFlags normality_flags(const SkewLattice& a) {
  return {detail::normal_identity(a).holds, detail::conormal_identity(a).holds};
}

inline ModeResult is_order_closed(const SkewLattice& a, const std::string& mode) {
  if (mode == "direct") return detail::order_closed_direct(a);
  if (mode == "identity") return detail::order_closed_identity(a);
  throw std::invalid_argument("unknown is_order_closed mode: " + mode);
}

// ------------------------------------------------------------------------
// Forbidden subalgebra detection (X_n / Y_n)

struct ForbiddenWitness {
  char kind = 'X';  // 'X' (left-handed) or 'Y' (right-handed)
  int n = 0;        // parameter of the embedded algebra, >= 2
  ElementMap embedding;
};

namespace detail {

struct HandedWitness {
  int n = 0;
  std::vector<int> elems;  // a1, a2, b1..b_2n, c1, c2 as quotient indices
};

// Search a handed (quotient) algebra for a midpoint configuration that
// fails to close and walk the alternating component it generates.
// Deterministic: lexicographically least starting pair (a, c).
inline std::optional<HandedWitness> find_handed_witness(const SkewLattice& q) {
  const int n = q.size();
  const auto ord = compute_orders(q);
  const auto g = green_partitions(q);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      if (!ord.gt(a, c)) continue;
      std::vector<int> mids;
      for (int b = 0; b < n; ++b)
        if (ord.gt(a, b) && ord.gt(b, c)) mids.push_back(b);
      if (mids.empty()) continue;
      const auto chi = coset_bijection_through(q, g, a, c);
      for (const auto& [a2, c2] : chi.pairs) {
        if (a2 == a) continue;
        for (int b : mids) {
          const int u = q.meet(a2, b, a2);
          const int v = q.join(c2, b, c2);
          if (u == v) continue;

          // the alternating -A / -C walk from b; it must close into an
          // even cycle covering b's component
          std::vector<int> beta{b};
          const int cap = static_cast<int>(g.d.members(g.d.class_of(b)).size());
          int cur = b;
          while (true) {
            const int am = q.meet(a2, cur, a2);
            beta.push_back(am);
            const int cm = q.join(c, am, c);
            if (cm == b) break;
            beta.push_back(cm);
            cur = cm;
            if (static_cast<int>(beta.size()) > cap)
              throw InternalError("alternating coset walk failed to close");
          }
          if (beta.size() < 4 || beta.size() % 2 != 0)
            throw InternalError("alternating coset walk has bad length");
          std::set<int> distinct(beta.begin(), beta.end());
          if (distinct.size() != beta.size())
            throw InternalError("alternating coset walk repeats an element");

          HandedWitness hw;
          hw.n = static_cast<int>(beta.size()) / 2;
          hw.elems = {a, a2};
          hw.elems.insert(hw.elems.end(), beta.begin(), beta.end());
          hw.elems.push_back(c);
          hw.elems.push_back(c2);
          return hw;
        }
      }
    }
  return std::nullopt;
}

// Lift a witness found in S/R (kind X) or S/L (kind Y) back into S along a
// transversal of L-classes (resp. R-classes) anchored at some a0 > b0 > c0.
inline ForbiddenWitness lift_witness(const SkewLattice& alg,
                                     const MaximalImages& mi,
                                     const HandedWitness& hw, char kind) {
  const Partition& quot = kind == 'X' ? mi.green.r : mi.green.l;
  const Partition& cross = kind == 'X' ? mi.green.l : mi.green.r;
  const auto& d = mi.green.d;

  auto d_class_of_quot = [&](int w) { return d.class_of(quot.members(w)[0]); };
  const int a_dc = d_class_of_quot(hw.elems[0]);
  const int b_dc = d_class_of_quot(hw.elems[2]);
  const int c_dc = d_class_of_quot(hw.elems[2 + 2 * hw.n]);

  auto gt = [&](int x, int y) {
    return x != y && alg.join(x, y) == x && alg.join(y, x) == x;
  };
  const int a0 = d.members(a_dc)[0];
  int b0 = -1, c0 = -1;
  for (int b : d.members(b_dc))
    if (gt(a0, b)) {
      b0 = b;
      break;
    }
  for (int c : d.members(c_dc))
    if (b0 >= 0 && gt(b0, c)) {
      c0 = c;
      break;
    }
  if (b0 < 0 || c0 < 0)
    throw InternalError("no anchor triple under the witness classes");

  auto anchor_for = [&](int dc) {
    if (dc == a_dc) return cross.members(cross.class_of(a0));
    if (dc == b_dc) return cross.members(cross.class_of(b0));
    return cross.members(cross.class_of(c0));
  };
  std::vector<int> map;
  map.reserve(hw.elems.size());
  for (int w : hw.elems) {
    const auto& cell = quot.members(w);
    const auto& anchor = anchor_for(d_class_of_quot(w));
    int lifted = -1;
    for (int x : cell)
      if (std::count(anchor.begin(), anchor.end(), x)) {
        if (lifted >= 0) throw InternalError("non-unique lift of a witness element");
        lifted = x;
      }
    if (lifted < 0) throw InternalError("witness element has no lift");
    map.push_back(lifted);
  }

  ForbiddenWitness fw;
  fw.kind = kind;
  fw.n = hw.n;
  fw.embedding = ElementMap{kind == 'X' ? gen_xn(hw.n) : gen_yn(hw.n), alg,
                            std::move(map)};
  if (!check_embedding(fw.embedding))
    throw InternalError("lifted forbidden witness failed verification");
  return fw;
}

}  // namespace detail

// Locates a copy of X_n (n >= 2) or Y_n when the algebra is not
// categorical; returns nothing on categorical input. The search works in
// the handed images and lifts the result, so it is linear in the middle
// class rather than enumerating subsets.
inline std::optional<ForbiddenWitness> find_forbidden(const SkewLattice& alg) {
  if (detail::categorical_structural(alg).holds) return std::nullopt;
  const auto mi = maximal_images(alg);
  if (auto hw = detail::find_handed_witness(mi.s_over_r))
    return detail::lift_witness(alg, mi, *hw, 'X');
  if (auto hw = detail::find_handed_witness(mi.s_over_l))
    return detail::lift_witness(alg, mi, *hw, 'Y');
  throw InternalError(
      "non-categorical algebra but both handed images yield no witness");
}

// ------------------------------------------------------------------------
// Theorem checks used by the aggregate report

namespace detail {

inline bool chain_strictly_categorical(const SkewLattice& a,
                                       const GreenPartitions& g,
                                       const SkewChain& triple) {
  SkewChain ab{&a, {triple.classes[0], triple.classes[1]}};
  SkewChain bc{&a, {triple.classes[1], triple.classes[2]}};
  const auto a_cosets = coset_partitions(ab).lower_cosets;
  const auto c_cosets = coset_partitions(bc).upper_cosets;
  for (const auto& x : a_cosets)
    for (const auto& y : c_cosets) {
      std::vector<int> inter;
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                            std::back_inserter(inter));
      if (inter.empty()) return false;
    }
  for (const auto& psi : coset_bijections(bc))
    for (const auto& phi : coset_bijections(ab)) {
      const auto comp = compose_bijections(psi, phi);
      if (comp.empty()) return false;  // strictly categorical forbids these
      const auto chi =
          coset_bijection_through(a, g, comp.pairs[0].first, comp.pairs[0].second);
      if (comp.pairs.size() != chi.pairs.size()) return false;
    }
  return true;
}

}  // namespace detail

// On every strictly categorical 3-chain: images of a in B share one
// C-coset, images of c in B share one A-coset, and between a > c there is
// exactly one midpoint, sitting in both named cosets.
inline ModeResult strict_chain_conclusions(const SkewLattice& a) {
  const auto g = green_partitions(a);
  const auto ord = compute_orders(a);
  for (const auto& triple : chain_triples(a)) {
    if (!detail::chain_strictly_categorical(a, g, triple)) continue;
    const auto& top = triple.classes[0];
    const auto& mid = triple.classes[1];
    const auto& bot = triple.classes[2];
    SkewChain ab{&a, {top, mid}};
    SkewChain bc{&a, {mid, bot}};
    const auto a_cosets = coset_partitions(ab).lower_cosets;  // A-cosets in B
    const auto c_cosets = coset_partitions(bc).upper_cosets;  // C-cosets in B
    auto block_of = [](const std::vector<std::vector<int>>& blocks, int e) {
      for (std::size_t i = 0; i < blocks.size(); ++i)
        if (std::count(blocks[i].begin(), blocks[i].end(), e))
          return static_cast<int>(i);
      return -1;
    };

    std::map<int, int> ccoset_of_top, acoset_of_bot;  // unique coset of images
    for (int x : top) {
      std::set<int> hit;
      for (int b : mid)
        if (ord.gt(x, b)) hit.insert(block_of(c_cosets, b));
      if (hit.size() != 1) return detail::fail_at(a, {x});
      ccoset_of_top[x] = *hit.begin();
    }
    for (int z : bot) {
      std::set<int> hit;
      for (int b : mid)
        if (ord.gt(b, z)) hit.insert(block_of(a_cosets, b));
      if (hit.size() != 1) return detail::fail_at(a, {z});
      acoset_of_bot[z] = *hit.begin();
    }
    for (int x : top)
      for (int z : bot) {
        if (!ord.gt(x, z)) continue;
        std::vector<int> mids;
        for (int b : mid)
          if (ord.gt(x, b) && ord.gt(b, z)) mids.push_back(b);
        if (mids.size() != 1) return detail::fail_at(a, {x, z});
        const int b = mids[0];
        if (block_of(c_cosets, b) != ccoset_of_top[x] ||
            block_of(a_cosets, b) != acoset_of_bot[z])
          return detail::fail_at(a, {x, b, z});
      }
  }
  return {};
}

// Left-handed auxiliary identities; each is equivalent to categoricity on
// a left-handed algebra, so they double as self-checks there.
inline std::map<std::string, ModeResult> lh_auxiliary_identities(
    const SkewLattice& a) {
  const int n = a.size();
  const auto ord = compute_orders(a);
  std::map<std::string, ModeResult> out;
  auto scan3 = [&](const std::string& name, auto pred) {
    ModeResult r;
    for (int x = 0; x < n && r.holds; ++x)
      for (int y = 0; y < n && r.holds; ++y)
        for (int z = 0; z < n && r.holds; ++z)
          if (!pred(x, y, z)) r = detail::fail_at(a, {x, y, z});
    out[name] = std::move(r);
  };
  scan3("catimp-lh", [&](int x, int y, int z) {
    if (!(ord.geq(x, y) && ord.pre_geq(y, z))) return true;
    return a.meet(x, a.join(y, z)) == a.join(y, a.meet(x, z));
  });
  scan3("cat1", [&](int x, int y, int z) {
    const int inner = a.meet(a.meet(a.join(y, x), y), z);
    return a.meet(a.join(x, y), a.join(y, inner)) == y;
  });
  scan3("cat2", [&](int x, int y, int z) {
    const int inner = a.meet(a.meet(a.join(y, x), y), z);
    return a.meet(x, a.join(y, inner)) == a.meet(x, y);
  });
  scan3("cat3", [&](int x, int y, int z) {
    return a.meet(x, a.join(a.meet(y, x), a.meet(x, y, z))) == a.meet(x, y);
  });
  scan3("catshort-lh", [&](int x, int y, int z) {
    return a.meet(x, a.join(y, a.meet(x, y, z))) == a.meet(x, y);
  });
  scan3("cat4", [&](int x, int y, int z) {
    return a.meet(x, a.join(a.join(y, z), a.meet(x, z))) ==
           a.meet(x, a.join(y, z));
  });
  scan3("catsymm-lh", [&](int x, int y, int z) {
    return a.meet(x, a.join(y, a.meet(x, z))) ==
           a.meet(x, a.join(y, a.meet(z, x)));
  });
  return out;
}

// ------------------------------------------------------------------------
// Aggregate report

struct ClassificationReport {
  std::map<std::string, bool> verdicts;
  std::map<std::string, std::map<std::string, ModeResult>> modes;
  std::map<std::string, bool> agreement;
  std::optional<ForbiddenWitness> forbidden;

  bool all_agree() const {
    for (const auto& [prop, ok] : agreement)
      if (!ok) return false;
    return true;
  }
};

inline ClassificationReport classify_report(const SkewLattice& a) {
  ClassificationReport rep;

  auto run = [&](const std::string& prop, const std::vector<std::string>& ms,
                 auto eval, const std::string& verdict_mode) {
    for (const auto& m : ms) rep.modes[prop][m] = eval(m);
    rep.verdicts[prop] = rep.modes[prop][verdict_mode].holds;
    bool agree = true;
    for (const auto& m : ms)
      agree = agree && rep.modes[prop][m].holds == rep.verdicts[prop];
    rep.agreement[prop] = agree;
  };

  run("categorical", categorical_modes(),
      [&](const std::string& m) { return is_categorical(a, m); }, "structural");
  run("strictly_categorical", strictly_categorical_modes(),
      [&](const std::string& m) { return is_strictly_categorical(a, m); },
      "intersection");
  run("distributive", {"identity"},
      [&](const std::string&) { return is_distributive(a); }, "identity");
  run("normal", {"identity"},
      [&](const std::string&) { return detail::normal_identity(a); },
      "identity");
  run("conormal", {"identity"},
      [&](const std::string&) { return detail::conormal_identity(a); },
      "identity");
  run("order_closed", order_closed_modes(),
      [&](const std::string& m) { return is_order_closed(a, m); }, "direct");

  rep.forbidden = find_forbidden(a);

  // theorem self-checks; "agreement" records that the theorem held
  {
    auto concl = strict_chain_conclusions(a);
    rep.verdicts["strict_chain_conclusions"] = concl.holds;
    rep.agreement["strict_chain_conclusions"] = concl.holds;
    rep.modes["strict_chain_conclusions"]["conclusions"] = std::move(concl);
  }
  if (handedness(a).left_handed) {
    auto aux = lh_auxiliary_identities(a);
    const bool cat = rep.verdicts["categorical"];
    bool agree = true;
    for (const auto& [name, r] : aux) agree = agree && r.holds == cat;
    rep.verdicts["categorical_aux_lh"] = cat;
    rep.agreement["categorical_aux_lh"] = agree;
    rep.modes["categorical_aux_lh"] = std::move(aux);
  }

  return rep;
}

}  // namespace skewlat
