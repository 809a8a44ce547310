#pragma once

// Coset partitions, coset bijections, parallelism, AC-components and
// reflective-chain factorization. Everything here is theorem-backed for a
// validated algebra, so structural checks that fail raise InternalError
// rather than returning error values.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "skewlat/generators.hpp"
#include "skewlat/order_green.hpp"
#include "skewlat/skew_lattice.hpp"

namespace skewlat {

// A totally preordered family of distinct D-classes, descending.
struct SkewChain {
  const SkewLattice* alg = nullptr;
  std::vector<std::vector<int>> classes;
};

namespace detail {

// class ids of g.d ordered so that comparisons can use any representative
inline bool class_above(const SkewLattice& a, const std::vector<int>& upper,
                        const std::vector<int>& lower) {
  // upper > lower as D-classes: every u strictly preorder-above every w
  for (int u : upper)
    for (int w : lower) {
      const bool u_geq = a.join(u, w, u) == u;
      const bool w_geq = a.join(w, u, w) == w;
      if (!u_geq || w_geq) return false;
    }
  return true;
}

}  // namespace detail

inline SkewChain make_chain(const SkewLattice& a,
                            std::vector<std::vector<int>> classes) {
  if (classes.size() < 2) throw std::invalid_argument("chain needs >= 2 classes");
  const auto g = green_partitions(a);
  for (auto& cls : classes) {
    std::sort(cls.begin(), cls.end());
    bool found = false;
    for (const auto& dc : g.d.classes())
      if (dc == cls) found = true;
    if (!found) throw std::invalid_argument("chain classes must be D-classes");
  }
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      if (!detail::class_above(a, classes[i], classes[j]))
        throw std::invalid_argument("chain classes must descend strictly");
  return SkewChain{&a, std::move(classes)};
}

// All comparable D-class pairs (upper, lower), and all 3-term chains,
// in canonical (least representative) order.
inline std::vector<SkewChain> primitive_pairs(const SkewLattice& a) {
  const auto g = green_partitions(a);
  std::vector<SkewChain> out;
  const int k = g.d.num_classes();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      if (detail::class_above(a, g.d.members(i), g.d.members(j)))
        out.push_back(SkewChain{&a, {g.d.members(i), g.d.members(j)}});
    }
  return out;
}

inline std::vector<SkewChain> chain_triples(const SkewLattice& a) {
  const auto g = green_partitions(a);
  std::vector<SkewChain> out;
  const int k = g.d.num_classes();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l) {
        if (i == j || j == l || i == l) continue;
        if (detail::class_above(a, g.d.members(i), g.d.members(j)) &&
            detail::class_above(a, g.d.members(j), g.d.members(l)))
          out.push_back(
              SkewChain{&a, {g.d.members(i), g.d.members(j), g.d.members(l)}});
      }
  return out;
}

// ------------------------------------------------------------------------
// Coset partitions

struct CosetPartition {
  std::vector<std::vector<int>> upper_cosets;  // B-cosets partitioning A
  std::vector<std::vector<int>> lower_cosets;  // A-cosets partitioning B
};

namespace detail {

// Partition a class by a coset-of operator; verifies disjoint-or-equal
// and membership, orders blocks by least element.
template <typename CosetOf>
inline std::vector<std::vector<int>> coset_blocks(const SkewLattice& a,
                                                  const std::vector<int>& cls,
                                                  CosetOf coset_of) {
  std::vector<std::vector<int>> blocks;
  std::set<int> assigned;
  for (int e : cls) {
    if (assigned.count(e)) continue;
    std::vector<int> coset = coset_of(e);
    std::sort(coset.begin(), coset.end());
    coset.erase(std::unique(coset.begin(), coset.end()), coset.end());
    if (!std::binary_search(coset.begin(), coset.end(), e))
      throw InternalError("element " + a.name(e) + " missing from its coset");
    for (int x : coset) {
      if (assigned.count(x))
        throw InternalError("cosets fail to partition the class");
      assigned.insert(x);
    }
    blocks.push_back(std::move(coset));
  }
  // every member of a block must reproduce the same block
  for (const auto& b : blocks)
    for (int e : b) {
      auto again = coset_of(e);
      std::sort(again.begin(), again.end());
      again.erase(std::unique(again.begin(), again.end()), again.end());
      if (again != b) throw InternalError("cosets are not well defined");
    }
  return blocks;
}

inline void check_rectangular_subalgebra(const SkewLattice& a,
                                         const std::vector<int>& coset) {
  std::set<int> in(coset.begin(), coset.end());
  for (int x : coset)
    for (int y : coset) {
      if (!in.count(a.meet(x, y)) || !in.count(a.join(x, y)))
        throw InternalError("coset is not a subalgebra");
      if (a.meet(x, y, x) != x)
        throw InternalError("coset is not rectangular");
    }
}

}  // namespace detail

// For a primitive pair A > B: the A-cosets in B are {a^b^a | a in A} and
// the B-cosets in A are {bvavb | b in B} (one-variable forms). All cosets
// in both directions must share one cardinality.
inline CosetPartition coset_partitions(const SkewChain& chain) {
  if (chain.classes.size() != 2)
    throw std::invalid_argument("coset_partitions expects a 2-term chain");
  const SkewLattice& a = *chain.alg;
  const auto& upper = chain.classes[0];
  const auto& lower = chain.classes[1];

  CosetPartition cp;
  cp.lower_cosets = detail::coset_blocks(a, lower, [&](int b) {
    std::vector<int> c;
    for (int u : upper) c.push_back(a.meet(a.meet(u, b), u));
    return c;
  });
  cp.upper_cosets = detail::coset_blocks(a, upper, [&](int x) {
    std::vector<int> c;
    for (int b : lower) c.push_back(a.join(a.join(b, x), b));
    return c;
  });

  const std::size_t size0 = cp.lower_cosets[0].size();
  for (const auto* side : {&cp.upper_cosets, &cp.lower_cosets})
    for (const auto& c : *side)
      if (c.size() != size0)
        throw InternalError("cosets of one pair differ in cardinality");

  for (const auto* side : {&cp.upper_cosets, &cp.lower_cosets})
    for (const auto& c : *side) detail::check_rectangular_subalgebra(a, c);

  return cp;
}

// Two-variable coset forms {a ^ b ^ a' | a,a' in A}; provably equal to
// the one-variable forms. Recomputed only by verification passes.
inline std::vector<int> coset_two_variable_meet(const SkewLattice& a,
                                                const std::vector<int>& upper,
                                                int b) {
  std::set<int> c;
  for (int u : upper)
    for (int v : upper) c.insert(a.meet(a.meet(u, b), v));
  return {c.begin(), c.end()};
}

inline std::vector<int> coset_two_variable_join(const SkewLattice& a,
                                                const std::vector<int>& lower,
                                                int x) {
  std::set<int> c;
  for (int u : lower)
    for (int v : lower) c.insert(a.join(a.join(u, x), v));
  return {c.begin(), c.end()};
}

// ------------------------------------------------------------------------
// Coset bijections as partial bijections between D-classes

struct PartialBijection {
  int source_class = -1;  // D-class ids under the canonical D partition
  int target_class = -1;
  std::vector<std::pair<int, int>> pairs;  // (upper, lower), upper > lower

  bool empty() const { return pairs.empty(); }
  std::optional<int> image_of(int x) const {
    for (const auto& [u, l] : pairs)
      if (u == x) return l;
    return std::nullopt;
  }
};

namespace detail {

inline void verify_coset_bijection(const SkewLattice& a,
                                   const std::vector<int>& dom,
                                   const std::vector<int>& img,
                                   const PartialBijection& pb) {
  if (pb.pairs.size() != dom.size() || dom.size() != img.size())
    throw InternalError("coset bijection is not bijective");
  std::set<int> seen;
  for (const auto& [u, l] : pb.pairs) {
    if (!std::binary_search(img.begin(), img.end(), l) || seen.count(l))
      throw InternalError("coset bijection is not bijective");
    seen.insert(l);
    if (!(a.join(u, l) == u && a.join(l, u) == u))
      throw InternalError("coset bijection violates the order");
  }
  // the map must not depend on the chosen image-coset element, and the
  // inverse must be bvxvb for every x in the domain coset
  for (const auto& [u, l] : pb.pairs) {
    for (int y : img)
      if (a.meet(a.meet(u, y), u) != l)
        throw InternalError("coset bijection depends on the image element");
    for (int x : dom)
      if (a.join(a.join(l, x), l) != u)
        throw InternalError("coset bijection inverse form fails");
  }
  // isomorphism between the coset subalgebras
  auto img_of = [&](int x) { return *pb.image_of(x); };
  for (int x : dom)
    for (int y : dom) {
      if (img_of(a.meet(x, y)) != a.meet(img_of(x), img_of(y)) ||
          img_of(a.join(x, y)) != a.join(img_of(x), img_of(y)))
        throw InternalError("coset bijection is not an isomorphism");
    }
}

}  // namespace detail

// One bijection per (B-coset in A, A-coset in B) pair, in canonical order:
// phi(x) = x ^ y ^ x for x in the domain coset and any y in the image coset.
inline std::vector<PartialBijection> coset_bijections(const SkewChain& chain) {
  const SkewLattice& a = *chain.alg;
  const auto cp = coset_partitions(chain);
  const auto g = green_partitions(a);
  const int src = g.d.class_of(chain.classes[0][0]);
  const int dst = g.d.class_of(chain.classes[1][0]);

  std::vector<PartialBijection> out;
  for (const auto& dom : cp.upper_cosets)
    for (const auto& img : cp.lower_cosets) {
      PartialBijection pb;
      pb.source_class = src;
      pb.target_class = dst;
      for (int x : dom) pb.pairs.emplace_back(x, a.meet(a.meet(x, img[0]), x));
      detail::verify_coset_bijection(a, dom, img, pb);
      out.push_back(std::move(pb));
    }
  return out;
}

// Relational composition of partial bijections; may be empty.
inline PartialBijection compose_bijections(const PartialBijection& psi,
                                           const PartialBijection& phi) {
  if (phi.target_class != psi.source_class)
    throw std::invalid_argument("compose_bijections: class mismatch");
  PartialBijection out;
  out.source_class = phi.source_class;
  out.target_class = psi.target_class;
  for (const auto& [x, mid] : phi.pairs)
    if (auto y = psi.image_of(mid)) out.pairs.emplace_back(x, *y);
  return out;
}

// ------------------------------------------------------------------------
// Parallelism of strictly ordered pairs

namespace detail {

inline void require_strict(const SkewLattice& a, std::pair<int, int> p) {
  auto [x, y] = p;
  if (x == y || a.join(x, y) != x || a.join(y, x) != x)
    throw std::invalid_argument("pair (" + a.name(x) + "," + a.name(y) +
                                ") is not strictly ordered");
}

inline bool same_d(const SkewLattice& a, int x, int y) {
  return a.meet(x, y, x) == x && a.meet(y, x, y) == y;
}

}  // namespace detail

// a > b || a' > b' iff a D a', b D b', a' = b'vavb' and b' = a'^b^a'.
// The mirrored form (a = bva'vb, b = a^b'^a) must agree by regularity;
// that symmetry is asserted here, not assumed.
inline bool are_parallel(const SkewLattice& a, std::pair<int, int> p1,
                         std::pair<int, int> p2) {
  detail::require_strict(a, p1);
  detail::require_strict(a, p2);
  const auto [x, y] = p1;
  const auto [x2, y2] = p2;
  if (!detail::same_d(a, x, x2) || !detail::same_d(a, y, y2)) return false;
  const bool fwd = x2 == a.join(y2, x, y2) && y2 == a.meet(x2, y, x2);
  const bool bwd = x == a.join(y, x2, y) && y == a.meet(x, y2, x);
  if (fwd != bwd)
    throw InternalError("parallelism is not symmetric at (" + a.name(x) + ">" +
                        a.name(y) + ", " + a.name(x2) + ">" + a.name(y2) + ")");
  return fwd;
}

// The coset bijection containing the strict pair (x, y), built from the
// coset recipe: domain = D_y-coset of x, u -> u^y^u.
inline PartialBijection coset_bijection_through(const SkewLattice& a,
                                                const GreenPartitions& g,
                                                int x, int y) {
  detail::require_strict(a, {x, y});
  const auto& yclass = g.d.members(g.d.class_of(y));
  std::set<int> dom;
  for (int b : yclass) dom.insert(a.join(a.join(b, x), b));
  PartialBijection pb;
  pb.source_class = g.d.class_of(x);
  pb.target_class = g.d.class_of(y);
  for (int u : dom) pb.pairs.emplace_back(u, a.meet(a.meet(u, y), u));
  return pb;
}

// Equivalence classes of parallelism over all strictly ordered pairs.
// Verifies on the way out: the classes, read as relations, are exactly the
// coset bijections; within a class a = a' iff b = b'; stacked classes
// compose; and a > a^b^a || bvavb > b whenever a is strictly
// preorder-above b.
inline std::vector<PartialBijection> parallel_classes(const SkewLattice& a) {
  const int n = a.size();
  const auto g = green_partitions(a);
  const auto ord = compute_orders(a);

  std::vector<std::pair<int, int>> all_pairs;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (ord.gt(x, y)) all_pairs.emplace_back(x, y);

  std::vector<int> cls_of(all_pairs.size(), -1);
  std::vector<PartialBijection> classes;
  for (std::size_t i = 0; i < all_pairs.size(); ++i) {
    if (cls_of[i] >= 0) continue;
    const int id = static_cast<int>(classes.size());
    PartialBijection pb;
    pb.source_class = g.d.class_of(all_pairs[i].first);
    pb.target_class = g.d.class_of(all_pairs[i].second);
    for (std::size_t j = i; j < all_pairs.size(); ++j) {
      if (cls_of[j] >= 0) continue;
      if (are_parallel(a, all_pairs[i], all_pairs[j])) {
        cls_of[j] = id;
        pb.pairs.push_back(all_pairs[j]);
      }
    }
    classes.push_back(std::move(pb));
  }

  // equivalence: all members of a class pairwise parallel, and no member
  // parallel to a member of another class
  for (std::size_t i = 0; i < all_pairs.size(); ++i)
    for (std::size_t j = 0; j < all_pairs.size(); ++j)
      if (are_parallel(a, all_pairs[i], all_pairs[j]) !=
          (cls_of[i] == cls_of[j]))
        throw InternalError("parallelism is not an equivalence relation");

  // within a class, equal uppers iff equal lowers
  for (const auto& c : classes) {
    std::set<int> ups, downs;
    for (const auto& [u, l] : c.pairs) {
      ups.insert(u);
      downs.insert(l);
    }
    if (ups.size() != c.pairs.size() || downs.size() != c.pairs.size())
      throw InternalError("a parallel class is not a partial bijection");
  }

  // main clause: classes coincide with coset bijections
  {
    std::set<std::vector<std::pair<int, int>>> from_classes, from_cosets;
    for (auto c : classes) {
      std::sort(c.pairs.begin(), c.pairs.end());
      from_classes.insert(c.pairs);
    }
    for (const auto& pair_chain : primitive_pairs(a))
      for (auto& b : coset_bijections(pair_chain)) {
        std::sort(b.pairs.begin(), b.pairs.end());
        from_cosets.insert(b.pairs);
      }
    if (from_classes != from_cosets)
      throw InternalError("parallel classes differ from coset bijections");
  }

  // stacking: composable parallel pairs stay parallel
  for (const auto& c1 : classes)
    for (const auto& c2 : classes) {
      if (c1.target_class != c2.source_class) continue;
      for (const auto& [x, mid1] : c1.pairs)
        for (const auto& [x2, mid2] : c1.pairs)
          for (const auto& [m1, z] : c2.pairs)
            for (const auto& [m2, z2] : c2.pairs)
              if (m1 == mid1 && m2 == mid2 &&
                  !are_parallel(a, {x, z}, {x2, z2}))
                throw InternalError("parallelism does not stack");
    }

  // every strict preorder pair sits inside a canonical parallel pair
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!ord.pre_gt(x, y)) continue;
      if (!are_parallel(a, {x, a.meet(x, y, x)}, {a.join(y, x, y), y}))
        throw InternalError("canonical pair is not parallel at (" + a.name(x) +
                            "," + a.name(y) + ")");
    }

  return classes;
}

// ------------------------------------------------------------------------
// AC-decomposition of the middle class of a 3-term chain

struct ACDecomposition {
  std::vector<std::vector<int>> components;  // partition of B
  std::vector<std::vector<int>> ac_cosets;   // nonempty A-coset n C-coset
};

inline ACDecomposition ac_decomposition(const SkewChain& chain) {
  if (chain.classes.size() != 3)
    throw std::invalid_argument("ac_decomposition expects a 3-term chain");
  const SkewLattice& a = *chain.alg;
  SkewChain ab{&a, {chain.classes[0], chain.classes[1]}};
  SkewChain bc{&a, {chain.classes[1], chain.classes[2]}};
  const auto a_cosets = coset_partitions(ab).lower_cosets;   // A-cosets in B
  const auto c_cosets = coset_partitions(bc).upper_cosets;   // C-cosets in B

  // union-find over the middle class
  std::map<int, int> parent;
  for (int b : chain.classes[1]) parent[b] = b;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  for (const auto* side : {&a_cosets, &c_cosets})
    for (const auto& c : *side)
      for (std::size_t i = 1; i < c.size(); ++i) unite(c[0], c[i]);

  ACDecomposition out;
  std::map<int, int> comp_id;
  for (int b : chain.classes[1]) {  // members ascending => canonical order
    const int root = find(b);
    if (!comp_id.count(root)) {
      comp_id[root] = static_cast<int>(out.components.size());
      out.components.emplace_back();
    }
    out.components[comp_id[root]].push_back(b);
  }

  for (const auto& x : a_cosets)
    for (const auto& y : c_cosets) {
      std::vector<int> inter;
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                            std::back_inserter(inter));
      if (!inter.empty()) out.ac_cosets.push_back(std::move(inter));
    }
  std::sort(out.ac_cosets.begin(), out.ac_cosets.end());

  for (const auto& c : out.ac_cosets) {
    const int croot = find(c[0]);
    for (int e : c)
      if (find(e) != croot)
        throw InternalError("an AC-coset crosses two components");
  }
  return out;
}

// ------------------------------------------------------------------------
// Reflective chains and their factorization

struct ChainFactorization {
  bool reflective = false;
  // present iff the chain factors: isomorphism from the chain subalgebra
  // onto gen_chain(3) x R with R the top class as a rectangular algebra
  std::optional<ElementMap> iso;
};

inline ChainFactorization reflective_factorization(const SkewChain& chain) {
  if (chain.classes.size() != 3)
    throw std::invalid_argument("reflective_factorization expects a 3-term chain");
  const SkewLattice& alg = *chain.alg;
  const auto& top = chain.classes[0];
  const auto& mid = chain.classes[1];
  const auto& bot = chain.classes[2];

  SkewChain ab{&alg, {top, mid}};
  SkewChain bc{&alg, {mid, bot}};
  SkewChain ac{&alg, {top, bot}};
  const auto cp_ab = coset_partitions(ab);
  const auto cp_bc = coset_partitions(bc);
  const auto cp_ac = coset_partitions(ac);

  ChainFactorization out;
  // (1) top and bottom are full cosets of each other and full mid-cosets
  // in themselves; (2) the middle class is a single AC-component
  const bool full_of_each_other =
      cp_ac.upper_cosets.size() == 1 && cp_ac.lower_cosets.size() == 1;
  const bool full_mid_cosets =
      cp_ab.upper_cosets.size() == 1 && cp_bc.lower_cosets.size() == 1;
  const bool single_component = ac_decomposition(chain).components.size() == 1;
  out.reflective = full_of_each_other && full_mid_cosets && single_component;
  if (!out.reflective) return out;

  // factors iff the middle class is a full coset in both directions
  if (cp_ab.lower_cosets.size() != 1 || cp_bc.upper_cosets.size() != 1)
    return out;

  std::vector<int> chain_elems = top;
  chain_elems.insert(chain_elems.end(), mid.begin(), mid.end());
  chain_elems.insert(chain_elems.end(), bot.begin(), bot.end());
  std::sort(chain_elems.begin(), chain_elems.end());
  auto sub = induced_subalgebra(alg, chain_elems);
  auto rect = induced_subalgebra(alg, top);
  const int m = static_cast<int>(top.size());

  auto product = direct_product(gen_chain(3), rect.algebra);
  // gen_chain(3): e1 < e2 < e3, so the top class maps to level index 2
  std::vector<int> map(chain_elems.size(), -1);
  auto place = [&](int elem, int level, int top_mate) {
    map[sub.new_index[elem]] = level * m + rect.new_index[top_mate];
  };
  for (int x : top) place(x, 2, x);
  for (int y : mid) {
    int pre = -1;  // the unique element of the top class above y
    for (int x : top)
      if (alg.meet(alg.meet(x, y), x) == y) pre = x;
    if (pre < 0) throw InternalError("middle element without a cover in a full coset");
    place(y, 1, pre);
  }
  for (int z : bot) {
    int pre = -1;
    for (int x : top)
      if (alg.meet(alg.meet(x, z), x) == z) pre = x;
    if (pre < 0) throw InternalError("bottom element without a cover in a full coset");
    place(z, 0, pre);
  }
  ElementMap em{sub.algebra, product, std::move(map)};
  if (sub.algebra.size() != product.size() || !check_embedding(em))
    throw InternalError("full-coset reflective chain failed to factor");
  out.iso = std::move(em);
  return out;
}

}  // namespace skewlat
