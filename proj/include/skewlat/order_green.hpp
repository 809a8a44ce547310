#pragma once

// Natural preorder and partial order, Green's relations R, L, D,
// handedness, maximal images and the pullback of the Second Decomposition
// Theorem. Relations are computed from their defining equations; wherever
// an independent second route exists it is evaluated too and compared.

#include <string>
#include <vector>

#include "skewlat/skew_lattice.hpp"

namespace skewlat {

struct OrderRelations {
  int n = 0;
  std::vector<char> preorder_geq;  // [x*n+y] : x >=~ y   (x v y v x = x)
  std::vector<char> order_geq;     // [x*n+y] : x >= y    (x v y = x = y v x)

  bool preceq(int y, int x) const { return preorder_geq[x * n + y] != 0; }
  bool pre_geq(int x, int y) const { return preorder_geq[x * n + y] != 0; }
  bool geq(int x, int y) const { return order_geq[x * n + y] != 0; }
  bool gt(int x, int y) const { return x != y && geq(x, y); }
  // strict preorder x >~ y: x >=~ y but not y >=~ x
  bool pre_gt(int x, int y) const { return pre_geq(x, y) && !pre_geq(y, x); }
};

inline OrderRelations compute_orders(const SkewLattice& a) {
  const int n = a.size();
  OrderRelations r;
  r.n = n;
  r.preorder_geq.assign(n * n, 0);
  r.order_geq.assign(n * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const bool pre_join = a.join(x, y, x) == x;
      const bool pre_meet = a.meet(y, x, y) == y;
      if (pre_join != pre_meet)
        throw InternalError("preorder definitional forms disagree at (" +
                            a.name(x) + "," + a.name(y) + ")");
      const bool ord_join = a.join(x, y) == x && a.join(y, x) == x;
      const bool ord_meet = a.meet(x, y) == y && a.meet(y, x) == y;
      if (ord_join != ord_meet)
        throw InternalError("order definitional forms disagree at (" +
                            a.name(x) + "," + a.name(y) + ")");
      r.preorder_geq[x * n + y] = pre_join;
      r.order_geq[x * n + y] = ord_join;
    }
  return r;
}

struct GreenPartitions {
  Partition r, l, d;
};

namespace detail {

inline bool is_congruence(const SkewLattice& a, const Partition& p) {
  const int n = a.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!p.same(x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (!p.same(a.meet(x, z), a.meet(y, z))) return false;
        if (!p.same(a.meet(z, x), a.meet(z, y))) return false;
        if (!p.same(a.join(x, z), a.join(y, z))) return false;
        if (!p.same(a.join(z, x), a.join(z, y))) return false;
      }
    }
  return true;
}

}  // namespace detail

// R, L, D from their defining equivalences. Verified on the way out:
// each is a congruence, D coincides with mutual preorder, D = R o L = L o R,
// R n L is trivial, and every D-class is rectangular.
inline GreenPartitions green_partitions(const SkewLattice& a) {
  const int n = a.size();
  GreenPartitions g;
  g.r = Partition::from_predicate(n, [&](int x, int y) {
    return a.meet(x, y) == y && a.meet(y, x) == x;
  });
  g.l = Partition::from_predicate(n, [&](int x, int y) {
    return a.meet(x, y) == x && a.meet(y, x) == y;
  });
  g.d = Partition::from_predicate(n, [&](int x, int y) {
    return a.meet(x, y, x) == x && a.meet(y, x, y) == y;
  });

  const auto ord = compute_orders(a);
  auto d_by_preorder = Partition::from_predicate(
      n, [&](int x, int y) { return ord.pre_geq(x, y) && ord.pre_geq(y, x); });
  if (!(g.d == d_by_preorder))
    throw InternalError("D from its identity and D from the preorder differ");

  const std::pair<const Partition*, const char*> named[] = {
      {&g.r, "R"}, {&g.l, "L"}, {&g.d, "D"}};
  for (const auto& [p, nm] : named)
    if (!detail::is_congruence(a, *p))
      throw InternalError(std::string(nm) + " is not a congruence");

  // L o R = R o L = D and R n L trivial
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool rl = false, lr = false;
      for (int z = 0; z < n; ++z) {
        rl = rl || (g.r.same(x, z) && g.l.same(z, y));
        lr = lr || (g.l.same(x, z) && g.r.same(z, y));
      }
      if (rl != g.d.same(x, y) || lr != g.d.same(x, y))
        throw InternalError("R o L / L o R do not compose to D");
      if (g.r.same(x, y) && g.l.same(x, y) && x != y)
        throw InternalError("R n L is not the identity relation");
    }

  for (const auto& cls : g.d.classes())
    for (int x : cls)
      for (int y : cls)
        if (a.meet(x, y, x) != x)
          throw InternalError("a D-class is not rectangular");

  return g;
}

struct HandednessFlags {
  bool rectangular = false;
  bool left_handed = false;
  bool right_handed = false;
};

inline HandednessFlags handedness(const SkewLattice& a) {
  const int n = a.size();
  HandednessFlags f{true, true, true};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int mxyx = a.meet(x, y, x), jxyx = a.join(x, y, x);
      if (mxyx != x || jxyx != x) f.rectangular = false;
      if (mxyx != a.meet(x, y) || jxyx != a.join(y, x)) f.left_handed = false;
      if (mxyx != a.meet(y, x) || jxyx != a.join(x, y)) f.right_handed = false;
    }
  return f;
}

struct MaximalImages {
  SkewLattice s_over_r;  // maximal left-handed image
  SkewLattice s_over_l;  // maximal right-handed image
  SkewLattice s_over_d;  // maximal lattice image
  GreenPartitions green;
};

inline MaximalImages maximal_images(const SkewLattice& a) {
  MaximalImages mi;
  mi.green = green_partitions(a);
  mi.s_over_r = quotient_by(a, mi.green.r);
  mi.s_over_l = quotient_by(a, mi.green.l);
  mi.s_over_d = quotient_by(a, mi.green.d);
  if (!handedness(mi.s_over_r).left_handed)
    throw InternalError("S/R is not left-handed");
  if (!handedness(mi.s_over_l).right_handed)
    throw InternalError("S/L is not right-handed");
  const int k = mi.s_over_d.size();
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      if (mi.s_over_d.meet(x, y) != mi.s_over_d.meet(y, x) ||
          mi.s_over_d.join(x, y) != mi.s_over_d.join(y, x))
        throw InternalError("S/D is not commutative");
  return mi;
}

// Second Decomposition Theorem check: x -> (R_x, L_x) is an isomorphism
// onto the fibred product of S/R and S/L over S/D.
inline bool verify_pullback(const SkewLattice& a) {
  const auto g = green_partitions(a);
  const int n = a.size();

  // D-class of each R-class / L-class
  std::vector<int> d_of_r(g.r.num_classes()), d_of_l(g.l.num_classes());
  for (int c = 0; c < g.r.num_classes(); ++c)
    d_of_r[c] = g.d.class_of(g.r.members(c)[0]);
  for (int c = 0; c < g.l.num_classes(); ++c)
    d_of_l[c] = g.d.class_of(g.l.members(c)[0]);

  std::map<std::pair<int, int>, int> fibre_index;
  std::vector<std::pair<int, int>> fibre;
  for (int i = 0; i < g.r.num_classes(); ++i)
    for (int j = 0; j < g.l.num_classes(); ++j)
      if (d_of_r[i] == d_of_l[j]) {
        fibre_index[{i, j}] = static_cast<int>(fibre.size());
        fibre.emplace_back(i, j);
      }

  if (static_cast<int>(fibre.size()) != n) return false;

  const auto sr = quotient_by(a, g.r);
  const auto sl = quotient_by(a, g.l);
  std::vector<int> image(n);
  std::vector<char> hit(fibre.size(), 0);
  for (int x = 0; x < n; ++x) {
    auto it = fibre_index.find({g.r.class_of(x), g.l.class_of(x)});
    if (it == fibre_index.end()) return false;
    image[x] = it->second;
    if (hit[it->second]) return false;
    hit[it->second] = 1;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto [rm, lm] = fibre[image[a.meet(x, y)]];
      if (rm != sr.meet(g.r.class_of(x), g.r.class_of(y))) return false;
      if (lm != sl.meet(g.l.class_of(x), g.l.class_of(y))) return false;
      const auto [rj, lj] = fibre[image[a.join(x, y)]];
      if (rj != sr.join(g.r.class_of(x), g.r.class_of(y))) return false;
      if (lj != sl.join(g.l.class_of(x), g.l.class_of(y))) return false;
    }
  return true;
}

}  // namespace skewlat
