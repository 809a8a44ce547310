#pragma once

// Core value type: a finite algebra with two binary operations given by
// Cayley tables, plus the law checker and the basic constructions
// (products, subalgebra closure, embeddings, quotients) that everything
// else builds on.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skewlat {

// Theorem-backed invariant breached; indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// quotient_by precondition failure; message carries the witness quadruple.
class CongruenceError : public std::runtime_error {
 public:
  explicit CongruenceError(const std::string& what)
      : std::runtime_error(what) {}
};

class LimitError : public std::runtime_error {
 public:
  explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

constexpr std::size_t kDefaultMaxCarrier = 4096;

struct SkewLattice {
  std::vector<std::string> names;
  std::vector<int> meet_table;  // row-major, entry [x*n+y] = x meet y
  std::vector<int> join_table;

  int size() const { return static_cast<int>(names.size()); }

  int meet(int x, int y) const { return meet_table[x * size() + y]; }
  int join(int x, int y) const { return join_table[x * size() + y]; }
  int meet(int x, int y, int z) const { return meet(meet(x, y), z); }
  int join(int x, int y, int z) const { return join(join(x, y), z); }

  const std::string& name(int x) const { return names[x]; }
  int index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
      if (names[i] == label) return i;
    throw std::invalid_argument("unknown element label: " + label);
  }

  bool operator==(const SkewLattice& other) const = default;
};

// Builds an algebra from tables, checking shape and entry range only
// (laws are validate()'s job).
inline SkewLattice make_algebra(std::vector<std::string> names,
                                std::vector<int> meet_table,
                                std::vector<int> join_table) {
  const std::size_t n = names.size();
  if (n == 0) throw std::invalid_argument("empty carrier");
  {
    std::set<std::string> seen(names.begin(), names.end());
    if (seen.size() != n)
      throw std::invalid_argument("duplicate element name");
  }
  if (meet_table.size() != n * n || join_table.size() != n * n)
    throw std::invalid_argument("table size mismatch");
  for (const auto* t : {&meet_table, &join_table})
    for (int v : *t)
      if (v < 0 || v >= static_cast<int>(n))
        throw std::invalid_argument("table entry out of range");
  return SkewLattice{std::move(names), std::move(meet_table),
                     std::move(join_table)};
}

// -------------------------------------------------------------------------
// Partitions of the carrier (Green's classes, congruences, ...).
// Classes are canonically ordered by least member; members ascending.

class Partition {
 public:
  Partition() = default;

  static Partition from_class_ids(std::vector<int> raw_ids) {
    Partition p;
    const int n = static_cast<int>(raw_ids.size());
    std::vector<int> remap(n, -1);
    p.class_of_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
      int r = raw_ids[i];
      if (r < 0 || r >= n) throw std::invalid_argument("bad class id");
      if (remap[r] < 0) {
        remap[r] = static_cast<int>(p.classes_.size());
        p.classes_.emplace_back();
      }
      p.class_of_[i] = remap[r];
      p.classes_[remap[r]].push_back(i);
    }
    return p;
  }

  template <typename SamePred>
  static Partition from_predicate(int n, SamePred same) {
    std::vector<int> ids(n, -1);
    int next = 0;
    for (int i = 0; i < n; ++i) {
      if (ids[i] >= 0) continue;
      ids[i] = next;
      for (int j = i + 1; j < n; ++j)
        if (ids[j] < 0 && same(i, j)) ids[j] = next;
      ++next;
    }
    return from_class_ids(std::move(ids));
  }

  static Partition identity(int n) {
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    return from_class_ids(std::move(ids));
  }

  int size() const { return static_cast<int>(class_of_.size()); }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  int class_of(int x) const { return class_of_[x]; }
  bool same(int x, int y) const { return class_of_[x] == class_of_[y]; }
  const std::vector<int>& members(int cls) const { return classes_[cls]; }
  const std::vector<std::vector<int>>& classes() const { return classes_; }

  bool operator==(const Partition& other) const {
    return class_of_ == other.class_of_;
  }

  bool is_identity() const { return num_classes() == size(); }

 private:
  std::vector<int> class_of_;
  std::vector<std::vector<int>> classes_;
};

// -------------------------------------------------------------------------
// Law checking

struct LawFailure {
  std::string law;
  std::vector<std::string> witness;  // element labels
};

struct ValidationReport {
  bool ok = true;
  std::vector<LawFailure> failures;
};

namespace detail {

inline std::vector<std::string> labels(const SkewLattice& a,
                                       std::initializer_list<int> xs) {
  std::vector<std::string> out;
  for (int x : xs) out.push_back(a.name(x));
  return out;
}

}  // namespace detail

// Checks every skew-lattice law exhaustively and records the first witness
// per failed law. Dualities are re-checked even though absorption implies
// them; regularity is a theorem for skew lattices, so a regularity failure
// on an otherwise clean table is flagged as an internal inconsistency.
inline ValidationReport validate(const SkewLattice& a) {
  ValidationReport rep;
  const int n = a.size();
  auto fail = [&](std::string law, std::initializer_list<int> w) {
    rep.failures.push_back({std::move(law), detail::labels(a, w)});
  };

  // idempotency
  for (auto [op, lawname] :
       {std::pair{&SkewLattice::meet_table, "meet-idempotent"},
        std::pair{&SkewLattice::join_table, "join-idempotent"}}) {
    const auto& t = a.*op;
    for (int x = 0; x < n; ++x)
      if (t[x * n + x] != x) {
        fail(lawname, {x});
        break;
      }
  }

  // associativity
  for (auto [op, lawname] :
       {std::pair{&SkewLattice::meet_table, "meet-associative"},
        std::pair{&SkewLattice::join_table, "join-associative"}}) {
    const auto& t = a.*op;
    bool hit = false;
    for (int x = 0; x < n && !hit; ++x)
      for (int y = 0; y < n && !hit; ++y)
        for (int z = 0; z < n && !hit; ++z)
          if (t[t[x * n + y] * n + z] != t[x * n + t[y * n + z]]) {
            fail(lawname, {x, y, z});
            hit = true;
          }
  }

  // absorption, all four variants
  struct Absorb {
    const char* law;
    int (*eval)(const SkewLattice&, int, int);
  };
  const Absorb absorbs[] = {
      {"absorption-xm-xjy", [](const SkewLattice& a, int x, int y) {
         return a.meet(x, a.join(x, y));
       }},
      {"absorption-yjx-mx", [](const SkewLattice& a, int x, int y) {
         return a.meet(a.join(y, x), x);
       }},
      {"absorption-xj-xmy", [](const SkewLattice& a, int x, int y) {
         return a.join(x, a.meet(x, y));
       }},
      {"absorption-ymx-jx", [](const SkewLattice& a, int x, int y) {
         return a.join(a.meet(y, x), x);
       }},
  };
  for (const auto& ab : absorbs) {
    bool hit = false;
    for (int x = 0; x < n && !hit; ++x)
      for (int y = 0; y < n && !hit; ++y)
        if (ab.eval(a, x, y) != x) {
          fail(ab.law, {x, y});
          hit = true;
        }
  }

  // dualities
  {
    bool hit1 = false, hit2 = false;
    for (int x = 0; x < n && !(hit1 && hit2); ++x)
      for (int y = 0; y < n && !(hit1 && hit2); ++y) {
        if (!hit1 && ((a.meet(x, y) == x) != (a.join(x, y) == y))) {
          fail("duality-1", {x, y});
          hit1 = true;
        }
        if (!hit2 && ((a.meet(x, y) == y) != (a.join(x, y) == x))) {
          fail("duality-2", {x, y});
          hit2 = true;
        }
      }
  }

  const bool clean_so_far = rep.failures.empty();

  // regularity: x o y o x o z o x = x o y o z o x, both operations
  for (auto [op, lawname] :
       {std::pair{&SkewLattice::meet_table, "meet-regular"},
        std::pair{&SkewLattice::join_table, "join-regular"}}) {
    const auto& t = a.*op;
    bool hit = false;
    for (int x = 0; x < n && !hit; ++x)
      for (int y = 0; y < n && !hit; ++y) {
        const int xy = t[x * n + y];
        const int xyx = t[xy * n + x];
        for (int z = 0; z < n && !hit; ++z) {
          const int lhs = t[t[xyx * n + z] * n + x];
          const int rhs = t[t[xy * n + z] * n + x];
          if (lhs != rhs) {
            fail(clean_so_far ? "regularity-theorem-violated" : lawname,
                 {x, y, z});
            hit = true;
          }
        }
      }
  }

  rep.ok = rep.failures.empty();
  return rep;
}

// -------------------------------------------------------------------------
// Constructions on algebras

inline SkewLattice direct_product(const SkewLattice& a, const SkewLattice& b,
                                  std::size_t max_carrier = kDefaultMaxCarrier) {
  const std::size_t na = a.size(), nb = b.size();
  if (na * nb > max_carrier)
    throw LimitError("product carrier " + std::to_string(na * nb) +
                     " exceeds max " + std::to_string(max_carrier));
  const int n = static_cast<int>(na * nb);
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      names.push_back(a.names[i] + "|" + b.names[j]);
  std::vector<int> meet(n * n), join(n * n);
  auto pack = [&](int i, int j) { return i * static_cast<int>(nb) + j; };
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < na; ++k)
        for (std::size_t l = 0; l < nb; ++l) {
          const int x = pack(static_cast<int>(i), static_cast<int>(j));
          const int y = pack(static_cast<int>(k), static_cast<int>(l));
          meet[x * n + y] = pack(a.meet(static_cast<int>(i), static_cast<int>(k)),
                                 b.meet(static_cast<int>(j), static_cast<int>(l)));
          join[x * n + y] = pack(a.join(static_cast<int>(i), static_cast<int>(k)),
                                 b.join(static_cast<int>(j), static_cast<int>(l)));
        }
  return SkewLattice{std::move(names), std::move(meet), std::move(join)};
}

// Least superset of seed closed under both operations.
inline std::vector<int> subalgebra_closure(const SkewLattice& a,
                                           const std::vector<int>& seed) {
  if (seed.empty()) throw std::invalid_argument("empty seed");
  const int n = a.size();
  std::vector<char> in(n, 0);
  std::vector<int> work;
  for (int s : seed) {
    if (s < 0 || s >= n) throw std::invalid_argument("seed index out of range");
    if (!in[s]) {
      in[s] = 1;
      work.push_back(s);
    }
  }
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (int v : {a.meet(work[i], work[j]), a.meet(work[j], work[i]),
                    a.join(work[i], work[j]), a.join(work[j], work[i])})
        if (!in[v]) {
          in[v] = 1;
          work.push_back(v);
        }
  std::sort(work.begin(), work.end());
  return work;
}

// Restriction of the algebra to a closed subset. Elements keep their names;
// returns the sub-algebra together with the old->new index map.
struct InducedSubalgebra {
  SkewLattice algebra;
  std::vector<int> new_index;  // full-carrier sized, -1 outside the subset
};

inline InducedSubalgebra induced_subalgebra(const SkewLattice& a,
                                            const std::vector<int>& elems) {
  const int n = a.size();
  std::vector<int> newidx(n, -1);
  const int m = static_cast<int>(elems.size());
  for (int i = 0; i < m; ++i) {
    if (elems[i] < 0 || elems[i] >= n)
      throw std::invalid_argument("element index out of range");
    newidx[elems[i]] = i;
  }
  std::vector<std::string> names;
  names.reserve(m);
  for (int e : elems) names.push_back(a.names[e]);
  std::vector<int> meet(m * m), join(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int mv = newidx[a.meet(elems[i], elems[j])];
      const int jv = newidx[a.join(elems[i], elems[j])];
      if (mv < 0 || jv < 0)
        throw std::invalid_argument("subset is not closed");
      meet[i * m + j] = mv;
      join[i * m + j] = jv;
    }
  return {SkewLattice{std::move(names), std::move(meet), std::move(join)},
          std::move(newidx)};
}

// -------------------------------------------------------------------------
// Element maps (subalgebra / isomorphism witnesses)

struct ElementMap {
  SkewLattice source;
  SkewLattice target;
  std::vector<int> map;  // source index -> target index
};

// True iff the map is injective and preserves both operations entrywise.
inline bool check_embedding(const ElementMap& m) {
  const int ns = m.source.size(), nt = m.target.size();
  if (static_cast<int>(m.map.size()) != ns)
    throw std::invalid_argument("map not total on source carrier");
  for (int v : m.map)
    if (v < 0 || v >= nt) throw std::invalid_argument("map index out of range");
  std::vector<char> hit(nt, 0);
  for (int v : m.map) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  for (int x = 0; x < ns; ++x)
    for (int y = 0; y < ns; ++y) {
      if (m.map[m.source.meet(x, y)] != m.target.meet(m.map[x], m.map[y]))
        return false;
      if (m.map[m.source.join(x, y)] != m.target.join(m.map[x], m.map[y]))
        return false;
    }
  return true;
}

// -------------------------------------------------------------------------
// Quotients

// Quotient by an equivalence. Well-definedness of the induced tables is
// checked here; a failure throws CongruenceError naming a witness quadruple.
// Class names are the member names joined by '+'.
inline SkewLattice quotient_by(const SkewLattice& a, const Partition& p) {
  const int n = a.size();
  if (p.size() != n) throw std::invalid_argument("partition size mismatch");
  const int k = p.num_classes();
  std::vector<int> meet(k * k, -1), join(k * k, -1);
  // first representative pair per class pair, for witness reporting
  std::vector<std::pair<int, int>> first(k * k, {-1, -1});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int cx = p.class_of(x), cy = p.class_of(y);
      const int cm = p.class_of(a.meet(x, y));
      const int cj = p.class_of(a.join(x, y));
      auto& m = meet[cx * k + cy];
      auto& j = join[cx * k + cy];
      auto& f = first[cx * k + cy];
      if (m < 0) {
        m = cm;
        j = cj;
        f = {x, y};
      } else if (m != cm || j != cj) {
        std::ostringstream os;
        os << "not a congruence: classes of (" << a.name(f.first) << ","
           << a.name(f.second) << ") and (" << a.name(x) << "," << a.name(y)
           << ") agree but their " << (m != cm ? "meets" : "joins")
           << " land in different classes";
        throw CongruenceError(os.str());
      }
    }
  std::vector<std::string> names;
  names.reserve(k);
  for (int c = 0; c < k; ++c) {
    std::string nm;
    for (int e : p.members(c)) {
      if (!nm.empty()) nm += "+";
      nm += a.name(e);
    }
    names.push_back(std::move(nm));
  }
  return SkewLattice{std::move(names), std::move(meet), std::move(join)};
}

}  // namespace skewlat
