#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "embedding_search.hpp"
#include "skewlat/cosets.hpp"
#include "skewlat/generators.hpp"

using namespace skewlat;

namespace {

std::vector<std::vector<std::string>> named(const SkewLattice& a,
                                            const std::vector<std::vector<int>>& b) {
  std::vector<std::vector<std::string>> out;
  for (const auto& blk : b) {
    std::vector<std::string> row;
    for (int e : blk) row.push_back(a.name(e));
    out.push_back(row);
  }
  return out;
}

SkewChain pair_of(const SkewLattice& a, int upper, int lower) {
  const auto g = green_partitions(a);
  return SkewChain{&a, {g.d.members(upper), g.d.members(lower)}};
}

}  // namespace

TEST_CASE("coset partitions of gen_xn(2)") {
  const auto a = gen_xn(2);
  SECTION("pair A > B") {
    const auto cp = coset_partitions(pair_of(a, 0, 1));
    REQUIRE(named(a, cp.upper_cosets) ==
            std::vector<std::vector<std::string>>{{"a1", "a2"}});
    REQUIRE(named(a, cp.lower_cosets) ==
            std::vector<std::vector<std::string>>{{"b1", "b2"}, {"b3", "b4"}});
  }
  SECTION("pair B > C: offset cosets") {
    const auto cp = coset_partitions(pair_of(a, 1, 2));
    REQUIRE(named(a, cp.upper_cosets) ==
            std::vector<std::vector<std::string>>{{"b1", "b4"}, {"b2", "b3"}});
    REQUIRE(named(a, cp.lower_cosets) ==
            std::vector<std::vector<std::string>>{{"c1", "c2"}});
  }
  SECTION("pair A > C: full cosets of each other") {
    const auto cp = coset_partitions(pair_of(a, 0, 2));
    REQUIRE(cp.upper_cosets.size() == 1);
    REQUIRE(cp.lower_cosets.size() == 1);
  }
}

TEST_CASE("cosets of a 2-chain are singletons") {
  const auto a = gen_chain(2);
  const auto cp = coset_partitions(pair_of(a, 1, 0));
  REQUIRE(cp.upper_cosets == std::vector<std::vector<int>>{{1}});
  REQUIRE(cp.lower_cosets == std::vector<std::vector<int>>{{0}});
}

TEST_CASE("coset bijections of gen_xn(2), pair A > B") {
  const auto a = gen_xn(2);
  const auto bij = coset_bijections(pair_of(a, 0, 1));
  auto v = [&](const char* s) { return a.index_of(s); };
  REQUIRE(bij.size() == 2);  // one domain coset x two image cosets
  const std::vector<std::pair<int, int>> first = {{v("a1"), v("b1")},
                                                  {v("a2"), v("b2")}};
  const std::vector<std::pair<int, int>> second = {{v("a1"), v("b3")},
                                                   {v("a2"), v("b4")}};
  REQUIRE(bij[0].pairs == first);
  REQUIRE(bij[1].pairs == second);
}

TEST_CASE("coset bijection for the A > C pair of gen_xn(1)") {
  const auto a = gen_xn(1);
  const auto bij = coset_bijections(pair_of(a, 0, 2));
  REQUIRE(bij.size() == 1);
  auto v = [&](const char* s) { return a.index_of(s); };
  REQUIRE(bij[0].pairs ==
          std::vector<std::pair<int, int>>{{v("a1"), v("c1")}, {v("a2"), v("c2")}});
}

TEST_CASE("composition of coset bijections") {
  const auto a = gen_xn(2);
  auto v = [&](const char* s) { return a.index_of(s); };
  const auto bij_ab = coset_bijections(pair_of(a, 0, 1));
  const auto bij_bc = coset_bijections(pair_of(a, 1, 2));

  SECTION("a composite properly inside its containing bijection") {
    // phi = {a1->b1, a2->b2}; psi = the bijection with domain {b2,b3}
    const auto& phi = bij_ab[0];
    const PartialBijection* psi = nullptr;
    for (const auto& b : bij_bc)
      if (b.image_of(v("b2"))) psi = &b;
    REQUIRE(psi != nullptr);
    REQUIRE(psi->pairs == std::vector<std::pair<int, int>>{{v("b2"), v("c2")},
                                                           {v("b3"), v("c1")}});
    const auto comp = compose_bijections(*psi, phi);
    REQUIRE(comp.pairs ==
            std::vector<std::pair<int, int>>{{v("a2"), v("c2")}});
    // proper subset of the full A -> C coset bijection
    const auto chi = coset_bijections(pair_of(a, 0, 2));
    REQUIRE(chi.size() == 1);
    REQUIRE(comp.pairs.size() < chi[0].pairs.size());
  }

  SECTION("composition with the full A -> C bijection roundtrips upper elements") {
    const auto chi = coset_bijections(pair_of(a, 0, 2))[0];
    // compose with an identity-like full bijection: A -> A domain is not a
    // coset pair, so check the relational identity instead
    const auto g = green_partitions(a);
    PartialBijection ident;
    ident.source_class = chi.source_class;
    ident.target_class = chi.source_class;
    for (int e : g.d.members(chi.source_class)) ident.pairs.emplace_back(e, e);
    const auto comp = compose_bijections(chi, ident);
    REQUIRE(comp.pairs == chi.pairs);
  }

  SECTION("disjoint domain and image give the empty composite") {
    const auto& phi = bij_ab[0];  // image {b1, b2}
    PartialBijection psi;         // partial bijection defined on {b3, b4} only
    psi.source_class = phi.target_class;
    psi.target_class = coset_bijections(pair_of(a, 1, 2))[0].target_class;
    psi.pairs = {{v("b3"), v("c1")}, {v("b4"), v("c2")}};
    const auto left = compose_bijections(psi, phi);
    REQUIRE(left.empty());
  }

  SECTION("class mismatch is rejected") {
    REQUIRE_THROWS_AS(compose_bijections(bij_ab[0], bij_ab[0]),
                      std::invalid_argument);
  }
}

TEST_CASE("are_parallel on gen_xn(2)") {
  const auto a = gen_xn(2);
  auto v = [&](const char* s) { return a.index_of(s); };
  REQUIRE(are_parallel(a, {v("a1"), v("c1")}, {v("a2"), v("c2")}));
  REQUIRE(are_parallel(a, {v("a1"), v("b1")}, {v("a1"), v("b1")}));
  REQUIRE(are_parallel(a, {v("a1"), v("b1")}, {v("a2"), v("b2")}));
  REQUIRE_FALSE(are_parallel(a, {v("a1"), v("b1")}, {v("a2"), v("b4")}));
  SECTION("non-strict pairs are rejected") {
    REQUIRE_THROWS_AS(are_parallel(a, {v("a1"), v("a1")}, {v("a2"), v("c2")}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(are_parallel(a, {v("a1"), v("b2")}, {v("a2"), v("c2")}),
                      std::invalid_argument);
  }
}

TEST_CASE("parallel classes partition the strict pairs and match bijections") {
  for (const auto& a : {gen_xn(2), gen_yn(2), gen_xn(1),
                        direct_product(gen_chain(2), gen_rectangular(2, 1))}) {
    const auto classes = parallel_classes(a);  // internal checks run here
    const auto ord = compute_orders(a);
    std::size_t strict = 0;
    for (int x = 0; x < a.size(); ++x)
      for (int y = 0; y < a.size(); ++y)
        if (ord.gt(x, y)) ++strict;
    std::size_t covered = 0;
    for (const auto& c : classes) covered += c.pairs.size();
    REQUIRE(covered == strict);
  }
}

TEST_CASE("ac decomposition") {
  SECTION("gen_xn(2): one component, four singleton AC-cosets") {
    const auto a = gen_xn(2);
    const auto ac = ac_decomposition(chain_triples(a)[0]);
    REQUIRE(ac.components.size() == 1);
    REQUIRE(ac.components[0].size() == 4);
    REQUIRE(ac.ac_cosets.size() == 4);
    for (const auto& c : ac.ac_cosets) REQUIRE(c.size() == 1);
  }
  SECTION("gen_xn(1): one component, one AC-coset of size two") {
    const auto a = gen_xn(1);
    const auto ac = ac_decomposition(chain_triples(a)[0]);
    REQUIRE(ac.components.size() == 1);
    REQUIRE(ac.ac_cosets == std::vector<std::vector<int>>{
                                {a.index_of("b1"), a.index_of("b2")}});
  }
  SECTION("chain x rectangular: the middle class is a single AC-coset") {
    const auto p = direct_product(gen_chain(3), gen_rectangular(1, 2));
    const auto triples = chain_triples(p);
    REQUIRE(triples.size() == 1);
    const auto ac = ac_decomposition(triples[0]);
    REQUIRE(ac.components.size() == 1);
    REQUIRE(ac.ac_cosets.size() == 1);
    REQUIRE(ac.ac_cosets[0].size() == 2);
  }
}

TEST_CASE("reflective factorization") {
  SECTION("gen_xn(1) factors as 3-chain x 2-element rectangular") {
    const auto rf = reflective_factorization(chain_triples(gen_xn(1))[0]);
    REQUIRE(rf.reflective);
    REQUIRE(rf.iso.has_value());
    REQUIRE(rf.iso->target.size() == 6);
    REQUIRE(check_embedding(*rf.iso));
  }
  SECTION("gen_xn(2) is reflective but does not factor") {
    const auto rf = reflective_factorization(chain_triples(gen_xn(2))[0]);
    REQUIRE(rf.reflective);
    REQUIRE_FALSE(rf.iso.has_value());
  }
  SECTION("gen_chain(3) is reflective with a trivial rectangular factor") {
    const auto rf = reflective_factorization(chain_triples(gen_chain(3))[0]);
    REQUIRE(rf.reflective);
    REQUIRE(rf.iso.has_value());
    REQUIRE(rf.iso->source.size() == 3);
  }
  SECTION("a non-reflective chain is reported as such") {
    // in X_2 x C2 the triple (A x top) > (B x top) > (C x bottom) exists and
    // its outer classes are not full cosets of each other through B x top
    const auto p = direct_product(gen_xn(2), gen_chain(2));
    bool saw_nonreflective = false;
    for (const auto& t : chain_triples(p))
      if (!reflective_factorization(t).reflective) saw_nonreflective = true;
    REQUIRE(saw_nonreflective);
  }
}

TEST_CASE("determine equations reproduce the stored tables on gen_xn(3)") {
  const auto a = gen_xn(3);
  const auto ord = compute_orders(a);
  for (const auto& pair : primitive_pairs(a)) {
    const auto cp = coset_partitions(pair);
    for (int x : pair.classes[0])
      for (int y : pair.classes[1]) {
        int xmate = -1, ymate = -1;
        for (const auto& blk : cp.upper_cosets)
          if (std::count(blk.begin(), blk.end(), x))
            for (int u : blk)
              if (ord.geq(u, y)) xmate = u;
        for (const auto& blk : cp.lower_cosets)
          if (std::count(blk.begin(), blk.end(), y))
            for (int w : blk)
              if (ord.geq(x, w)) ymate = w;
        REQUIRE(xmate >= 0);
        REQUIRE(ymate >= 0);
        REQUIRE(a.join(x, y) == a.join(x, xmate));
        REQUIRE(a.join(y, x) == a.join(xmate, x));
        REQUIRE(a.meet(x, y) == a.meet(ymate, y));
        REQUIRE(a.meet(y, x) == a.meet(y, ymate));
      }
  }
}
