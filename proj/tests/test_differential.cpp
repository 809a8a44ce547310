// Differential tests: pit the structure-guided implementations against
// brute-force oracles on the seeded corpus.

#include <catch2/catch_amalgamated.hpp>

#include "embedding_search.hpp"
#include "skewlat/classify.hpp"
#include "skewlat/generators.hpp"
#include "skewlat/order_green.hpp"
#include "skewlat/skl_format.hpp"

using namespace skewlat;

TEST_CASE("forbidden detector agrees with exhaustive embedding search") {
  const auto corpus = gen_corpus(0);
  int noncategorical = 0;
  for (const auto& a : corpus) {
    if (a.size() > 14) continue;  // keep the exhaustive side fast
    const auto fw = find_forbidden(a);
    bool exhaustive_hit = false;
    const int kmax = (a.size() - 4) / 2;
    for (int k = 2; k <= kmax && !exhaustive_hit; ++k)
      exhaustive_hit =
          skewlat::testing::find_embedding(gen_xn(k), a).has_value() ||
          skewlat::testing::find_embedding(gen_yn(k), a).has_value();
    REQUIRE(fw.has_value() == exhaustive_hit);
    if (fw) {
      ++noncategorical;
      // the reported parameter really embeds
      REQUIRE(skewlat::testing::find_embedding(
                  fw->kind == 'X' ? gen_xn(fw->n) : gen_yn(fw->n), a)
                  .has_value());
    }
  }
  REQUIRE(noncategorical > 0);
}

TEST_CASE("handedness flags coincide with trivial Green's relations") {
  const auto corpus = gen_corpus(3);
  int checked = 0;
  for (const auto& a : corpus) {
    if (checked > 120) break;
    if (a.size() > 16) continue;
    ++checked;
    const auto f = handedness(a);
    const auto g = green_partitions(a);
    REQUIRE(f.left_handed == g.r.is_identity());
    REQUIRE(f.right_handed == g.l.is_identity());
  }
}

TEST_CASE("quotient_by accepts exactly the congruences") {
  Lcg rng(42);
  for (const auto& a : {gen_xn(2), gen_partial_functions(2, 2),
                        gen_twisted_primitive(true),
                        direct_product(gen_chain(2), gen_rectangular(2, 1))}) {
    const int n = a.size();
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<int> ids(n);
      const int k = 1 + rng.below(n);
      for (int i = 0; i < n; ++i) ids[i] = rng.below(k);
      const auto p = Partition::from_class_ids(ids);
      const bool is_cong = detail::is_congruence(a, p);
      bool accepted = true;
      SkewLattice q;
      try {
        q = quotient_by(a, p);
      } catch (const CongruenceError&) {
        accepted = false;
      }
      REQUIRE(accepted == is_cong);
      if (accepted) {
        // the class map is a homomorphism onto the quotient
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) {
            REQUIRE(p.class_of(a.meet(x, y)) ==
                    q.meet(p.class_of(x), p.class_of(y)));
            REQUIRE(p.class_of(a.join(x, y)) ==
                    q.join(p.class_of(x), p.class_of(y)));
          }
      }
    }
  }
}

TEST_CASE("parser survives mutated input without crashing") {
  const std::string base = serialize_algebra(gen_xn(2));
  Lcg rng(1234);
  const std::string alphabet = "abxyz12 \n#\tq";
  int parsed_ok = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    std::string text = base;
    const int edits = 1 + rng.below(4);
    for (int e = 0; e < edits; ++e) {
      const int pos = rng.below(static_cast<int>(text.size()));
      switch (rng.below(3)) {
        case 0:
          text[pos] = alphabet[rng.below(static_cast<int>(alphabet.size()))];
          break;
        case 1:
          text.erase(pos, 1);
          break;
        default:
          text.insert(pos, 1,
                      alphabet[rng.below(static_cast<int>(alphabet.size()))]);
          break;
      }
    }
    try {
      const auto a = parse_algebra(text);
      ++parsed_ok;  // mutation kept the format valid; tables are in range
      REQUIRE(a.size() >= 1);
      REQUIRE(a.meet_table.size() ==
              static_cast<std::size_t>(a.size()) * a.size());
    } catch (const ParseError&) {
      // expected for most mutations
    }
  }
  // some mutations (comments, whitespace, renames) must still parse
  REQUIRE(parsed_ok > 0);
}
