#include <catch2/catch_amalgamated.hpp>

#include "embedding_search.hpp"
#include "skewlat/classify.hpp"
#include "skewlat/generators.hpp"

using namespace skewlat;

namespace {

// a > {b -L b'} > c inside gen_xn(2): categorical but not strictly so
SkewLattice double_midpoint_chain() {
  const auto a = gen_xn(2);
  return induced_subalgebra(a, {a.index_of("a1"), a.index_of("b1"),
                                a.index_of("b3"), a.index_of("c1")})
      .algebra;
}

}  // namespace

TEST_CASE("is_categorical: gen_xn(1) holds in every mode") {
  const auto a = gen_xn(1);
  for (const auto& mode : categorical_modes()) {
    const auto r = is_categorical(a, mode);
    INFO(mode);
    REQUIRE(r.holds);
    REQUIRE(r.witness.empty());
  }
}

TEST_CASE("is_categorical: gen_xn(n)/gen_yn(n) fail every mode for n >= 2") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& a : {gen_xn(n), gen_yn(n)}) {
      for (const auto& mode : categorical_modes()) {
        const auto r = is_categorical(a, mode);
        INFO("n=" << n << " mode=" << mode);
        REQUIRE_FALSE(r.holds);
        REQUIRE_FALSE(r.witness.empty());
      }
    }
  }
}

TEST_CASE("is_categorical: partial functions are categorical (distributive)") {
  const auto a = gen_partial_functions(2, 2);
  REQUIRE(is_distributive(a).holds);
  for (const auto& mode : categorical_modes())
    REQUIRE(is_categorical(a, mode).holds);
}

TEST_CASE("is_categorical rejects unknown modes") {
  REQUIRE_THROWS_AS(is_categorical(gen_chain(2), "nope"), std::invalid_argument);
}

TEST_CASE("is_strictly_categorical goldens") {
  SECTION("rectangular algebras") {
    const auto a = gen_rectangular(2, 3);
    for (const auto& mode : strictly_categorical_modes())
      REQUIRE(is_strictly_categorical(a, mode).holds);
  }
  SECTION("gen_xn(1)") {
    const auto a = gen_xn(1);
    for (const auto& mode : strictly_categorical_modes())
      REQUIRE(is_strictly_categorical(a, mode).holds);
  }
  SECTION("gen_xn(2) fails every mode") {
    const auto a = gen_xn(2);
    for (const auto& mode : strictly_categorical_modes()) {
      INFO(mode);
      REQUIRE_FALSE(is_strictly_categorical(a, mode).holds);
    }
  }
  SECTION("primitive algebras, twisted included") {
    for (const auto& a : {gen_twisted_primitive(true), gen_twisted_primitive(false)})
      for (const auto& mode : strictly_categorical_modes())
        REQUIRE(is_strictly_categorical(a, mode).holds);
  }
}

TEST_CASE("categorical but not strictly categorical: double midpoint chain") {
  const auto a = double_midpoint_chain();
  REQUIRE(validate(a).ok);
  for (const auto& mode : categorical_modes())
    REQUIRE(is_categorical(a, mode).holds);
  for (const auto& mode : strictly_categorical_modes()) {
    INFO(mode);
    const auto r = is_strictly_categorical(a, mode);
    REQUIRE_FALSE(r.holds);
    REQUIRE_FALSE(r.witness.empty());
  }
  // this is exactly the forbidden four-element chain of the strictness
  // characterization, so it embeds into nothing strictly categorical
  REQUIRE_FALSE(
      skewlat::testing::find_embedding(a, gen_partial_functions(2, 2))
          .has_value());
}

TEST_CASE("is_distributive goldens") {
  REQUIRE(is_distributive(gen_chain(3)).holds);
  REQUIRE(is_distributive(gen_partial_functions(2, 2)).holds);
  const auto r = is_distributive(gen_xn(2));
  REQUIRE_FALSE(r.holds);
  REQUIRE(r.witness.size() == 3);
}

TEST_CASE("normality flags") {
  REQUIRE(normality_flags(gen_partial_functions(2, 2)).normal);
  REQUIRE_FALSE(normality_flags(gen_xn(2)).normal);
  for (int k = 1; k <= 3; ++k) {
    const auto f = normality_flags(gen_chain(k));
    REQUIRE(f.normal);
    REQUIRE(f.conormal);
  }
}

TEST_CASE("is_order_closed goldens") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& a : {gen_xn(n), gen_yn(n)}) {
      REQUIRE(is_order_closed(a, "direct").holds);
      REQUIRE(is_order_closed(a, "identity").holds);
    }
  REQUIRE(is_order_closed(gen_partial_functions(2, 2), "direct").holds);
  const auto r = is_order_closed(gen_twisted_primitive(true), "direct");
  REQUIRE_FALSE(r.holds);
  REQUIRE(r.witness == std::vector<std::string>{"a1", "a3", "b1", "b3"});
}

TEST_CASE("find_forbidden: parameter is exact on the generator family") {
  for (int n = 2; n <= 6; ++n) {
    const auto fx = find_forbidden(gen_xn(n));
    REQUIRE(fx.has_value());
    REQUIRE(fx->kind == 'X');
    REQUIRE(fx->n == n);
    REQUIRE(check_embedding(fx->embedding));
    const auto fy = find_forbidden(gen_yn(n));
    REQUIRE(fy.has_value());
    REQUIRE(fy->kind == 'Y');
    REQUIRE(fy->n == n);
    REQUIRE(check_embedding(fy->embedding));
  }
}

TEST_CASE("find_forbidden: deterministic least witness on gen_xn(2)") {
  // the search starts from the lexicographically least pair (a1, c1), so on
  // gen_xn(2) itself the embedding is the identity
  const auto fw = find_forbidden(gen_xn(2));
  REQUIRE(fw.has_value());
  std::vector<int> identity(8);
  std::iota(identity.begin(), identity.end(), 0);
  REQUIRE(fw->embedding.map == identity);
  const auto again = find_forbidden(gen_xn(2));
  REQUIRE(again->embedding.map == fw->embedding.map);
}

TEST_CASE("find_forbidden: none on categorical algebras") {
  REQUIRE_FALSE(find_forbidden(gen_xn(1)).has_value());
  REQUIRE_FALSE(find_forbidden(gen_yn(1)).has_value());
  REQUIRE_FALSE(find_forbidden(gen_partial_functions(2, 2)).has_value());
  REQUIRE_FALSE(find_forbidden(gen_twisted_primitive(true)).has_value());
  REQUIRE_FALSE(find_forbidden(double_midpoint_chain()).has_value());
}

TEST_CASE("find_forbidden lifts through proper quotients on two-sided input") {
  const auto a = direct_product(gen_xn(2), gen_rectangular(1, 2));
  const auto f = handedness(a);
  REQUIRE_FALSE(f.left_handed);
  REQUIRE_FALSE(f.right_handed);
  const auto fw = find_forbidden(a);
  REQUIRE(fw.has_value());
  REQUIRE(fw->kind == 'X');
  REQUIRE(fw->n == 2);
  REQUIRE(check_embedding(fw->embedding));

  const auto b = direct_product(gen_rectangular(2, 1), gen_yn(2));
  const auto fwb = find_forbidden(b);
  REQUIRE(fwb.has_value());
  REQUIRE(fwb->kind == 'Y');
  REQUIRE(fwb->n == 2);
}

TEST_CASE("find_forbidden agrees with the exhaustive embedding oracle") {
  // the detector's witness must match what a complete subalgebra search sees
  const auto a = direct_product(gen_xn(2), gen_chain(2));
  const auto fw = find_forbidden(a);
  REQUIRE(fw.has_value());
  REQUIRE(skewlat::testing::find_embedding(gen_xn(fw->n), a).has_value());
  // and no copy of the next size up fits where the detector said n=2
  REQUIRE_FALSE(skewlat::testing::find_embedding(gen_xn(3), a).has_value());
}

TEST_CASE("classify_report on gen_xn(2)") {
  const auto rep = classify_report(gen_xn(2));
  REQUIRE_FALSE(rep.verdicts.at("categorical"));
  REQUIRE(rep.modes.at("categorical").size() == 5);
  REQUIRE(rep.agreement.at("categorical"));
  REQUIRE(rep.modes.at("strictly_categorical").size() == 8);
  REQUIRE(rep.agreement.at("strictly_categorical"));
  REQUIRE(rep.verdicts.at("order_closed"));
  REQUIRE(rep.forbidden.has_value());
  REQUIRE(rep.forbidden->n == 2);
  // left-handed: auxiliary identity chain present and consistent
  REQUIRE(rep.agreement.count("categorical_aux_lh"));
  REQUIRE(rep.agreement.at("categorical_aux_lh"));
  REQUIRE(rep.modes.at("categorical_aux_lh").size() == 7);
  REQUIRE(rep.all_agree());
}

TEST_CASE("classify_report on gen_rectangular(2,2): everything true") {
  const auto rep = classify_report(gen_rectangular(2, 2));
  for (const char* p : {"categorical", "strictly_categorical", "distributive",
                        "normal", "conormal", "order_closed"})
    REQUIRE(rep.verdicts.at(p));
  REQUIRE(rep.all_agree());
  REQUIRE_FALSE(rep.forbidden.has_value());
}

TEST_CASE("classify_report on partial functions") {
  const auto rep = classify_report(gen_partial_functions(2, 2));
  for (const char* p : {"categorical", "strictly_categorical", "distributive",
                        "normal", "order_closed"})
    REQUIRE(rep.verdicts.at(p));
  REQUIRE_FALSE(rep.verdicts.at("conormal"));
  // right-handed algebra: no left-handed auxiliary block
  REQUIRE_FALSE(rep.modes.count("categorical_aux_lh"));
  REQUIRE(rep.all_agree());
}

TEST_CASE("strict chain conclusions hold on strictly categorical chains") {
  REQUIRE(strict_chain_conclusions(gen_xn(1)).holds);
  REQUIRE(strict_chain_conclusions(
              direct_product(gen_chain(3), gen_rectangular(1, 2)))
              .holds);
  // vacuous on X_2 (its only chain is not strictly categorical)
  REQUIRE(strict_chain_conclusions(gen_xn(2)).holds);
}

TEST_CASE("implication lattice on a small sample") {
  for (const auto& a :
       {gen_chain(3), gen_rectangular(2, 2), gen_xn(1), gen_xn(2),
        gen_partial_functions(2, 2), gen_twisted_primitive(true),
        double_midpoint_chain(), direct_product(gen_yn(2), gen_chain(2))}) {
    const auto rep = classify_report(a);
    if (rep.verdicts.at("distributive")) REQUIRE(rep.verdicts.at("categorical"));
    if (rep.verdicts.at("normal"))
      REQUIRE(rep.verdicts.at("strictly_categorical"));
    if (rep.verdicts.at("conormal"))
      REQUIRE(rep.verdicts.at("strictly_categorical"));
    if (rep.verdicts.at("strictly_categorical"))
      REQUIRE(rep.verdicts.at("categorical"));
    REQUIRE(rep.forbidden.has_value() == !rep.verdicts.at("categorical"));
  }
}
