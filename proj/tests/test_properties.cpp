#include <doctest.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "netclust/methods.hpp"
#include "netclust/minimax.hpp"
#include "netclust/properties.hpp"

using namespace netclust;

namespace {

MethodSpec omega_r_method() {
  return MethodSpec::representable(RepresenterFamily({fixtures::omega_r()}), "omega_r");
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("excisiveness holds for reciprocal and fails for semi:3 on the 4-cycle") {
  const Network c4 = fixtures::cycle4();
  CHECK(check_excisiveness(MethodSpec::parse("reciprocal"), c4).holds);
  CHECK(check_excisiveness(MethodSpec::parse("nonreciprocal"), c4).holds);

  const AuditReport bad = check_excisiveness(MethodSpec::parse("semi:3"), c4);
  REQUIRE_FALSE(bad.holds);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->params.at("block") == "x1,x3");
  CHECK(bad.witness->expected == 1.0);
  CHECK(bad.witness->actual == 2.0);
}

TEST_CASE("excisiveness is trivial on two-node networks") {
  const Network two = validate_network({"a", "b"}, {{0, 2}, {5, 0}});
  for (const char* m : {"reciprocal", "nonreciprocal", "semi:3", "graft:1"}) {
    CHECK(check_excisiveness(MethodSpec::parse(m), two).holds);
  }
}

TEST_CASE("excisiveness holds for representable methods on random probes") {
  const MethodSpec ratio =
      MethodSpec::representable(RepresenterFamily({fixtures::three_cycle_13()}), "c13");
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const Network n = random_network(5, seed * 67);
    CHECK(check_excisiveness(omega_r_method(), n).holds);
    CHECK(check_excisiveness(ratio, n).holds);
  }
}

TEST_CASE("scale preservation holds for reciprocal, fails for grafting") {
  const Network c3 = fixtures::cycle3();
  CHECK(check_scale_preservation(MethodSpec::parse("reciprocal"), c3, default_alphas()).holds);
  CHECK(check_scale_preservation(MethodSpec::parse("graft:3"), c3, {1.0}).holds);

  const AuditReport bad =
      check_scale_preservation(MethodSpec::parse("graft:3"), c3, {2.0});
  REQUIRE_FALSE(bad.holds);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->expected == 2.0);  // 2 x u(x,x') = 2, actual jumps to 4
  CHECK(bad.witness->actual == 4.0);
  CHECK(bad.witness->params.at("alpha") == "2");
}

TEST_CASE("scale violation witnesses replay standalone") {
  const AuditReport bad = check_scale_preservation(MethodSpec::parse("graft:3"),
                                                   fixtures::cycle3(), default_alphas());
  REQUIRE_FALSE(bad.holds);
  REQUIRE(bad.witness->network.has_value());
  const AuditReport again = check_scale_preservation(
      MethodSpec::parse("graft:3"), *bad.witness->network, default_alphas());
  REQUIRE_FALSE(again.holds);
  CHECK(again.witness->expected == bad.witness->expected);
  CHECK(again.witness->actual == bad.witness->actual);
}

TEST_CASE("idempotency of the built-ins") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const Network n = random_network(2 + seed % 5, seed * 71);
    for (const char* m : {"reciprocal", "nonreciprocal", "semi:3", "graft:2"}) {
      CHECK(check_idempotency(MethodSpec::parse(m), n).holds);
    }
    CHECK(check_idempotency(omega_r_method(), n).holds);
  }
}

TEST_CASE("methods fix ultrametric inputs") {
  const Ultrametric u = reciprocal(random_network(6, 77));
  CHECK(nonreciprocal(u.as_network()) == u);
  CHECK(reciprocal(u.as_network()) == u);
}

TEST_CASE("value axiom across the default grid") {
  REQUIRE(default_value_grid().size() == 25);
  for (const char* m : {"reciprocal", "nonreciprocal", "semi:2", "semi:3", "graft:2"}) {
    CHECK(check_value_axiom(MethodSpec::parse(m), default_value_grid()).holds);
  }
  CHECK(check_value_axiom(omega_r_method(), default_value_grid()).holds);
  CHECK(check_value_axiom(MethodSpec::parse("reciprocal"), {{2, 5}, {3, 3}}).holds);
}

TEST_CASE("a lopsided two-node representer violates the value axiom") {
  // edge weights 1 and 2 let the map soak up half of the larger direction:
  // u(p,q) = max(2, 5/2) = 2.5 instead of max(2,5) = 5
  const MethodSpec lopsided =
      MethodSpec::representable(RepresenterFamily({cycle_representer(2, 1.0, 2.0)}));
  const AuditReport bad = check_value_axiom(lopsided, {{2.0, 5.0}});
  REQUIRE_FALSE(bad.holds);
  CHECK(bad.witness->expected == 5.0);
  CHECK(bad.witness->actual == 2.5);
}

TEST_CASE("transformation axiom on inclusions and contractions") {
  const Network c4 = fixtures::cycle4();
  const Network sub = restrict_network(c4, {"x1", "x3"});
  // the inclusion map of a restriction never expands dissimilarities
  const std::vector<std::size_t> inclusion{0, 2};
  CHECK(check_transformation_axiom(MethodSpec::parse("reciprocal"), sub, c4, inclusion).holds);

  const Network solo = validate_network({"z"}, {{0}});
  CHECK(check_transformation_axiom(MethodSpec::parse("reciprocal"), c4, solo, {0, 0, 0, 0})
            .holds);

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const ContractionPair pair = random_contraction_pair(5, seed);
    for (const char* m : {"reciprocal", "nonreciprocal", "semi:3", "graft:2"}) {
      CHECK(check_transformation_axiom(MethodSpec::parse(m), pair.source, pair.target,
                                       pair.phi)
                .holds);
    }
  }
}

TEST_CASE("transformation axiom rejects expanding maps") {
  const Network n = random_network(3, 5);
  const Network big = scale_network(n, 2.0);
  CHECK_ERROR_CODE(
      check_transformation_axiom(MethodSpec::parse("reciprocal"), n, big, {0, 1, 2}),
      NotDissimilarityReducing);
  CHECK_ERROR_CODE(check_transformation_axiom(MethodSpec::parse("reciprocal"), n, n, {0, 1}),
                   ShapeMismatch);
  CHECK_ERROR_CODE(
      check_transformation_axiom(MethodSpec::parse("reciprocal"), n, n, {0, 1, 7}),
      UnknownLabel);
}

TEST_CASE("sandwich audit") {
  CHECK(check_sandwich(MethodSpec::parse("semi:3"), fixtures::cycle4()).holds);
  CHECK(check_sandwich(MethodSpec::parse("graft:3"), fixtures::cycle3()).holds);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Network n = max_symmetrize(random_network(4, seed));
    // symmetric input pins both bounds to the same value
    const Ultrametric lo = nonreciprocal(n);
    const Ultrametric hi = reciprocal(n);
    CHECK(lo == hi);
    CHECK(check_sandwich(MethodSpec::parse("semi:3"), n).holds);
  }
}

TEST_CASE("contraction pairs are dissimilarity reducing by construction") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const ContractionPair pair = random_contraction_pair(6, seed * 3);
    REQUIRE(pair.phi.size() == pair.source.size());
    for (std::size_t i = 0; i < pair.source.size(); ++i)
      for (std::size_t j = 0; j < pair.source.size(); ++j)
        CHECK(pair.target(pair.phi[i], pair.phi[j]) <= pair.source(i, j));
  }
}

TEST_CASE("probe generation is seeded and reproducible") {
  CHECK(random_network(6, 42) == random_network(6, 42));
  CHECK_FALSE(random_network(6, 42) == random_network(6, 43));

  const ContractionPair a = random_contraction_pair(5, 9);
  const ContractionPair b = random_contraction_pair(5, 9);
  CHECK(a.source == b.source);
  CHECK(a.target == b.target);
  CHECK(a.phi == b.phi);
}

TEST_CASE("random networks draw weights from the exact set") {
  const Network n = random_network(8, 1234);
  for (std::size_t i = 0; i < n.size(); ++i)
    for (std::size_t j = 0; j < n.size(); ++j) {
      if (i == j) continue;
      const double v = n(i, j);
      CHECK((v == 1.0 || v == 2.0 || v == 3.0 || v == 5.0 || v == 8.0));
    }
}

TEST_CASE("audit reports serialize to machine-readable json") {
  const AuditReport ok =
      check_scale_preservation(MethodSpec::parse("reciprocal"), fixtures::cycle3(), {2.0});
  const auto jok = nlohmann::json::parse(ok.to_json());
  CHECK(jok.at("property") == "scale");
  CHECK(jok.at("verdict") == "holds on all probes");
  CHECK_FALSE(jok.contains("witness"));

  const AuditReport bad =
      check_scale_preservation(MethodSpec::parse("graft:3"), fixtures::cycle3(), {2.0});
  const auto jbad = nlohmann::json::parse(bad.to_json());
  CHECK(jbad.at("verdict") == "violated");
  CHECK(jbad.at("witness").at("expected") == 2.0);
  CHECK(jbad.at("witness").at("network").at("labels").size() == 3);
  CHECK(jbad.at("witness").at("params").at("method") == "graft:3");
}

TEST_CASE("scale audit requires at least one factor") {
  CHECK_ERROR_CODE(
      check_scale_preservation(MethodSpec::parse("reciprocal"), fixtures::cycle3(), {}),
      NonPositiveScale);
}

}  // TEST_SUITE
