#include <doctest.h>

#include <fstream>
#include <string>

#include <unistd.h>

#include "fixtures.hpp"
#include "netclust/methods.hpp"
#include "netclust/minimax.hpp"
#include "netclust/properties.hpp"
#include "oracles.hpp"

using namespace netclust;

namespace {

Matrix reciprocal_oracle(const Network& n) {
  return oracle::directed_minimax_oracle(max_symmetrize(n));
}

}  // namespace

TEST_SUITE("methods") {

TEST_CASE("reciprocal merges the two-node network at the larger weight") {
  const Network two = validate_network({"p", "q"}, {{0, 2}, {5, 0}});
  CHECK(reciprocal(two)(0, 1) == 5.0);
  CHECK(nonreciprocal(two)(0, 1) == 5.0);
  CHECK(semi_reciprocal(two, 2)(0, 1) == 5.0);
  CHECK(grafting(two, 3.0)(0, 1) == 5.0);
}

TEST_CASE("reciprocal and nonreciprocal on the three-node cycle") {
  const Network c3 = fixtures::cycle3();
  const Ultrametric ur = reciprocal(c3);
  const Ultrametric unr = nonreciprocal(c3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(ur(i, j) == (i == j ? 0.0 : 2.0));
      CHECK(unr(i, j) == (i == j ? 0.0 : 1.0));
    }
}

TEST_CASE("reciprocal equals bidirectional chain enumeration") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Network n = random_network(2 + seed % 5, seed * 17);
    CHECK(reciprocal(n).dist() == reciprocal_oracle(n));
  }
}

TEST_CASE("nonreciprocal coincides with reciprocal on symmetric networks") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const Network n = max_symmetrize(random_network(2 + seed % 6, seed));
    CHECK(nonreciprocal(n) == reciprocal(n));
  }
}

TEST_CASE("semi_reciprocal endpoints of the t range") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const std::size_t size = 2 + seed % 5;
    const Network n = random_network(size, seed * 29);
    CHECK(semi_reciprocal(n, 2) == reciprocal(n));
    CHECK(semi_reciprocal(n, static_cast<int>(size)) == nonreciprocal(n));
    CHECK(semi_reciprocal(n, static_cast<int>(size) + 3) == nonreciprocal(n));
  }
}

TEST_CASE("semi_reciprocal is monotone non-increasing in t") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Network n = random_network(6, seed * 41);
    Ultrametric prev = semi_reciprocal(n, 2);
    for (int t = 3; t <= 6; ++t) {
      const Ultrametric cur = semi_reciprocal(n, t);
      for (std::size_t i = 0; i < n.size(); ++i)
        for (std::size_t j = 0; j < n.size(); ++j) CHECK(cur(i, j) <= prev(i, j));
      prev = cur;
    }
  }
}

TEST_CASE("semi_reciprocal(3) on the four-node cycle and its excised pair") {
  const Network c4 = fixtures::cycle4();
  const Ultrametric u = semi_reciprocal(c4, 3);
  CHECK(u(0, 2) == 1.0);

  const Ultrametric sub = semi_reciprocal(restrict_network(c4, {"x1", "x3"}), 3);
  CHECK(sub(0, 1) == 2.0);

  CHECK_ERROR_CODE(semi_reciprocal(c4, 1), InvalidHopBound);
}

TEST_CASE("grafting pastes nonreciprocal branches under the cut") {
  const Network c3 = fixtures::cycle3();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(grafting(c3, 3.0)(i, j) == (i == j ? 0.0 : 1.0));
      CHECK(grafting(scale_network(c3, 2.0), 3.0)(i, j) == (i == j ? 0.0 : 4.0));
    }
  CHECK_ERROR_CODE(grafting(c3, 0.0), NonPositiveScale);
  CHECK_ERROR_CODE(grafting(c3, -1.0), NonPositiveScale);
}

TEST_CASE("grafting above the reciprocal ceiling equals nonreciprocal") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const Network n = random_network(2 + seed % 5, seed * 53);
    CHECK(grafting(n, reciprocal(n).max_value()) == nonreciprocal(n));
  }
}

TEST_CASE("every method stays inside the sandwich bounds") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Network n = random_network(2 + seed % 6, seed * 61);
    const Ultrametric lo = nonreciprocal(n);
    const Ultrametric hi = reciprocal(n);
    for (const Ultrametric& u : {semi_reciprocal(n, 3), semi_reciprocal(n, 4),
                                 grafting(n, 2.0), grafting(n, 5.0)}) {
      for (std::size_t i = 0; i < n.size(); ++i)
        for (std::size_t j = 0; j < n.size(); ++j) {
          CHECK(lo(i, j) <= u(i, j));
          CHECK(u(i, j) <= hi(i, j));
        }
    }
  }
}

TEST_CASE("method spec text parsing") {
  CHECK(MethodSpec::parse("reciprocal").kind == MethodSpec::Kind::Reciprocal);
  CHECK(MethodSpec::parse("nonreciprocal").kind == MethodSpec::Kind::Nonreciprocal);

  const MethodSpec semi = MethodSpec::parse("semi:3");
  CHECK(semi.kind == MethodSpec::Kind::SemiReciprocal);
  CHECK(semi.t == 3);
  CHECK(semi.describe() == "semi:3");

  const MethodSpec graft = MethodSpec::parse("graft:2.5");
  CHECK(graft.kind == MethodSpec::Kind::Grafting);
  CHECK(graft.beta == 2.5);
  CHECK(graft.describe() == "graft:2.5");

  CHECK_ERROR_CODE(MethodSpec::parse("semi:"), UnknownMethod);
  CHECK_ERROR_CODE(MethodSpec::parse("semi:x"), UnknownMethod);
  CHECK_ERROR_CODE(MethodSpec::parse("graft:abc"), UnknownMethod);
  CHECK_ERROR_CODE(MethodSpec::parse("representable:"), UnknownMethod);
  CHECK_ERROR_CODE(MethodSpec::parse("ward"), UnknownMethod);
}

TEST_CASE("method spec loads representable families from files") {
  const std::string path =
      "/tmp/netclust-methods-" + std::to_string(::getpid()) + ".rep";
  {
    std::ofstream out(path);
    out << "# reciprocal as a representer\nrepresenter omega_r 2\n"
           "edge 0 1 1\nedge 1 0 1\n";
  }
  const MethodSpec spec = MethodSpec::parse("representable:" + path);
  CHECK(spec.kind == MethodSpec::Kind::Representable);
  CHECK(spec.division_free());
  const Network n = random_network(5, 5);
  CHECK(run_method(spec, n) == reciprocal(n));
  std::remove(path.c_str());
}

TEST_CASE("division_free reflects the family weights") {
  CHECK(MethodSpec::parse("reciprocal").division_free());
  CHECK(MethodSpec::parse("graft:2").division_free());
  CHECK(MethodSpec::representable(RepresenterFamily({fixtures::omega_r()})).division_free());
  CHECK_FALSE(
      MethodSpec::representable(RepresenterFamily({fixtures::three_cycle_13()})).division_free());
}

TEST_CASE("run_method dispatch agrees with the direct calls") {
  const Network n = random_network(5, 71);
  CHECK(run_method(MethodSpec::parse("reciprocal"), n) == reciprocal(n));
  CHECK(run_method(MethodSpec::parse("nonreciprocal"), n) == nonreciprocal(n));
  CHECK(run_method(MethodSpec::parse("semi:3"), n) == semi_reciprocal(n, 3));
  CHECK(run_method(MethodSpec::parse("graft:2"), n) == grafting(n, 2.0));
}

TEST_CASE("outputs carry the input label order") {
  const Network n = random_network(4, 81);
  for (const Ultrametric& u : {reciprocal(n), nonreciprocal(n), semi_reciprocal(n, 3),
                               grafting(n, 2.0)}) {
    CHECK(u.labels() == n.labels());
  }
}

}  // TEST_SUITE
