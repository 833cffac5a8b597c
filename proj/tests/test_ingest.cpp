#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <unistd.h>

#include "fixtures.hpp"
#include "netclust/ingest.hpp"
#include "netclust/io.hpp"

using namespace netclust;

namespace {

LabeledGrid table(std::vector<std::string> labels, std::vector<std::vector<double>> grid) {
  return LabeledGrid{std::move(labels), std::move(grid)};
}

// Temporary file that removes itself; for exercising the path-based ingest().
struct TempFile {
  std::string path;
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path = "/tmp/netclust-test-" + std::to_string(::getpid()) + "-" +
           std::to_string(counter++);
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_SUITE("ingest") {

TEST_CASE("two-sector table with single contributors normalizes to 1") {
  const Network n =
      similarity_to_network(table({"s1", "s2"}, {{0, 10}, {30, 0}}), ZeroPolicy::Error);
  CHECK(n(0, 1) == 1.0);
  CHECK(n(1, 0) == 1.0);
}

TEST_CASE("three-sector column normalization") {
  // column 3 sums to 4; A(i,j) = colsum(j) / U(i,j)
  const Network n = similarity_to_network(
      table({"s1", "s2", "s3"}, {{0, 5, 1}, {5, 0, 3}, {5, 5, 0}}), ZeroPolicy::Error);
  CHECK(n(0, 2) == 4.0);
  CHECK(n(1, 2) == 4.0 / 3.0);
  CHECK(n(2, 0) == 2.0);  // column 1 sums to 10, U(3,1) = 5
}

TEST_CASE("diagonal similarities are ignored") {
  const Network with = similarity_to_network(
      table({"s1", "s2", "s3"}, {{99, 5, 1}, {5, 77, 3}, {5, 5, 55}}), ZeroPolicy::Error);
  const Network without = similarity_to_network(
      table({"s1", "s2", "s3"}, {{0, 5, 1}, {5, 0, 3}, {5, 5, 0}}), ZeroPolicy::Error);
  CHECK(with == without);
}

TEST_CASE("zero similarities follow the policy") {
  const LabeledGrid t = table({"s1", "s2", "s3"}, {{0, 5, 0}, {5, 0, 4}, {5, 5, 0}});
  CHECK_ERROR_CODE(similarity_to_network(t, ZeroPolicy::Error), NonFinite);

  const Network n = similarity_to_network(t, ZeroPolicy::Sentinel);
  // finite entries: (1,2)=2, (2,1)=2, (2,3)=1, (3,1)=2, (3,2)=2; max = 2
  CHECK(n(1, 2) == 1.0);
  CHECK(n(0, 1) == 2.0);
  CHECK(n(0, 2) == 20.0);  // sentinel = 10 x max finite
}

TEST_CASE("degenerate tables are rejected") {
  CHECK_ERROR_CODE(
      similarity_to_network(table({"s1", "s2"}, {{0, 10}, {0, 0}}), ZeroPolicy::Sentinel),
      ZeroColumnSum);
  CHECK_ERROR_CODE(
      similarity_to_network(table({"s1", "s2"}, {{0, -1}, {3, 0}}), ZeroPolicy::Sentinel),
      NegativeSimilarity);
  CHECK_ERROR_CODE(
      similarity_to_network(table({"s1", "s2"}, {{0, 1}, {3, 0}, {1, 2}}), ZeroPolicy::Sentinel),
      ShapeMismatch);
  // all zero off-diagonals: column sums vanish before any sentinel exists
  CHECK_ERROR_CODE(
      similarity_to_network(table({"s1", "s2"}, {{0, 0}, {0, 0}}), ZeroPolicy::Sentinel),
      ZeroColumnSum);
}

TEST_CASE("single-sector table degenerates to the zero network") {
  const Network n = similarity_to_network(table({"solo"}, {{123.0}}), ZeroPolicy::Error);
  CHECK(n.size() == 1);
  CHECK(n(0, 0) == 0.0);
}

TEST_CASE("parse_format recognizes the three names") {
  CHECK(parse_format("matrix") == InputFormat::MatrixCsv);
  CHECK(parse_format("edges") == InputFormat::EdgeList);
  CHECK(parse_format("similarity") == InputFormat::SimilarityTable);
  CHECK_ERROR_CODE(parse_format("yaml"), ParseError);
}

TEST_CASE("ingest dispatches on format") {
  const Network cycle3 = fixtures::cycle3();

  const TempFile matrix(write_network_csv(cycle3));
  CHECK(ingest({matrix.path, InputFormat::MatrixCsv, ZeroPolicy::Sentinel}) == cycle3);

  const TempFile edges("x1,x2,1\nx2,x3,1\nx3,x1,1\nx2,x1,2\nx3,x2,2\nx1,x3,2\n");
  CHECK(ingest({edges.path, InputFormat::EdgeList, ZeroPolicy::Sentinel}) == cycle3);

  const TempFile sim("s1,s2\ns1,0,10\ns2,30,0\n");
  const Network n = ingest({sim.path, InputFormat::SimilarityTable, ZeroPolicy::Error});
  CHECK(n(0, 1) == 1.0);

  CHECK_ERROR_CODE(ingest({"/nonexistent/netclust-input", InputFormat::MatrixCsv,
                           ZeroPolicy::Sentinel}),
                   IoError);
}

TEST_CASE("matrix csv export re-ingests to the same network") {
  const TempFile f(write_network_csv(fixtures::cycle4()));
  CHECK(ingest({f.path, InputFormat::MatrixCsv, ZeroPolicy::Sentinel}) == fixtures::cycle4());
}

}  // TEST_SUITE
