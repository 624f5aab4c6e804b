#include <stdexcept>
#include <random>

#include "doctest.h"
#include "sunn/oracle.hpp"

using namespace sunn;

namespace {

LambdaVector lambda_of(int n, std::vector<Int> m) {
  return lambda_vector(DynkinLabels(Rank(n), std::move(m)));
}

}  // namespace

TEST_CASE("brute-force arrangements") {
  CHECK(oracle::brute_arrangements(lambda_of(2, {1, 2, 1})).size() == 6);
  CHECK(oracle::brute_arrangements(lambda_of(3, {0, 1, 0, 2, 0})).size() == 7);
  CHECK(oracle::brute_arrangements(lambda_of(2, {0, 0, 0})).size() == 1);
  CHECK_THROWS_AS(
      oracle::brute_arrangements(lambda_of(5, {1, 1, 1, 1, 1, 1, 1, 1, 1})),
      std::domain_error);
}

TEST_CASE("brute-force edges of the rank-two hexagon") {
  const DynkinLabels labels(Rank(2), {1, 2, 1});
  const auto edges = oracle::brute_edges(lambda_of(2, {1, 2, 1}));
  CHECK(edges.size() == 6);
  for (const oracle::OracleEdge& e : edges) {
    CHECK(e.degree >= 1);
    CHECK((e.degree == 1 || e.degree == 2));
    CHECK(e.root.j <= 2);
    CHECK(e.root.k >= 2);
  }
}

TEST_CASE("brute-force edge of the rank-one doublet") {
  const auto edges = oracle::brute_edges(lambda_of(1, {3}));
  REQUIRE(edges.size() == 1);
  const oracle::OracleEdge& e = *edges.begin();
  CHECK(e.degree == 3);
  CHECK(e.root.j == 1);
  CHECK(e.root.k == 1);
}

TEST_CASE("pattern counting") {
  CHECK(oracle::gt_dimension({1, 1, 1}) == 1);
  CHECK(oracle::gt_dimension({1, 2, 1}) == 6);
  CHECK(oracle::gt_dimension({2, 1, 1}) == 4);
  CHECK(oracle::gt_dimension({2, 2}) == 8);  // adjoint of the rank-two series
  CHECK_THROWS_AS(oracle::gt_dimension({4, 1, 1}), std::domain_error);
  CHECK_THROWS_AS(oracle::gt_dimension({1, 1, 1, 1, 1, 1}), std::domain_error);
  CHECK_THROWS_AS(oracle::gt_dimension({1, 0, 1}), std::domain_error);
}
