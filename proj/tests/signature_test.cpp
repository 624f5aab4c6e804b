#include <numeric>
#include <random>

#include "doctest.h"
#include "sunn/signature.hpp"

using namespace sunn;

namespace {

LambdaVector lambda_of(int n, std::vector<Int> m) {
  return lambda_vector(DynkinLabels(Rank(n), std::move(m)));
}

Int binomial(int n, int k) {
  Int value = 1;
  for (int i = 1; i <= k; ++i) value = value * (n - k + i) / i;
  return value;
}

}  // namespace

TEST_CASE("arrangement counts") {
  CHECK(all_arrangements(lambda_of(2, {1, 2, 1})).size() == 6);
  CHECK(all_arrangements(lambda_of(3, {0, 1, 0, 2, 0})).size() == 7);
  CHECK(all_arrangements(lambda_of(2, {0, 0, 0})).size() == 1);
}

TEST_CASE("strictly decreasing weights give the full coset count") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<Int> dist(1, 9);
  for (int n = 1; n <= 4; ++n) {
    std::vector<Int> m;
    for (int i = 0; i < 2 * n - 1; ++i) m.push_back(dist(rng));
    CHECK(static_cast<Int>(all_arrangements(lambda_of(n, m)).size()) ==
          binomial(2 * n, n));
  }
}

TEST_CASE("signatures of the rank-two splits") {
  ERSignature sig = signature_of(Arrangement{{4, 3}, {1, 0}});
  CHECK(sig.m_labels == std::vector<Int>{1, 1});
  CHECK(sig.two_c == -6);

  sig = signature_of(Arrangement{{4, 1}, {3, 0}});
  CHECK(sig.m_labels == std::vector<Int>{3, 3});
  CHECK(sig.two_c == -2);

  sig = signature_of(Arrangement{{3, 1}, {4, 0}});
  CHECK(sig.m_labels == std::vector<Int>{2, 4});
  CHECK(sig.two_c == 0);
}

TEST_CASE("arrangement order is deterministic and weight-sorted") {
  const auto arrangements = all_arrangements(lambda_of(2, {1, 2, 1}));
  CHECK(arrangements.front() == Arrangement{{4, 3}, {1, 0}});
  CHECK(arrangements.back() == Arrangement{{1, 0}, {4, 3}});
  for (std::size_t i = 0; i + 1 < arrangements.size(); ++i)
    CHECK(signature_of(arrangements[i]).two_c <=
          signature_of(arrangements[i + 1]).two_c);
}

TEST_CASE("reflection partner swaps the blocks") {
  const Arrangement arr{{4, 3}, {1, 0}};
  CHECK(ks_partner(arr) == Arrangement{{1, 0}, {4, 3}});
  const Arrangement self{{3, 2, 0}, {3, 2, 0}};
  CHECK(ks_partner(self) == self);
}

TEST_CASE("reflection laws across a whole weight") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<Int> dist(0, 5);
  for (int iter = 0; iter < 60; ++iter) {
    const int n = 1 + iter % 4;
    std::vector<Int> m;
    for (int i = 0; i < 2 * n - 1; ++i) m.push_back(dist(rng));
    const auto arrangements = all_arrangements(lambda_of(n, m));
    Int weight_sum = 0;
    for (const Arrangement& arr : arrangements) {
      const ERSignature sig = signature_of(arr);
      weight_sum += sig.two_c;
      const Arrangement partner = ks_partner(arr);
      CHECK(ks_partner(partner) == arr);
      const ERSignature psig = signature_of(partner);
      CHECK(psig.m_labels == star(sig.m_labels));
      CHECK(psig.two_c == -sig.two_c);
      if (partner == arr) {
        CHECK(sig.two_c == 0);
        CHECK(star(sig.m_labels) == sig.m_labels);
      }
    }
    CHECK(weight_sum == 0);
  }
}

TEST_CASE("zero weight without self-pairing stays distinct") {
  // Equal outer labels put two distinct splits at weight zero.
  const auto arrangements = all_arrangements(lambda_of(2, {1, 2, 1}));
  int zero_weight = 0, self_paired = 0;
  for (const Arrangement& arr : arrangements) {
    if (signature_of(arr).two_c == 0) ++zero_weight;
    if (ks_partner(arr) == arr) ++self_paired;
  }
  CHECK(zero_weight == 2);
  CHECK(self_paired == 0);
}

TEST_CASE("rho-shift weight") {
  CHECK(two_m_rho(DynkinLabels(Rank(3), {1, 1, 1, 1, 1})) == 9);
  CHECK(two_m_rho(DynkinLabels(Rank(2), {1, 2, 1})) == 6);
  CHECK(two_m_rho(DynkinLabels(Rank(4), {1, 1, 1, 1, 1, 1, 1})) == 16);
}

TEST_CASE("lowest arrangement carries the negated rho-shift weight") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<Int> dist(0, 9);
  for (int iter = 0; iter < 40; ++iter) {
    const int n = 1 + iter % 4;
    std::vector<Int> m;
    for (int i = 0; i < 2 * n - 1; ++i) m.push_back(dist(rng));
    const DynkinLabels labels(Rank(n), m);
    const auto arrangements = all_arrangements(lambda_vector(labels));
    CHECK(signature_of(arrangements.front()).two_c == -two_m_rho(labels));
    // Weight parity is fixed by the labels.
    for (const Arrangement& arr : arrangements)
      CHECK(((signature_of(arr).two_c - two_m_rho(labels)) % 2) == 0);
  }
}

TEST_CASE("conformal energy") {
  CHECK(conformal_2d(-4, Rank(2)) == 0);
  CHECK(conformal_2d(4, Rank(2)) == 8);
  CHECK(conformal_2d(0, Rank(2)) == 4);
}

TEST_CASE("vertex ids") {
  CHECK(Arrangement{{4, 3}, {1, 0}}.id() == "4,3|1,0");
  CHECK(Arrangement{{12, 3}, {4, 0}}.id() == "12,3|4,0");
}
