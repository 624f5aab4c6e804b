#include "sunn/basic.hpp"

#include <stdexcept>
#include <string>

namespace sunn {

Rank::Rank(int n_) : n(n_) {
  if (n < 1) throw std::invalid_argument("Rank: n must be >= 1");
}

DynkinLabels::DynkinLabels(Rank rank, std::vector<Int> m)
    : rank_(rank), m_(std::move(m)) {
  if (static_cast<int>(m_.size()) != rank_.simple_count())
    throw std::invalid_argument("DynkinLabels: expected " +
                                std::to_string(rank_.simple_count()) +
                                " labels, got " + std::to_string(m_.size()));
  for (Int v : m_)
    if (v < 0) throw std::invalid_argument("DynkinLabels: labels must be >= 0");
}

Int DynkinLabels::label(int i) const {
  if (i < 1 || i > rank_.simple_count())
    throw std::out_of_range("DynkinLabels: index " + std::to_string(i));
  return m_[static_cast<std::size_t>(i - 1)];
}

std::vector<int> DynkinLabels::zero_set() const {
  std::vector<int> zeros;
  for (int i = 1; i <= rank_.simple_count(); ++i)
    if (label(i) == 0) zeros.push_back(i);
  return zeros;
}

bool DynkinLabels::all_positive() const {
  for (Int v : m_)
    if (v == 0) return false;
  return true;
}

LambdaVector::LambdaVector(Rank rank, std::vector<Int> values)
    : rank_(rank), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != rank_.ambient())
    throw std::invalid_argument("LambdaVector: expected " +
                                std::to_string(rank_.ambient()) +
                                " coordinates");
  for (std::size_t i = 0; i + 1 < values_.size(); ++i)
    if (values_[i] < values_[i + 1])
      throw std::invalid_argument("LambdaVector: coordinates must decrease weakly");
  if (values_.back() != 0)
    throw std::invalid_argument("LambdaVector: last coordinate must be 0");
}

Int LambdaVector::at(int i) const {
  if (i < 1 || i > rank_.ambient())
    throw std::out_of_range("LambdaVector: index " + std::to_string(i));
  return values_[static_cast<std::size_t>(i - 1)];
}

bool LambdaVector::strictly_decreasing() const {
  for (std::size_t i = 0; i + 1 < values_.size(); ++i)
    if (values_[i] == values_[i + 1]) return false;
  return true;
}

std::vector<Root> positive_roots(Rank rank) {
  std::vector<Root> roots;
  const int top = rank.simple_count();
  roots.reserve(static_cast<std::size_t>(top) * (top + 1) / 2);
  for (int j = 1; j <= top; ++j)
    for (int k = j; k <= top; ++k)
      roots.push_back(Root{j, k, j <= rank.n && rank.n <= k});
  return roots;
}

namespace {

void check_root(const DynkinLabels& labels, const Root& root) {
  const int top = labels.rank().simple_count();
  if (root.j < 1 || root.j > root.k || root.k > top)
    throw std::out_of_range("root (" + std::to_string(root.j) + "," +
                            std::to_string(root.k) + ") out of range for rank");
}

}  // namespace

Int hc_param(const DynkinLabels& labels, const Root& root) {
  check_root(labels, root);
  Int sum = 0;
  for (int i = root.j; i <= root.k; ++i) sum += labels.label(i);
  return sum;
}

std::optional<Int> bgg_degree(const DynkinLabels& labels, const Root& root) {
  const Int m = hc_param(labels, root);
  if (m == 0) return std::nullopt;
  return m;
}

LambdaVector lambda_vector(const DynkinLabels& labels) {
  const int N = labels.rank().ambient();
  std::vector<Int> values(static_cast<std::size_t>(N), 0);
  Int sum = 0;
  for (int i = N - 1; i >= 1; --i) {
    sum += labels.label(i);
    values[static_cast<std::size_t>(i - 1)] = sum;
  }
  return LambdaVector(labels.rank(), std::move(values));
}

DynkinLabels labels_of(const LambdaVector& lambda) {
  std::vector<Int> m;
  const auto& v = lambda.values();
  m.reserve(v.size() - 1);
  for (std::size_t i = 0; i + 1 < v.size(); ++i) m.push_back(v[i] - v[i + 1]);
  return DynkinLabels(lambda.rank(), std::move(m));
}

}  // namespace sunn
