#include "sunn/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace sunn {

AlgebraTag make_algebra_tag(AlgebraFamily family, Rank rank) {
  const int n = rank.n;
  switch (family) {
    case AlgebraFamily::SUnn:
      return {family, "su(" + std::to_string(n) + "," + std::to_string(n) + ")",
              "sl(" + std::to_string(n) + ",C)_R"};
    case AlgebraFamily::SL2nR:
      return {family, "sl(" + std::to_string(2 * n) + ",R)",
              "sl(" + std::to_string(n) + ",R) + sl(" + std::to_string(n) + ",R)"};
    case AlgebraFamily::SUStar2n:
      if (n % 2 != 0)
        throw std::invalid_argument("su*(2n) requires even n");
      return {family, "su*(" + std::to_string(2 * n) + ")",
              "su*(" + std::to_string(n) + ") + su*(" + std::to_string(n) + ")"};
  }
  throw std::logic_error("make_algebra_tag: unknown family");
}

std::vector<AlgebraTag> parabolic_relatives(Rank rank) {
  std::vector<AlgebraTag> tags{make_algebra_tag(AlgebraFamily::SUnn, rank),
                               make_algebra_tag(AlgebraFamily::SL2nR, rank)};
  if (rank.n % 2 == 0)
    tags.push_back(make_algebra_tag(AlgebraFamily::SUStar2n, rank));
  return tags;
}

BigInt weyl_dimension(const std::vector<Int>& labels) {
  for (Int v : labels)
    if (v < 1)
      throw std::domain_error(
          "weyl_dimension: labels must be positive (no finite-dimensional "
          "subrepresentation otherwise)");
  const int count = static_cast<int>(labels.size());
  BigInt numerator = 1;
  BigInt denominator = 1;
  for (int j = 0; j < count; ++j) {
    Int interval = 0;
    for (int k = j; k < count; ++k) {
      interval += labels[static_cast<std::size_t>(k)];
      numerator *= interval;
      denominator *= (k - j + 1);
    }
  }
  return numerator / denominator;
}

BigInt weyl_dimension(const DynkinLabels& labels) {
  return weyl_dimension(labels.values());
}

namespace {

// Lower bound of 2d over admissible labels with the given zero pattern:
// each nonzero label contributes at least min(i, 2n-i).
Int min_two_d(const MultipletGraph& graph) {
  const int N = graph.rank.ambient();
  Int bound = static_cast<Int>(graph.rank.n) * graph.rank.n;
  for (int i = 1; i < N; ++i)
    if (graph.labels.label(i) != 0) bound += std::min(i, N - i);
  return bound;
}

}  // namespace

std::vector<DSAnnotation> ds_annotations(const MultipletGraph& graph,
                                         AlgebraFamily family) {
  if (family != AlgebraFamily::SUnn) return {};

  const int n = graph.rank.n;
  const std::vector<int> zeros = graph.labels.zero_set();
  const int chi0_plus = graph.flagged_vertex(VertexFlag::Chi0Plus);
  if (chi0_plus < 0) return {};

  if (n == 2 && zeros.empty())
    return {DSAnnotation{chi0_plus, DSKind::DiscreteSeries, min_two_d(graph)}};
  if ((n == 2 || n == 3 || n == 4) && zeros == std::vector<int>{n})
    return {DSAnnotation{chi0_plus, DSKind::LimitsOfDiscreteSeries,
                         min_two_d(graph)}};
  return {};
}

MultipletGraph annotate(MultipletGraph graph, AlgebraFamily family) {
  graph.algebra = make_algebra_tag(family, graph.rank).name;
  for (const DSAnnotation& ann : ds_annotations(graph, family)) {
    auto& flags = graph.vertices[static_cast<std::size_t>(ann.vertex)].signature.flags;
    flags.insert(ann.kind == DSKind::DiscreteSeries
                     ? VertexFlag::DiscreteSeries
                     : VertexFlag::LimitsOfDiscreteSeries);
  }
  return graph;
}

}  // namespace sunn
