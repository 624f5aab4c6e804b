#include "sunn/multiplet.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sunn {

int CosetSubset::level() const {
  const int n = static_cast<int>(positions.size());
  int sum = std::accumulate(positions.begin(), positions.end(), 0);
  return sum - n * (n + 1) / 2;
}

int MultipletGraph::index_of(const Arrangement& arr) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].arrangement == arr) return static_cast<int>(i);
  return -1;
}

int MultipletGraph::flagged_vertex(VertexFlag flag) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].signature.flags.count(flag)) return static_cast<int>(i);
  return -1;
}

namespace {

std::vector<CosetSubset> all_subsets(Rank rank) {
  const int n = rank.n;
  const int N = rank.ambient();
  std::vector<CosetSubset> out;
  std::vector<int> pick(static_cast<std::size_t>(n));
  std::iota(pick.begin(), pick.end(), 1);
  while (true) {
    out.push_back(CosetSubset{pick});
    int i = n - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == N - n + i + 1) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

Arrangement arrangement_of(const CosetSubset& subset, const LambdaVector& lambda) {
  Arrangement arr;
  const int N = lambda.rank().ambient();
  std::size_t next = 0;
  for (int pos = 1; pos <= N; ++pos) {
    if (next < subset.positions.size() && subset.positions[next] == pos) {
      arr.top.push_back(lambda.at(pos));
      ++next;
    } else {
      arr.bottom.push_back(lambda.at(pos));
    }
  }
  return arr;
}

MultipletGraph build_graph(Rank rank, const DynkinLabels& labels) {
  const LambdaVector lambda = lambda_vector(labels);
  MultipletGraph graph{rank, labels, "su(" + std::to_string(rank.n) + "," +
                                         std::to_string(rank.n) + ")",
                       {}, {}, {}};

  const std::vector<Arrangement> arrangements = all_arrangements(lambda);
  graph.vertices.reserve(arrangements.size());
  std::map<Arrangement, int> index;
  for (const Arrangement& arr : arrangements) {
    index.emplace(arr, static_cast<int>(graph.vertices.size()));
    graph.vertices.push_back(Vertex{arr, signature_of(arr)});
  }

  std::set<std::tuple<int, int, int, int, Int>> seen;
  for (const CosetSubset& subset : all_subsets(rank)) {
    const int src = index.at(arrangement_of(subset, lambda));
    for (const CoverStep& step : cover_edges(subset, labels)) {
      if (step.degree == 0) continue;  // collapsed by the degeneration
      const int dst = index.at(arrangement_of(step.target, lambda));
      if (seen.insert({src, dst, step.root.j, step.root.k, step.degree}).second) {
        const bool deg_ks =
            ks_partner(graph.vertices[static_cast<std::size_t>(src)].arrangement) ==
            graph.vertices[static_cast<std::size_t>(dst)].arrangement;
        graph.edges.push_back(Edge{src, dst, step.root, step.degree, deg_ks});
      }
    }
  }
  std::sort(graph.edges.begin(), graph.edges.end(),
            [](const Edge& a, const Edge& b) {
              return std::tie(a.src, a.dst, a.root.j, a.root.k, a.degree) <
                     std::tie(b.src, b.dst, b.root.j, b.root.k, b.degree);
            });

  // Flags: the extremal arrangements and the self-paired vertices.
  std::vector<int> low(static_cast<std::size_t>(rank.n));
  std::vector<int> high(static_cast<std::size_t>(rank.n));
  std::iota(low.begin(), low.end(), 1);
  std::iota(high.begin(), high.end(), rank.n + 1);
  const int chi0_minus = index.at(arrangement_of(CosetSubset{low}, lambda));
  const int chi0_plus = index.at(arrangement_of(CosetSubset{high}, lambda));
  graph.vertices[static_cast<std::size_t>(chi0_minus)].signature.flags.insert(
      VertexFlag::Chi0Minus);
  graph.vertices[static_cast<std::size_t>(chi0_plus)].signature.flags.insert(
      VertexFlag::Chi0Plus);
  if (labels.all_positive())
    graph.vertices[static_cast<std::size_t>(chi0_minus)].signature.flags.insert(
        VertexFlag::FiniteDimBearing);

  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    Vertex& vertex = graph.vertices[v];
    if (ks_partner(vertex.arrangement) == vertex.arrangement) {
      vertex.signature.flags.insert(VertexFlag::Singlet);
      SingletRecord record{static_cast<int>(v), {}};
      for (const Edge& e : graph.edges)
        if (e.src == static_cast<int>(v))
          record.operators.emplace_back(e.root, e.degree);
      std::sort(record.operators.begin(), record.operators.end(),
                [](const auto& a, const auto& b) {
                  return std::tie(a.first.j, a.first.k, a.second) <
                         std::tie(b.first.j, b.first.k, b.second);
                });
      graph.singlets.push_back(std::move(record));
    }
  }
  return graph;
}

}  // namespace

std::vector<CoverStep> cover_edges(const CosetSubset& subset,
                                   const DynkinLabels& labels) {
  const int n = labels.rank().n;
  const int N = labels.rank().ambient();
  std::vector<int> complement;
  complement.reserve(static_cast<std::size_t>(n));
  {
    std::size_t next = 0;
    for (int pos = 1; pos <= N; ++pos) {
      if (next < subset.positions.size() && subset.positions[next] == pos)
        ++next;
      else
        complement.push_back(pos);
    }
  }

  std::vector<CoverStep> steps;
  for (std::size_t idx = 0; idx < subset.positions.size(); ++idx) {
    const int a = subset.positions[idx];
    if (a == N) continue;
    const bool successor_inside =
        std::binary_search(subset.positions.begin(), subset.positions.end(), a + 1);
    if (successor_inside) continue;

    CosetSubset target = subset;
    target.positions[idx] = a + 1;
    std::sort(target.positions.begin(), target.positions.end());

    const int p = static_cast<int>(idx) + 1;  // rank of a inside the subset
    const int q = static_cast<int>(std::lower_bound(complement.begin(),
                                                    complement.end(), a + 1) -
                                   complement.begin()) +
                  1;  // rank of a+1 inside the complement
    Root root{p, n + q - 1, true};
    steps.push_back(CoverStep{std::move(target), root, labels.label(a)});
  }
  return steps;
}

MultipletGraph main_multiplet(Rank rank, const DynkinLabels& labels) {
  if (!labels.all_positive())
    throw std::invalid_argument(
        "main_multiplet: labels contain zeros; build the reduced multiplet");
  return build_graph(rank, labels);
}

MultipletGraph reduced_multiplet(Rank rank, const DynkinLabels& labels) {
  if (labels.all_positive())
    throw std::invalid_argument(
        "reduced_multiplet: no zero labels; build the main multiplet");
  return build_graph(rank, labels);
}

std::vector<SingletRecord> singlet_minimal_irreps(const MultipletGraph& graph) {
  return graph.singlets;
}

DynkinLabels generic_labels(Rank rank, const std::vector<int>& zeros) {
  if (rank.simple_count() > 39)
    throw std::invalid_argument("generic_labels: scale exceeds 64-bit range");
  std::set<int> zero_set(zeros.begin(), zeros.end());
  std::vector<Int> m;
  m.reserve(static_cast<std::size_t>(rank.simple_count()));
  Int power = 1;
  for (int i = 1; i <= rank.simple_count(); ++i) {
    power *= 3;
    m.push_back(zero_set.count(i) ? 0 : power);
  }
  return DynkinLabels(rank, std::move(m));
}

std::vector<ReductionClass> classify_reductions(Rank rank, int order) {
  const int top = rank.simple_count();
  if (order < 1 || order > top)
    throw std::invalid_argument("classify_reductions: order out of range");

  const auto conjugate_of = [&](const std::vector<int>& zeros) {
    std::vector<int> conj;
    conj.reserve(zeros.size());
    for (int a : zeros) conj.push_back(rank.ambient() - a);
    std::sort(conj.begin(), conj.end());
    return conj;
  };
  const auto relevant = [](const std::vector<int>& zeros) {
    for (std::size_t i = 0; i + 1 < zeros.size(); ++i)
      if (zeros[i + 1] == zeros[i] + 1) return false;
    return true;
  };

  std::vector<ReductionClass> classes;
  std::set<std::vector<int>> visited;
  std::vector<int> pick(static_cast<std::size_t>(order));
  std::iota(pick.begin(), pick.end(), 1);
  while (true) {
    if (!visited.count(pick)) {
      const std::vector<int> conj = conjugate_of(pick);
      visited.insert(pick);
      visited.insert(conj);
      const std::vector<int>& rep = std::min(pick, conj);
      ReductionClass cls;
      cls.zeros = rep;
      cls.conjugate = conjugate_of(rep);
      cls.physically_relevant = relevant(rep);
      cls.size = build_graph(rank, generic_labels(rank, rep)).vertices.size();
      classes.push_back(std::move(cls));
    }
    int i = order - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == top - order + i + 1) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < order; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  std::sort(classes.begin(), classes.end(),
            [](const ReductionClass& a, const ReductionClass& b) {
              return a.zeros < b.zeros;
            });
  return classes;
}

}  // namespace sunn
