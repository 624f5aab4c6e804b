#include <stdexcept>
#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "sunn/multiplet.hpp"

using namespace sunn;

namespace {

MultipletGraph build_any(int n, std::vector<Int> m) {
  const Rank rank(n);
  const DynkinLabels labels(rank, std::move(m));
  return labels.all_positive() ? main_multiplet(rank, labels)
                               : reduced_multiplet(rank, labels);
}

std::vector<Int> mu_of(const Arrangement& arr) {
  std::vector<Int> mu = arr.top;
  mu.insert(mu.end(), arr.bottom.begin(), arr.bottom.end());
  return mu;
}

}  // namespace

TEST_CASE("rank-two multiplet is the six-vertex hexagon") {
  const MultipletGraph graph = build_any(2, {1, 2, 1});
  REQUIRE(graph.vertices.size() == 6);
  REQUIRE(graph.edges.size() == 6);

  std::set<std::tuple<std::string, std::string, int, int, Int>> edges;
  for (const Edge& e : graph.edges)
    edges.insert({graph.vertices[e.src].arrangement.id(),
                  graph.vertices[e.dst].arrangement.id(), e.root.j, e.root.k,
                  e.degree});
  const std::set<std::tuple<std::string, std::string, int, int, Int>> expected{
      {"4,3|1,0", "4,1|3,0", 2, 2, 2}, {"4,1|3,0", "3,1|4,0", 1, 2, 1},
      {"4,1|3,0", "4,0|3,1", 2, 3, 1}, {"3,1|4,0", "3,0|4,1", 2, 3, 1},
      {"4,0|3,1", "3,0|4,1", 1, 2, 1}, {"3,0|4,1", "1,0|4,3", 1, 3, 2},
  };
  CHECK(edges == expected);
}

TEST_CASE("covering moves carry the rank-derived root data") {
  const DynkinLabels labels(Rank(2), {1, 2, 1});

  auto steps = cover_edges(CosetSubset{{1, 2}}, labels);
  REQUIRE(steps.size() == 1);
  CHECK(steps[0].target.positions == std::vector<int>{1, 3});
  CHECK(steps[0].root == Root{2, 2});
  CHECK(steps[0].degree == labels.label(2));

  steps = cover_edges(CosetSubset{{1, 3}}, labels);
  REQUIRE(steps.size() == 2);
  CHECK(steps[0].target.positions == std::vector<int>{2, 3});
  CHECK(steps[0].root == Root{1, 2});
  CHECK(steps[0].degree == labels.label(1));
  CHECK(steps[1].target.positions == std::vector<int>{1, 4});
  CHECK(steps[1].root == Root{2, 3});
  CHECK(steps[1].degree == labels.label(3));

  steps = cover_edges(CosetSubset{{2, 4}}, labels);
  REQUIRE(steps.size() == 1);
  CHECK(steps[0].target.positions == std::vector<int>{3, 4});
  CHECK(steps[0].root == Root{1, 3});
  CHECK(steps[0].degree == labels.label(2));
}

TEST_CASE("subset levels") {
  CHECK(CosetSubset{{1, 2}}.level() == 0);
  CHECK(CosetSubset{{3, 4}}.level() == 4);
  CHECK(CosetSubset{{2, 3}}.level() == 2);
}

TEST_CASE("covering moves satisfy the displacement identity") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<Int> dist(0, 9);
  for (int iter = 0; iter < 40; ++iter) {
    const int n = 1 + iter % 4;
    const Rank rank(n);
    std::vector<Int> m;
    for (int i = 0; i < rank.simple_count(); ++i) m.push_back(dist(rng));
    const DynkinLabels labels(rank, m);
    const LambdaVector lambda = lambda_vector(labels);
    const MultipletGraph graph = labels.all_positive()
                                     ? main_multiplet(rank, labels)
                                     : reduced_multiplet(rank, labels);
    for (const Edge& e : graph.edges) {
      const std::vector<Int> src = mu_of(graph.vertices[e.src].arrangement);
      const std::vector<Int> dst = mu_of(graph.vertices[e.dst].arrangement);
      // src - dst = degree * (e_j - e_{k+1}) for the edge root (j,k).
      for (int i = 0; i < rank.ambient(); ++i) {
        Int expect = 0;
        if (i + 1 == e.root.j) expect = e.degree;
        if (i + 1 == e.root.k + 1) expect = -e.degree;
        CHECK(src[i] - dst[i] == expect);
      }
    }
  }
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(main_multiplet(Rank(2), DynkinLabels(Rank(2), {1, 0, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(reduced_multiplet(Rank(2), DynkinLabels(Rank(2), {1, 2, 1})),
                  std::invalid_argument);
}

TEST_CASE("degenerated multiplets merge and keep the zero-label vertices") {
  CHECK(build_any(3, {2, 1, 0, 3, 1}).vertices.size() == 14);

  const MultipletGraph graph = build_any(3, {0, 2, 0, 5, 3});
  CHECK(graph.vertices.size() == 10);
  std::vector<Edge> degenerate;
  for (const Edge& e : graph.edges)
    if (e.degenerate_ks) degenerate.push_back(e);
  REQUIRE(degenerate.size() == 1);
  CHECK(degenerate[0].degree == 3);  // the last label
  CHECK(ks_partner(graph.vertices[degenerate[0].src].arrangement) ==
        graph.vertices[degenerate[0].dst].arrangement);
}

TEST_CASE("quadruple reduction of the rank-four algebra") {
  const MultipletGraph graph = build_any(4, {0, 2, 0, 1, 0, 3, 0});
  CHECK(graph.vertices.size() == 19);
  REQUIRE(graph.singlets.size() == 1);
  const Vertex& singlet = graph.vertices[graph.singlets[0].vertex];
  CHECK(singlet.signature.m_labels == std::vector<Int>{2, 1, 3, 2, 1, 3});
  CHECK(singlet.signature.two_c == 0);
  CHECK(singlet.signature.flags.count(VertexFlag::Singlet) == 1);
}

TEST_CASE("triple reduction singlet and its annihilating operators") {
  const MultipletGraph graph = build_any(3, {0, 1, 0, 2, 0});
  REQUIRE(graph.singlets.size() == 1);
  const SingletRecord& record = graph.singlets[0];
  const Vertex& singlet = graph.vertices[record.vertex];
  CHECK(singlet.arrangement == Arrangement{{3, 2, 0}, {3, 2, 0}});
  CHECK(singlet.signature.m_labels == std::vector<Int>{1, 2, 1, 2});
  REQUIRE(record.operators.size() == 2);
  CHECK(record.operators[0].first == Root{1, 4});
  CHECK(record.operators[0].second == 1);
  CHECK(record.operators[1].first == Root{2, 5});
  CHECK(record.operators[1].second == 2);
}

TEST_CASE("rank-two double reduction") {
  // Three merged classes; the middle one is the unique self-paired vertex.
  const MultipletGraph graph = build_any(2, {0, 5, 0});
  CHECK(graph.vertices.size() == 3);
  REQUIRE(graph.singlets.size() == 1);
  const Vertex& singlet = graph.vertices[graph.singlets[0].vertex];
  CHECK(singlet.signature.m_labels == std::vector<Int>{5, 5});
  CHECK(singlet.signature.two_c == 0);
  int self_paired = 0;
  for (const Vertex& v : graph.vertices)
    if (ks_partner(v.arrangement) == v.arrangement) ++self_paired;
  CHECK(self_paired == 1);
  // The one outgoing operator lands on the fully degenerate vertex.
  REQUIRE(graph.singlets[0].operators.size() == 1);
  CHECK(graph.singlets[0].operators[0].first == Root{1, 3});
  CHECK(graph.singlets[0].operators[0].second == 5);
}

TEST_CASE("fully degenerate weight yields a single vertex") {
  const MultipletGraph graph = build_any(2, {0, 0, 0});
  CHECK(graph.vertices.size() == 1);
  CHECK(graph.edges.empty());
  CHECK(graph.singlets.size() == 1);
  CHECK(graph.singlets[0].operators.empty());
}

TEST_CASE("full multiplets have one source, one sink, full path coverage") {
  std::mt19937 rng(43);
  std::uniform_int_distribution<Int> dist(1, 9);
  for (int n = 1; n <= 4; ++n) {
    const Rank rank(n);
    std::vector<Int> m;
    for (int i = 0; i < rank.simple_count(); ++i) m.push_back(dist(rng));
    const MultipletGraph graph = main_multiplet(rank, DynkinLabels(rank, m));

    const std::size_t count = graph.vertices.size();
    std::vector<int> in_degree(count, 0), out_degree(count, 0);
    for (const Edge& e : graph.edges) {
      ++out_degree[e.src];
      ++in_degree[e.dst];
    }
    const int source = graph.flagged_vertex(VertexFlag::Chi0Minus);
    const int sink = graph.flagged_vertex(VertexFlag::Chi0Plus);
    REQUIRE(source >= 0);
    REQUIRE(sink >= 0);
    for (std::size_t v = 0; v < count; ++v) {
      CHECK((in_degree[v] == 0) == (static_cast<int>(v) == source));
      CHECK((out_degree[v] == 0) == (static_cast<int>(v) == sink));
    }

    // Forward reach from the source and backward reach from the sink must
    // both cover everything, so every vertex sits on a source-sink path.
    const auto reach = [&](int start, bool forward) {
      std::set<int> seen{start};
      std::vector<int> todo{start};
      while (!todo.empty()) {
        const int v = todo.back();
        todo.pop_back();
        for (const Edge& e : graph.edges) {
          const int from = forward ? e.src : e.dst;
          const int to = forward ? e.dst : e.src;
          if (from == v && !seen.count(to)) {
            seen.insert(to);
            todo.push_back(to);
          }
        }
      }
      return seen;
    };
    CHECK(reach(source, true).size() == count);
    CHECK(reach(sink, false).size() == count);
  }
}

TEST_CASE("reflection reverses the edge set degree for degree") {
  std::mt19937 rng(47);
  std::uniform_int_distribution<Int> dist(0, 9);
  for (int iter = 0; iter < 30; ++iter) {
    const int n = 1 + iter % 4;
    std::vector<Int> m;
    for (int i = 0; i < 2 * n - 1; ++i) m.push_back(dist(rng));
    const MultipletGraph graph = build_any(n, m);
    std::set<std::tuple<int, int, Int>> edges, mirrored;
    for (const Edge& e : graph.edges) {
      edges.insert({e.src, e.dst, e.degree});
      const int src = graph.index_of(ks_partner(graph.vertices[e.dst].arrangement));
      const int dst = graph.index_of(ks_partner(graph.vertices[e.src].arrangement));
      mirrored.insert({src, dst, e.degree});
    }
    CHECK(edges == mirrored);
  }
}

TEST_CASE("flags of the extremal vertices") {
  const MultipletGraph graph = build_any(2, {1, 2, 1});
  const int lo = graph.flagged_vertex(VertexFlag::Chi0Minus);
  const int hi = graph.flagged_vertex(VertexFlag::Chi0Plus);
  CHECK(graph.vertices[lo].signature.two_c == -6);
  CHECK(graph.vertices[hi].signature.two_c == 6);
  CHECK(graph.vertices[lo].signature.flags.count(VertexFlag::FiniteDimBearing) == 1);

  const MultipletGraph reduced = build_any(2, {0, 2, 1});
  const int rlo = reduced.flagged_vertex(VertexFlag::Chi0Minus);
  REQUIRE(rlo >= 0);
  CHECK(reduced.vertices[rlo].signature.flags.count(VertexFlag::FiniteDimBearing) == 0);
}

TEST_CASE("reduction taxonomy") {
  const auto classes = classify_reductions(Rank(3), 2);
  std::vector<std::vector<int>> relevant;
  for (const ReductionClass& cls : classes)
    if (cls.physically_relevant) relevant.push_back(cls.zeros);
  CHECK(relevant == std::vector<std::vector<int>>{{1, 3}, {1, 4}, {1, 5}, {2, 4}});
  for (const ReductionClass& cls : classes)
    if (cls.physically_relevant) CHECK(cls.size == 10);

  const auto quadruple = classify_reductions(Rank(4), 4);
  std::vector<std::vector<int>> quadruple_relevant;
  for (const ReductionClass& cls : quadruple)
    if (cls.physically_relevant) quadruple_relevant.push_back(cls.zeros);
  CHECK(quadruple_relevant == std::vector<std::vector<int>>{{1, 3, 5, 7}});

  CHECK_THROWS_AS(classify_reductions(Rank(3), 0), std::invalid_argument);
  CHECK_THROWS_AS(classify_reductions(Rank(3), 6), std::invalid_argument);
}

TEST_CASE("three equivalent forms of physical relevance") {
  std::mt19937 rng(53);
  for (int n = 2; n <= 4; ++n) {
    const Rank rank(n);
    for (int order = 1; order <= rank.simple_count(); ++order) {
      for (const ReductionClass& cls : classify_reductions(rank, order)) {
        const DynkinLabels labels = generic_labels(rank, cls.zeros);
        const LambdaVector lambda = lambda_vector(labels);

        // Form 1: no two consecutive zero positions (stored flag).
        // Form 2: no coordinate value repeats more than twice.
        std::map<Int, int> multiplicity;
        for (Int v : lambda.values()) ++multiplicity[v];
        int max_mult = 0;
        for (const auto& [value, count] : multiplicity)
          max_mult = std::max(max_mult, count);

        // Form 3: some arrangement has all within-block steps positive.
        bool strict_split = false;
        for (const Arrangement& arr : all_arrangements(lambda)) {
          const ERSignature sig = signature_of(arr);
          if (std::all_of(sig.m_labels.begin(), sig.m_labels.end(),
                          [](Int v) { return v > 0; }))
            strict_split = true;
        }

        CHECK(cls.physically_relevant == (max_mult <= 2));
        CHECK(cls.physically_relevant == strict_split);
      }
    }
  }
}

TEST_CASE("generic labels scale guard") {
  CHECK_THROWS_AS(generic_labels(Rank(21), {}), std::invalid_argument);
  const DynkinLabels labels = generic_labels(Rank(2), {2});
  CHECK(labels.values() == std::vector<Int>{3, 0, 27});
}
