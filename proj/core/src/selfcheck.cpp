#include "sunn/selfcheck.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "sunn/analysis.hpp"
#include "sunn/emit.hpp"
#include "sunn/multiplet.hpp"
#include "sunn/oracle.hpp"
#include "sunn/tables.hpp"

namespace sunn::selfcheck {

namespace {

using SigSet = std::multiset<std::pair<std::vector<Int>, Int>>;

std::string vec_str(const std::vector<Int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::string set_str(const std::vector<int>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + "}";
}

std::string sig_str(const std::pair<std::vector<Int>, Int>& sig) {
  return "{" + vec_str(sig.first) + "; 2c=" + std::to_string(sig.second) + "}";
}

SigSet graph_signatures(const MultipletGraph& graph) {
  SigSet out;
  for (const Vertex& v : graph.vertices)
    out.emplace(v.signature.m_labels, v.signature.two_c);
  return out;
}

DynkinLabels random_labels(Rank rank, const std::vector<int>& zeros,
                           std::mt19937& rng) {
  std::uniform_int_distribution<Int> dist(1, 9);
  std::set<int> zero_set(zeros.begin(), zeros.end());
  std::vector<Int> m;
  for (int i = 1; i <= rank.simple_count(); ++i)
    m.push_back(zero_set.count(i) ? 0 : dist(rng));
  return DynkinLabels(rank, std::move(m));
}

MultipletGraph build_any(Rank rank, const DynkinLabels& labels) {
  return labels.all_positive() ? main_multiplet(rank, labels)
                               : reduced_multiplet(rank, labels);
}

std::string first_diff(const SigSet& computed, const SigSet& expected) {
  SigSet extra;
  std::set_difference(computed.begin(), computed.end(), expected.begin(),
                      expected.end(), std::inserter(extra, extra.begin()));
  SigSet missing;
  std::set_difference(expected.begin(), expected.end(), computed.begin(),
                      computed.end(), std::inserter(missing, missing.begin()));
  std::string out;
  if (!extra.empty()) out += " computed-only " + sig_str(*extra.begin());
  if (!missing.empty()) out += " expected-only " + sig_str(*missing.begin());
  return out;
}

struct Harness {
  std::vector<CheckResult> results;

  void check(int criterion, const std::string& name,
             const std::function<std::string()>& body) {
    CheckResult result{criterion, name, false, {}};
    try {
      result.detail = body();
      result.passed = result.detail.empty();
    } catch (const std::exception& e) {
      result.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(result));
  }
};

// ---------------------------------------------------------------- criteria

void check_main_sizes(Harness& h) {
  const std::pair<int, std::size_t> cases[] = {{1, 2}, {2, 6}, {3, 20}, {4, 70}};
  for (const auto& [n, expect] : cases) {
    h.check(1, "main-size-n" + std::to_string(n), [n, expect] {
      const Rank rank(n);
      std::mt19937 rng(1000u + static_cast<unsigned>(n));
      const DynkinLabels ones(rank, std::vector<Int>(
                                        static_cast<std::size_t>(rank.simple_count()), 1));
      for (const DynkinLabels& labels : {ones, random_labels(rank, {}, rng)}) {
        const auto got = main_multiplet(rank, labels).vertices.size();
        if (got != expect)
          return "labels " + vec_str(labels.values()) + ": got " +
                 std::to_string(got) + " vertices, expected " +
                 std::to_string(expect);
      }
      return std::string{};
    });
  }
}

struct ReducedCase {
  int n;
  std::vector<int> zeros;
  std::size_t expect;
};

const std::vector<ReducedCase>& reduced_cases() {
  static const std::vector<ReducedCase> cases = {
      {3, {1}, 14},       {3, {2}, 14},    {3, {3}, 14},    {3, {4}, 14},
      {3, {5}, 14},       {3, {1, 3}, 10}, {3, {1, 4}, 10}, {3, {1, 5}, 10},
      {3, {2, 4}, 10},    {3, {1, 3, 5}, 7},  {4, {4}, 50},  {4, {1, 3}, 36},
      {4, {1, 3, 5}, 26}, {4, {1, 3, 7}, 26}, {4, {1, 3, 5, 7}, 19},
  };
  return cases;
}

void check_reduced_sizes(Harness& h) {
  for (const ReducedCase& c : reduced_cases()) {
    std::string name = "reduced-size-n" + std::to_string(c.n);
    for (int a : c.zeros) name += "-" + std::to_string(a);
    h.check(2, name, [c] {
      const Rank rank(c.n);
      const DynkinLabels labels = generic_labels(rank, c.zeros);
      const MultipletGraph graph = reduced_multiplet(rank, labels);
      if (graph.vertices.size() != c.expect)
        return "got " + std::to_string(graph.vertices.size()) +
               " vertices, expected " + std::to_string(c.expect);
      // Merged classes must agree with the direct arrangement count.
      const auto direct = all_arrangements(lambda_vector(labels)).size();
      if (direct != graph.vertices.size())
        return "merge count " + std::to_string(graph.vertices.size()) +
               " != arrangement count " + std::to_string(direct);
      return std::string{};
    });
  }
}

void check_tables(Harness& h) {
  unsigned seed = 3000;
  for (const tables::ReferenceTable& table : tables::reference_tables()) {
    ++seed;
    h.check(3, "table-" + table.name, [&table, seed] {
      const Rank rank(table.n);
      std::mt19937 rng(seed);
      for (int iter = 0; iter < 100; ++iter) {
        const DynkinLabels labels = random_labels(rank, table.zeros, rng);
        const MultipletGraph graph = build_any(rank, labels);
        const SigSet computed = graph_signatures(graph);
        const SigSet expected = tables::expected_signatures(table, labels);
        if (computed != expected)
          return "labels " + vec_str(labels.values()) + ":" +
                 first_diff(computed, expected);
      }
      return std::string{};
    });
  }
}

struct KSCase {
  int n;
  std::vector<int> zeros;
  // Fixed points this graph must exhibit: none, or exactly the one listed.
  bool has_singlet;
};

void check_ks_involution(Harness& h) {
  std::vector<KSCase> battery;
  for (int n = 1; n <= 4; ++n) battery.push_back({n, {}, false});
  for (const ReducedCase& c : reduced_cases())
    battery.push_back({c.n, c.zeros,
                       c.zeros.size() == static_cast<std::size_t>(c.n)});
  battery.push_back({2, {1}, false});
  battery.push_back({2, {2}, false});
  battery.push_back({2, {3}, false});
  battery.push_back({2, {1, 2}, false});
  battery.push_back({2, {1, 3}, true});

  unsigned seed = 4000;
  for (const KSCase& c : battery) {
    ++seed;
    std::string name = "ks-law-n" + std::to_string(c.n);
    if (!c.zeros.empty()) name += "-" + set_str(c.zeros);
    h.check(4, name, [c, seed] {
      const Rank rank(c.n);
      std::mt19937 rng(seed);
      const DynkinLabels labels = random_labels(rank, c.zeros, rng);
      const MultipletGraph graph = build_any(rank, labels);

      Int weight_sum = 0;
      std::vector<int> fixed;
      for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
        const Vertex& vertex = graph.vertices[v];
        weight_sum += vertex.signature.two_c;
        const Arrangement partner = ks_partner(vertex.arrangement);
        const int w = graph.index_of(partner);
        if (w < 0) return "partner of " + vertex.arrangement.id() + " missing";
        const ERSignature& psig =
            graph.vertices[static_cast<std::size_t>(w)].signature;
        if (psig.m_labels != star(vertex.signature.m_labels))
          return "partner labels of " + vertex.arrangement.id() +
                 " are not the half-swap";
        if (psig.two_c != -vertex.signature.two_c)
          return "partner weight of " + vertex.arrangement.id() +
                 " is not negated";
        if (partner == vertex.arrangement) {
          fixed.push_back(static_cast<int>(v));
          if (vertex.signature.two_c != 0)
            return std::string("fixed point with nonzero weight");
          if (star(vertex.signature.m_labels) != vertex.signature.m_labels)
            return std::string("fixed point without half-equal labels");
        }
      }
      if (weight_sum != 0) return std::string("weights do not sum to zero");
      if (c.has_singlet && fixed.size() != 1)
        return "expected exactly one fixed point, got " +
               std::to_string(fixed.size());
      if (!c.has_singlet && !fixed.empty())
        return "unexpected fixed point " +
               graph.vertices[static_cast<std::size_t>(fixed.front())]
                   .arrangement.id();
      return std::string{};
    });
  }
}

void check_edge_law(Harness& h) {
  for (int n = 1; n <= 4; ++n) {
    h.check(5, "edge-law-n" + std::to_string(n), [n] {
      const Rank rank(n);
      std::mt19937 rng(5000u + static_cast<unsigned>(n));
      std::uniform_int_distribution<Int> dist(0, 9);  // zeros included
      for (int iter = 0; iter < 30; ++iter) {
        std::vector<Int> m;
        for (int i = 0; i < rank.simple_count(); ++i) m.push_back(dist(rng));
        const DynkinLabels labels(rank, m);
        const std::set<Int> simple(m.begin(), m.end());
        const MultipletGraph graph = build_any(rank, labels);
        for (const Edge& e : graph.edges) {
          const Int lo = graph.vertices[static_cast<std::size_t>(e.src)].signature.two_c;
          const Int hi = graph.vertices[static_cast<std::size_t>(e.dst)].signature.two_c;
          if (hi - lo != 2 * e.degree)
            return "labels " + vec_str(m) + ": edge weight step " +
                   std::to_string(hi - lo) + " != 2*" + std::to_string(e.degree);
          if (e.degree < 1) return std::string("edge with degree < 1");
          if (!(e.root.j <= n && n <= e.root.k) || !e.root.noncompact)
            return std::string("edge with compact root");
          if (!simple.count(e.degree))
            return "labels " + vec_str(m) + ": degree " +
                   std::to_string(e.degree) + " is not a simple label";
        }
      }
      return std::string{};
    });
  }
}

struct DegenerateCase {
  int n;
  std::vector<int> zeros;
  int order_index;  // the simple label giving the operator order
};

void check_degenerate_ks(Harness& h) {
  const std::vector<DegenerateCase> cases = {
      {3, {1, 3}, 5}, {3, {1, 5}, 3}, {4, {1, 3, 5}, 7}, {4, {1, 3, 7}, 5}};
  unsigned seed = 6000;
  for (const DegenerateCase& c : cases) {
    ++seed;
    h.check(6, "degenerate-ks-n" + std::to_string(c.n) + "-" + set_str(c.zeros),
            [c, seed] {
              const Rank rank(c.n);
              std::mt19937 rng(seed);
              const DynkinLabels labels = random_labels(rank, c.zeros, rng);
              const MultipletGraph graph = reduced_multiplet(rank, labels);
              std::vector<Edge> degenerate;
              for (const Edge& e : graph.edges)
                if (e.degenerate_ks) degenerate.push_back(e);
              if (degenerate.size() != 1)
                return "expected one partner-connecting edge, got " +
                       std::to_string(degenerate.size());
              const Edge& e = degenerate.front();
              if (e.degree != labels.label(c.order_index))
                return "order " + std::to_string(e.degree) + " != m_" +
                       std::to_string(c.order_index);
              const auto& src = graph.vertices[static_cast<std::size_t>(e.src)];
              const auto& dst = graph.vertices[static_cast<std::size_t>(e.dst)];
              if (!(ks_partner(src.arrangement) == dst.arrangement))
                return std::string("edge does not connect a reflection pair");
              if (src.signature.two_c != -e.degree)
                return std::string("pair weights inconsistent with the order");
              return std::string{};
            });
  }
  // Full multiplets carry no degenerated reflection operators beyond the
  // rank-one doublet, where the single operator is exactly one.
  h.check(6, "degenerate-ks-main", [] {
    for (int n = 1; n <= 4; ++n) {
      const Rank rank(n);
      std::mt19937 rng(6100u + static_cast<unsigned>(n));
      const MultipletGraph graph =
          main_multiplet(rank, random_labels(rank, {}, rng));
      std::size_t count = 0;
      for (const Edge& e : graph.edges)
        if (e.degenerate_ks) ++count;
      const std::size_t expect = n == 1 ? 1 : 0;
      if (count != expect)
        return "n=" + std::to_string(n) + ": " + std::to_string(count) +
               " partner-connecting edges, expected " + std::to_string(expect);
    }
    return std::string{};
  });
}

void check_taxonomy(Harness& h) {
  struct TaxCase {
    int n;
    int order;
    std::vector<std::vector<int>> relevant;
  };
  const std::vector<TaxCase> cases = {
      {3, 2, {{1, 3}, {1, 4}, {1, 5}, {2, 4}}},
      {4, 2, {{1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {2, 4}, {2, 5}, {2, 6}, {3, 5}}},
      {4, 3, {{1, 3, 5}, {1, 3, 6}, {1, 3, 7}, {1, 4, 6}, {1, 4, 7}, {2, 4, 6}}},
      {4, 4, {{1, 3, 5, 7}}},
  };
  for (const TaxCase& c : cases) {
    h.check(7, "taxonomy-n" + std::to_string(c.n) + "-k" + std::to_string(c.order),
            [c] {
              const auto classes = classify_reductions(Rank(c.n), c.order);
              std::vector<std::vector<int>> relevant;
              for (const ReductionClass& cls : classes) {
                if (!cls.physically_relevant) continue;
                relevant.push_back(cls.zeros);
                // Sizes are mirror-invariant.
                const auto mirror =
                    reduced_multiplet(Rank(c.n),
                                      generic_labels(Rank(c.n), cls.conjugate))
                        .vertices.size();
                if (mirror != cls.size)
                  return "size of " + set_str(cls.zeros) +
                         " differs from its mirror image";
              }
              if (relevant != c.relevant) {
                std::string got;
                for (const auto& r : relevant) got += set_str(r) + " ";
                return "relevant classes " + got;
              }
              return std::string{};
            });
  }
}

void check_minimal_irreps(Harness& h) {
  struct IrrepCase {
    int n;
    std::vector<int> zeros;
    std::vector<std::pair<Root, int>> ops;  // root and the order's label index
  };
  const std::vector<IrrepCase> cases = {
      {3, {1, 3, 5}, {{Root{1, 4}, 2}, {Root{2, 5}, 4}}},
      {4, {1, 3, 5, 7}, {{Root{1, 5}, 2}, {Root{2, 6}, 4}, {Root{3, 7}, 6}}},
  };
  unsigned seed = 8000;
  for (const IrrepCase& c : cases) {
    ++seed;
    h.check(8, "minimal-irreps-n" + std::to_string(c.n), [c, seed] {
      const Rank rank(c.n);
      std::mt19937 rng(seed);
      const DynkinLabels labels = random_labels(rank, c.zeros, rng);
      const MultipletGraph graph = reduced_multiplet(rank, labels);
      const auto singlets = singlet_minimal_irreps(graph);
      if (singlets.size() != 1)
        return "expected one singlet, got " + std::to_string(singlets.size());
      const SingletRecord& s = singlets.front();
      if (s.operators.size() != c.ops.size())
        return "expected " + std::to_string(c.ops.size()) + " operators, got " +
               std::to_string(s.operators.size());
      for (std::size_t i = 0; i < c.ops.size(); ++i) {
        const auto& [root, degree] = s.operators[i];
        if (!(root == c.ops[i].first))
          return "operator root (" + std::to_string(root.j) + "," +
                 std::to_string(root.k) + ") unexpected";
        if (degree != labels.label(c.ops[i].second))
          return "operator order " + std::to_string(degree) + " != m_" +
                 std::to_string(c.ops[i].second);
      }
      return std::string{};
    });
  }
}

void check_dimensions(Harness& h) {
  h.check(9, "dimension-trivial", [] {
    if (weyl_dimension(std::vector<Int>{1, 1, 1}) != 1)
      return std::string("all-ones dimension is not 1");
    const Rank rank(2);
    const DynkinLabels ones(rank, {1, 1, 1});
    const MultipletGraph graph = main_multiplet(rank, ones);
    const int lo = graph.flagged_vertex(VertexFlag::Chi0Minus);
    const int hi = graph.flagged_vertex(VertexFlag::Chi0Plus);
    const Int d_lo = conformal_2d(
        graph.vertices[static_cast<std::size_t>(lo)].signature, rank);
    const Int d_hi = conformal_2d(
        graph.vertices[static_cast<std::size_t>(hi)].signature, rank);
    if (d_lo != 0) return "lowest vertex has 2d = " + std::to_string(d_lo);
    if (d_hi != 8) return "highest vertex has 2d = " + std::to_string(d_hi);
    return std::string{};
  });
  h.check(9, "dimension-vs-pattern-count", [] {
    for (int count = 1; count <= 5; ++count) {
      std::vector<Int> labels(static_cast<std::size_t>(count), 1);
      while (true) {
        if (weyl_dimension(labels) != oracle::gt_dimension(labels))
          return "mismatch at labels " + vec_str(labels);
        int i = count - 1;
        while (i >= 0 && labels[static_cast<std::size_t>(i)] == 3) {
          labels[static_cast<std::size_t>(i)] = 1;
          --i;
        }
        if (i < 0) break;
        ++labels[static_cast<std::size_t>(i)];
      }
    }
    return std::string{};
  });
}

void check_oracle(Harness& h) {
  struct OracleCase {
    int n;
    std::vector<int> zeros;
    bool random = true;
  };
  std::vector<OracleCase> cases = {
      {1, {}},     {1, {1}},    {2, {}},        {2, {1}},    {2, {2}},
      {2, {3}},    {2, {1, 3}}, {2, {1, 2}},    {2, {1, 2, 3}}, {3, {}},
      {3, {1}},    {3, {3}},    {3, {1, 3}},    {3, {1, 4}}, {3, {1, 3, 5}},
      {4, {}},     {4, {4}},    {4, {1, 3}},    {4, {1, 3, 5}},
      {4, {1, 3, 7}}, {4, {1, 3, 5, 7}},
  };
  unsigned seed = 9000;
  for (const OracleCase& c : cases) {
    ++seed;
    std::string name = "oracle-n" + std::to_string(c.n);
    if (!c.zeros.empty()) name += "-" + set_str(c.zeros);
    h.check(10, name, [c, seed] {
      const Rank rank(c.n);
      std::mt19937 rng(seed);
      const DynkinLabels labels =
          static_cast<int>(c.zeros.size()) == rank.simple_count()
              ? DynkinLabels(rank, std::vector<Int>(
                                       static_cast<std::size_t>(rank.simple_count()), 0))
              : random_labels(rank, c.zeros, rng);
      const LambdaVector lambda = lambda_vector(labels);
      const MultipletGraph graph = build_any(rank, labels);

      const std::set<Arrangement> brute = oracle::brute_arrangements(lambda);
      std::set<Arrangement> engine;
      for (const Vertex& v : graph.vertices) engine.insert(v.arrangement);
      if (brute != engine)
        return std::string("arrangement sets differ (") +
               std::to_string(brute.size()) + " vs " +
               std::to_string(engine.size()) + ")";

      const std::set<oracle::OracleEdge> brute_e = oracle::brute_edges(lambda);
      std::set<oracle::OracleEdge> engine_e;
      for (const Edge& e : graph.edges)
        engine_e.insert(oracle::OracleEdge{
            graph.vertices[static_cast<std::size_t>(e.src)].arrangement,
            graph.vertices[static_cast<std::size_t>(e.dst)].arrangement, e.root,
            e.degree});
      if (brute_e != engine_e)
        return std::string("edge sets differ (") +
               std::to_string(brute_e.size()) + " vs " +
               std::to_string(engine_e.size()) + ")";
      return std::string{};
    });
  }
}

void check_determinism(Harness& h) {
  const emit::RenderOptions formats[] = {
      {emit::Format::Json, true},
      {emit::Format::Dot, true},
      {emit::Format::Tsv, true},
      {emit::Format::Latex, true},
  };
  const char* format_names[] = {"json", "dot", "tsv", "latex"};
  for (std::size_t f = 0; f < 4; ++f) {
    h.check(11, std::string("determinism-") + format_names[f], [&formats, f] {
      for (int pass = 0; pass < 2; ++pass) {
        const Rank r3(3);
        std::mt19937 rng(11000u);
        const DynkinLabels main_labels = random_labels(r3, {}, rng);
        const DynkinLabels reduced_labels = random_labels(r3, {1, 3}, rng);
        const std::string a = emit::render(
            annotate(main_multiplet(r3, main_labels), AlgebraFamily::SUnn),
            formats[f]);
        const std::string b = emit::render(
            annotate(main_multiplet(r3, main_labels), AlgebraFamily::SUnn),
            formats[f]);
        const std::string c = emit::render(
            annotate(reduced_multiplet(r3, reduced_labels), AlgebraFamily::SUnn),
            formats[f]);
        const std::string d = emit::render(
            annotate(reduced_multiplet(r3, reduced_labels), AlgebraFamily::SUnn),
            formats[f]);
        if (a != b || c != d) return std::string("repeated render differs");
        if (a.empty() || c.empty()) return std::string("empty output");
      }
      return std::string{};
    });
  }
}

}  // namespace

std::vector<CheckResult> run_all() {
  Harness h;
  check_main_sizes(h);
  check_reduced_sizes(h);
  check_tables(h);
  check_ks_involution(h);
  check_edge_law(h);
  check_degenerate_ks(h);
  check_taxonomy(h);
  check_minimal_irreps(h);
  check_dimensions(h);
  check_oracle(h);
  check_determinism(h);
  return h.results;
}

std::string criterion_title(int criterion) {
  switch (criterion) {
    case 1: return "main multiplet sizes";
    case 2: return "reduced multiplet sizes";
    case 3: return "signature table equivalence";
    case 4: return "reflection involution and fixed points";
    case 5: return "edge law";
    case 6: return "degenerate reflection operators";
    case 7: return "reduction taxonomy";
    case 8: return "minimal irrep operators";
    case 9: return "dimension and conformal weights";
    case 10: return "oracle equivalence";
    case 11: return "emitter determinism";
  }
  return "unknown";
}

}  // namespace sunn::selfcheck
