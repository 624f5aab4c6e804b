#include "sunn/emit.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "json.hpp"

namespace sunn::emit {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string labels_string(const std::vector<Int>& labels) {
  std::string out = "(";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(labels[i]);
  }
  return out + ")";
}

std::string signature_string(const ERSignature& sig) {
  return "{" + labels_string(sig.m_labels) + "; " + half_string(sig.two_c) + "}";
}

std::vector<std::string> flag_names(const ERSignature& sig) {
  std::vector<std::string> out;
  for (VertexFlag f : sig.flags) out.push_back(flag_name(f));
  return out;
}

// One table row: a reflection pair (minus member first) or a singlet.
struct TableRow {
  const Vertex* minus = nullptr;
  const Vertex* plus = nullptr;  // null for singlets
};

std::vector<TableRow> table_rows(const MultipletGraph& graph) {
  std::vector<TableRow> rows;
  std::vector<bool> done(graph.vertices.size(), false);
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    if (done[v]) continue;
    const Vertex& vertex = graph.vertices[v];
    const Arrangement partner = ks_partner(vertex.arrangement);
    if (partner == vertex.arrangement) {
      done[v] = true;
      rows.push_back(TableRow{&vertex, nullptr});
      continue;
    }
    const int w = graph.index_of(partner);
    done[v] = true;
    done[static_cast<std::size_t>(w)] = true;
    const Vertex& other = graph.vertices[static_cast<std::size_t>(w)];
    // Minus member: negative weight, or the smaller arrangement on a tie.
    const bool vertex_first =
        vertex.signature.two_c != other.signature.two_c
            ? vertex.signature.two_c < other.signature.two_c
            : vertex.arrangement < other.arrangement;
    rows.push_back(vertex_first ? TableRow{&vertex, &other}
                                : TableRow{&other, &vertex});
  }
  std::sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
    const Int wa = std::abs(a.minus->signature.two_c);
    const Int wb = std::abs(b.minus->signature.two_c);
    if (wa != wb) return wa > wb;
    return a.minus->arrangement < b.minus->arrangement;
  });
  return rows;
}

}  // namespace

std::string half_string(Int doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

std::string to_json(const MultipletGraph& graph) {
  ordered_json doc;
  doc["rank"] = graph.rank.n;
  doc["algebra"] = graph.algebra;
  doc["labels"] = graph.labels.values();
  doc["zeroSet"] = graph.labels.zero_set();

  doc["vertices"] = ordered_json::array();
  for (const Vertex& v : graph.vertices) {
    ordered_json node;
    node["id"] = v.arrangement.id();
    node["top"] = v.arrangement.top;
    node["bottom"] = v.arrangement.bottom;
    node["mLabels"] = v.signature.m_labels;
    node["twoC"] = v.signature.two_c;
    node["flags"] = flag_names(v.signature);
    doc["vertices"].push_back(std::move(node));
  }

  doc["edges"] = ordered_json::array();
  for (const Edge& e : graph.edges) {
    ordered_json edge;
    edge["src"] = graph.vertices[static_cast<std::size_t>(e.src)].arrangement.id();
    edge["dst"] = graph.vertices[static_cast<std::size_t>(e.dst)].arrangement.id();
    edge["rootJ"] = e.root.j;
    edge["rootK"] = e.root.k;
    edge["degree"] = e.degree;
    edge["degenerateKS"] = e.degenerate_ks;
    doc["edges"].push_back(std::move(edge));
  }

  doc["singlets"] = ordered_json::array();
  for (const SingletRecord& s : graph.singlets) {
    ordered_json record;
    record["vertex"] =
        graph.vertices[static_cast<std::size_t>(s.vertex)].arrangement.id();
    record["operators"] = ordered_json::array();
    for (const auto& [root, degree] : s.operators) {
      ordered_json op;
      op["rootJ"] = root.j;
      op["rootK"] = root.k;
      op["degree"] = degree;
      record["operators"].push_back(std::move(op));
    }
    doc["singlets"].push_back(std::move(record));
  }

  return doc.dump(2) + "\n";
}

std::string to_dot(const MultipletGraph& graph, const RenderOptions& opts) {
  std::ostringstream out;
  out << "digraph multiplet {\n";
  out << "  rankdir=TB;\n";
  out << "  node [shape=box];\n";
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    const Vertex& vertex = graph.vertices[v];
    out << "  n" << v << " [label=\"" << signature_string(vertex.signature)
        << "\"";
    if (vertex.signature.flags.count(VertexFlag::Singlet))
      out << ", penwidth=2";
    out << "];\n";
  }
  // Group vertices of equal weight so the layout stays symmetric about the
  // two_c = 0 line.
  std::map<Int, std::vector<std::size_t>> by_weight;
  for (std::size_t v = 0; v < graph.vertices.size(); ++v)
    by_weight[graph.vertices[v].signature.two_c].push_back(v);
  for (const auto& [weight, members] : by_weight) {
    out << "  { rank=same;";
    for (std::size_t v : members) out << " n" << v << ";";
    out << " }\n";
  }
  for (const Edge& e : graph.edges) {
    out << "  n" << e.src << " -> n" << e.dst << " [label=\"α_{" << e.root.j
        << ".." << e.root.k << "}^" << e.degree << "\"";
    if (e.degenerate_ks && opts.show_degenerate_ks)
      out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_table(const MultipletGraph& graph, const RenderOptions& opts) {
  const std::vector<TableRow> rows = table_rows(graph);
  std::ostringstream out;
  if (opts.format == Format::Latex) {
    out << "\\begin{array}{ccc}\n";
    for (const TableRow& row : rows) {
      const std::string minus = "\\{" + labels_string(row.minus->signature.m_labels) +
                                ";\\, " + half_string(row.minus->signature.two_c) +
                                "\\}";
      if (row.plus) {
        out << minus << " & \\leftrightarrow & \\{"
            << labels_string(row.plus->signature.m_labels) << ";\\, "
            << half_string(row.plus->signature.two_c) << "\\} \\\\\n";
      } else {
        out << minus << " & & \\\\\n";
      }
    }
    out << "\\end{array}\n";
    return out.str();
  }

  out << "c_minus\tlabels_minus\tc_plus\tlabels_plus\n";
  for (const TableRow& row : rows) {
    out << half_string(row.minus->signature.two_c) << "\t"
        << labels_string(row.minus->signature.m_labels) << "\t";
    if (row.plus)
      out << half_string(row.plus->signature.two_c) << "\t"
          << labels_string(row.plus->signature.m_labels);
    else
      out << "\t";
    out << "\n";
  }
  return out.str();
}

std::string render(const MultipletGraph& graph, const RenderOptions& opts) {
  switch (opts.format) {
    case Format::Json: return to_json(graph);
    case Format::Dot: return to_dot(graph, opts);
    case Format::Tsv:
    case Format::Latex: return to_table(graph, opts);
  }
  return {};
}

}  // namespace sunn::emit
