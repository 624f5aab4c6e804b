#include "cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "sunn/analysis.hpp"
#include "sunn/emit.hpp"
#include "sunn/multiplet.hpp"
#include "sunn/selfcheck.hpp"

namespace sunn::cli {

namespace {

struct FlagError {
  std::string message;  // names the offending flag
};

std::vector<Int> parse_csv(const std::string& text, const std::string& flag) {
  std::vector<Int> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw FlagError{flag + ": not an integer list: '" + text + "'"};
    }
  }
  if (values.empty()) throw FlagError{flag + ": empty list"};
  return values;
}

DynkinLabels parse_labels(int n, const std::string& text) {
  const Rank rank(n);
  const std::vector<Int> values = parse_csv(text, "--labels");
  if (static_cast<int>(values.size()) != rank.simple_count())
    throw FlagError{"--labels: expected " + std::to_string(rank.simple_count()) +
                    " entries for --n " + std::to_string(n) + ", got " +
                    std::to_string(values.size())};
  for (Int v : values)
    if (v < 0) throw FlagError{"--labels: entries must be >= 0"};
  return DynkinLabels(rank, values);
}

void cross_check_zeros(const DynkinLabels& labels, const std::string& zeros_csv) {
  if (zeros_csv.empty()) return;
  std::vector<Int> given = parse_csv(zeros_csv, "--zeros");
  std::vector<int> zeros(given.begin(), given.end());
  std::sort(zeros.begin(), zeros.end());
  for (int z : zeros)
    if (z < 1 || z > labels.rank().simple_count())
      throw FlagError{"--zeros: position " + std::to_string(z) +
                      " out of range 1.." +
                      std::to_string(labels.rank().simple_count())};
  if (zeros != labels.zero_set())
    throw FlagError{"--zeros: does not match the zero entries of --labels"};
}

AlgebraFamily parse_algebra(const std::string& name, int n) {
  AlgebraFamily family;
  if (name == "su") family = AlgebraFamily::SUnn;
  else if (name == "sl") family = AlgebraFamily::SL2nR;
  else if (name == "su*") family = AlgebraFamily::SUStar2n;
  else throw FlagError{"--algebra: unknown value '" + name + "' (su, sl, su*)"};
  if (family == AlgebraFamily::SUStar2n && n % 2 != 0)
    throw FlagError{"--algebra: su* requires even n"};
  return family;
}

emit::RenderOptions parse_format(const std::string& name) {
  emit::RenderOptions opts;
  if (name == "json") opts.format = emit::Format::Json;
  else if (name == "dot") opts.format = emit::Format::Dot;
  else if (name == "tsv") opts.format = emit::Format::Tsv;
  else if (name == "latex") opts.format = emit::Format::Latex;
  else throw FlagError{"--format: unknown value '" + name +
                       "' (json, dot, tsv, latex)"};
  return opts;
}

void write_output(const std::string& text, const std::string& path,
                  std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw FlagError{"--output: cannot open '" + path + "'"};
  file << text;
}

Arrangement parse_vertex(const std::string& id) {
  const std::size_t bar = id.find('|');
  if (bar == std::string::npos)
    throw FlagError{"--vertex: expected 'top|bottom', got '" + id + "'"};
  Arrangement arr;
  arr.top = parse_csv(id.substr(0, bar), "--vertex");
  arr.bottom = parse_csv(id.substr(bar + 1), "--vertex");
  return arr;
}

std::string signature_line(const Vertex& vertex) {
  std::string out = vertex.arrangement.id() + "\t{(";
  const auto& labels = vertex.signature.m_labels;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(labels[i]);
  }
  return out + "); " + emit::half_string(vertex.signature.two_c) + "}";
}

int run_verify(std::ostream& out, std::ostream& err) {
  const std::vector<selfcheck::CheckResult> results = selfcheck::run_all();
  const selfcheck::CheckResult* first_failure = nullptr;
  for (const selfcheck::CheckResult& r : results) {
    if (r.passed) {
      out << "PASS  " << r.name << "\n";
    } else {
      out << "FAIL  " << r.name << ": " << r.detail << "\n";
      if (!first_failure) first_failure = &r;
    }
  }
  if (first_failure) {
    err << "verify mismatch in fixture " << first_failure->name << ": "
        << first_failure->detail << "\n";
    return 2;
  }
  out << "all " << results.size() << " fixtures passed\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"multiplet classification engine for su(n,n)-type algebras"};
  app.require_subcommand(1);

  int n = 0;
  std::string labels_csv, zeros_csv, vertex_id, output_path;
  std::string algebra = "su", format = "json";
  int order = 0;

  const auto add_common = [&](CLI::App* cmd, bool with_labels) {
    cmd->add_option("--n", n, "rank parameter n of su(n,n)")
        ->required()
        ->check(CLI::PositiveNumber);
    if (with_labels)
      cmd->add_option("--labels", labels_csv,
                      "comma-separated labels m_1..m_{2n-1}")
          ->required();
    cmd->add_option("--output", output_path, "write to file instead of stdout");
  };

  CLI::App* cmd_main = app.add_subcommand("main", "full multiplet");
  add_common(cmd_main, true);
  cmd_main->add_option("--algebra", algebra, "su, sl or su*");
  cmd_main->add_option("--format", format, "json, dot, tsv or latex");

  CLI::App* cmd_reduce = app.add_subcommand("reduce", "reduced multiplet");
  add_common(cmd_reduce, true);
  cmd_reduce->add_option("--zeros", zeros_csv,
                         "redundant zero positions, checked against --labels");
  cmd_reduce->add_option("--algebra", algebra, "su, sl or su*");
  cmd_reduce->add_option("--format", format, "json, dot, tsv or latex");

  CLI::App* cmd_classify =
      app.add_subcommand("classify", "physically relevant zero patterns");
  add_common(cmd_classify, false);
  cmd_classify->add_option("--order", order, "number of zero labels")
      ->required();

  CLI::App* cmd_dim = app.add_subcommand(
      "dim", "dimension of the finite-dimensional subrepresentation");
  add_common(cmd_dim, true);

  CLI::App* cmd_ks =
      app.add_subcommand("ks", "reflection partner of a vertex");
  add_common(cmd_ks, true);
  cmd_ks->add_option("--vertex", vertex_id, "vertex id, e.g. 4,3|1,0")
      ->required();

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "run the embedded fixtures");

  std::vector<const char*> argv;
  argv.push_back("sunn");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(cmd_verify)) return run_verify(out, err);

    if (app.got_subcommand(cmd_main) || app.got_subcommand(cmd_reduce)) {
      const DynkinLabels labels = parse_labels(n, labels_csv);
      const AlgebraFamily family = parse_algebra(algebra, n);
      const emit::RenderOptions opts = parse_format(format);
      MultipletGraph graph{Rank(n), labels, "", {}, {}, {}};
      if (app.got_subcommand(cmd_main)) {
        if (!labels.all_positive())
          throw FlagError{
              "--labels: zero entries; use the reduce command instead"};
        graph = main_multiplet(Rank(n), labels);
      } else {
        if (labels.all_positive())
          throw FlagError{
              "--labels: no zero entries; use the main command instead"};
        cross_check_zeros(labels, zeros_csv);
        graph = reduced_multiplet(Rank(n), labels);
      }
      write_output(emit::render(annotate(std::move(graph), family), opts),
                   output_path, out);
      return 0;
    }

    if (app.got_subcommand(cmd_classify)) {
      const Rank rank(n);
      if (order < 1 || order > rank.simple_count())
        throw FlagError{"--order: must lie in 1.." +
                        std::to_string(rank.simple_count())};
      std::string text = "zeros\tconjugate\tsize\n";
      for (const ReductionClass& cls : classify_reductions(rank, order)) {
        if (!cls.physically_relevant) continue;
        std::string zeros, conj;
        for (std::size_t i = 0; i < cls.zeros.size(); ++i) {
          if (i) zeros += ',';
          zeros += std::to_string(cls.zeros[i]);
        }
        for (std::size_t i = 0; i < cls.conjugate.size(); ++i) {
          if (i) conj += ',';
          conj += std::to_string(cls.conjugate[i]);
        }
        text += zeros + "\t" + conj + "\t" + std::to_string(cls.size) + "\n";
      }
      write_output(text, output_path, out);
      return 0;
    }

    if (app.got_subcommand(cmd_dim)) {
      const DynkinLabels labels = parse_labels(n, labels_csv);
      if (!labels.all_positive())
        throw FlagError{
            "--labels: zero entries; no finite-dimensional subrepresentation"};
      std::ostringstream text;
      text << weyl_dimension(labels) << "\n";
      write_output(text.str(), output_path, out);
      return 0;
    }

    if (app.got_subcommand(cmd_ks)) {
      const DynkinLabels labels = parse_labels(n, labels_csv);
      const MultipletGraph graph = labels.all_positive()
                                       ? main_multiplet(Rank(n), labels)
                                       : reduced_multiplet(Rank(n), labels);
      const Arrangement arr = parse_vertex(vertex_id);
      const int index = graph.index_of(arr);
      if (index < 0)
        throw FlagError{"--vertex: '" + vertex_id +
                        "' is not a vertex of this multiplet"};
      const Arrangement partner = ks_partner(arr);
      const int partner_index = graph.index_of(partner);
      write_output(
          signature_line(graph.vertices[static_cast<std::size_t>(partner_index)]) +
              "\n",
          output_path, out);
      return 0;
    }
  } catch (const FlagError& e) {
    err << e.message << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace sunn::cli
