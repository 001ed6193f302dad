// brickforge command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "brickforge/atlas.hpp"
#include "brickforge/catalog.hpp"
#include "brickforge/edgeclass.hpp"
#include "brickforge/error.hpp"
#include "brickforge/io.hpp"
#include "brickforge/structure.hpp"
#include "brickforge/tightcut.hpp"
#include "brickforge/verify.hpp"
#include "brickforge/version.hpp"

namespace bf = brickforge;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

bool looks_like_json(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text[first] == '{';
}

bf::MultiGraph parse_as(const std::string& text, const std::string& format) {
  if (format == "json") return bf::parse_graph_json(text);
  if (format == "graph6") return bf::parse_graph6(text);
  return looks_like_json(text) ? bf::parse_graph_json(text) : bf::parse_graph6(text);
}

// Atlas names win over paths.
bf::MultiGraph load_graph(const std::string& arg) {
  if (bf::resolve_atlas_name(arg)) return bf::named_graph(arg).graph;
  return parse_as(read_text(arg), "auto");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError("cannot write " + out_path);
  out << text;
}

struct Options {
  std::string input;
  std::string format = "markdown";
  std::string out;
  int n_max = 14;
  std::string catalog;
  std::string harness;
  std::string atlas_action;
  std::string atlas_name;
  std::string from = "auto";
  std::string to = "json";
};

int cmd_classify(const Options& o) {
  const bf::MultiGraph g = load_graph(o.input);
  nlohmann::json j = bf::classify(g);
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  if (auto name = bf::identify(g)) j["atlas"] = *name;
  emit(j.dump(2) + "\n", o.out);
  return kOk;
}

int cmd_edges(const Options& o) {
  const bf::MultiGraph g = load_graph(o.input);
  const bf::EdgeClassification report = bf::edge_report(g);
  emit(o.format == "json" ? bf::to_json(g, report).dump(2) + "\n" : bf::to_markdown(g, report), o.out);
  return kOk;
}

int cmd_decompose(const Options& o) {
  const bf::MultiGraph g = load_graph(o.input);
  const bf::DecompositionTree tree = bf::tight_cut_decomposition(g);
  if (o.format == "json") {
    nlohmann::json j = tree;
    j["brick_count"] = tree.brick_count();
    j["brace_count"] = tree.brace_count();
    emit(j.dump(2) + "\n", o.out);
  } else {
    emit(tree.trace() + "b(G) = " + std::to_string(tree.brick_count()) + "\n", o.out);
  }
  return kOk;
}

int cmd_generate(const Options& o) {
  if (o.n_max < 4) throw InputError("--n-max must be at least 4");
  const auto entries = bf::generate_k4_based(o.n_max);
  std::ostringstream text;
  bf::write_catalog(text, entries);
  emit(text.str(), o.out);
  std::cerr << "wrote " << entries.size() << " classes up to " << o.n_max << " vertices\n";
  return kOk;
}

int cmd_verify(const Options& o) {
  std::vector<bf::CatalogEntry> catalog;
  const bool from_file = !o.catalog.empty();
  if (from_file) {
    std::istringstream in(read_text(o.catalog));
    catalog = bf::read_catalog(in);
  }
  bf::VerificationReport report;
  if (o.harness == "main") {
    report = from_file ? bf::verify_main_theorem(catalog, o.n_max) : bf::verify_main_theorem(o.n_max);
  } else if (o.harness == "thin") {
    report = from_file ? bf::verify_thin_note(catalog, o.n_max) : bf::verify_thin_note(o.n_max);
  } else if (o.harness == "lemmas") {
    report = from_file ? bf::verify_lemma_suite(catalog, o.n_max) : bf::verify_lemma_suite(o.n_max);
  } else {
    report = bf::verify_sufficiency();
  }
  emit(o.format == "json" ? bf::to_json(report).dump(2) + "\n" : bf::to_markdown(report), o.out);
  return report.passed() ? kOk : kVerificationFailed;
}

int cmd_atlas(const Options& o) {
  if (o.atlas_action == "list") {
    std::ostringstream out;
    for (const std::string& name : bf::atlas_names()) {
      const bf::NamedGraph& g = bf::named_graph(name);
      out << name << "\t" << g.graph.vertex_count() << "\t" << g.graph.edge_count() << "\t" << g.construction << "\n";
    }
    emit(out.str(), o.out);
    return kOk;
  }
  if (o.atlas_name.empty()) throw InputError("atlas show needs a name");
  const bf::NamedGraph& g = bf::named_graph(o.atlas_name);
  if (o.format == "graph6") {
    emit(bf::to_graph6(g.graph) + "\n", o.out);
  } else {
    nlohmann::json j = bf::graph_to_json(g.graph);
    j["name"] = g.name;
    j["construction"] = g.construction;
    emit(j.dump(2) + "\n", o.out);
  }
  return kOk;
}

int cmd_convert(const Options& o) {
  const bf::MultiGraph g = parse_as(read_text(o.input), o.from);
  emit(o.to == "graph6" ? bf::to_graph6(g) + "\n" : bf::graph_to_json(g).dump() + "\n", o.out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structural matching theory on small multigraphs"};
  app.set_version_flag("--version", std::string(bf::kVersion));
  app.require_subcommand(1);
  Options o;

  auto* classify = app.add_subcommand("classify", "print the graph class as JSON");
  classify->add_option("graph", o.input, "atlas name or file (JSON or graph6, - for stdin)")->required();

  auto* edges = app.add_subcommand("edges", "edge classification table of a brick");
  edges->add_option("graph", o.input, "atlas name or file")->required();
  edges->add_option("--format", o.format)->check(CLI::IsMember({"markdown", "json"}));

  auto* decompose = app.add_subcommand("decompose", "tight cut decomposition trace and b(G)");
  decompose->add_option("graph", o.input, "atlas name or file")->required();
  decompose->add_option("--format", o.format)->check(CLI::IsMember({"markdown", "json"}));

  auto* generate = app.add_subcommand("generate", "K4-based cubic catalog as JSON lines");
  generate->add_option("--n-max", o.n_max)->required();
  generate->add_option("--out", o.out, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "run a verification harness");
  verify->add_option("harness", o.harness)->required()->check(CLI::IsMember({"main", "thin", "lemmas", "sufficiency"}));
  verify->add_option("--n-max", o.n_max);
  verify->add_option("--catalog", o.catalog, "catalog file from `generate`");
  verify->add_option("--format", o.format)->check(CLI::IsMember({"markdown", "json"}));
  verify->add_option("--out", o.out);

  auto* atlas = app.add_subcommand("atlas", "named fixture graphs");
  atlas->add_option("action", o.atlas_action)->required()->check(CLI::IsMember({"list", "show"}));
  atlas->add_option("name", o.atlas_name);
  atlas->add_option("--format", o.format, "json or graph6")->check(CLI::IsMember({"markdown", "json", "graph6"}));

  auto* convert = app.add_subcommand("convert", "translate between graph6 and JSON");
  convert->add_option("input", o.input, "file, - for stdin")->default_val("-");
  convert->add_option("--from", o.from)->check(CLI::IsMember({"auto", "graph6", "json"}));
  convert->add_option("--to", o.to)->required()->check(CLI::IsMember({"graph6", "json"}));
  convert->add_option("--out", o.out);

  for (auto* sub : {classify, edges, decompose}) sub->add_option("--out", o.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*classify) return cmd_classify(o);
    if (*edges) return cmd_edges(o);
    if (*decompose) return cmd_decompose(o);
    if (*generate) return cmd_generate(o);
    if (*verify) return cmd_verify(o);
    if (*atlas) return cmd_atlas(o);
    if (*convert) return cmd_convert(o);
  } catch (const bf::GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed catalog: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
