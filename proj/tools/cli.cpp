#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "eslab/domain.hpp"
#include "eslab/event_structure.hpp"
#include "eslab/generate.hpp"
#include "eslab/graph.hpp"
#include "eslab/io.hpp"
#include "eslab/labelling.hpp"

namespace eslab::cli {

namespace {

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw Error(ErrorKind::SyntaxError, "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

EventStructure load_structure(const std::string& path, std::istream& in) {
  EsDocument doc{parse_es(read_input(path, in)), path == "-" ? "<stdin>" : path};
  return build_event_structure(doc.spec);
}

const char* text(bool b) { return b ? "true" : "false"; }

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"coherent event structures: relations, graphs, domains, nice labellings"};
  app.name("eslab");
  app.set_help_flag("--help", "print usage");  // frees -h / --h for the stratifier flag
  app.require_subcommand(1);

  std::string input_path;
  std::string labels_path;
  std::string strategy = "exact";
  std::string strata_choice = "height";
  bool dot = false;
  int cap = 50000;
  int max_len = 8;
  GenParams gen_params;
  std::string shape_choice = "general";

  auto* validate = app.add_subcommand("validate", "check a structure file");
  validate->add_option("file", input_path)->required();

  auto* stats = app.add_subcommand("stats", "structural report as key: value lines");
  stats->add_option("file", input_path)->required();

  auto* chi = app.add_subcommand("chi", "exact index (chromatic number of the graph)");
  chi->add_option("file", input_path)->required();

  auto* omega = app.add_subcommand("omega", "degree (clique number of the graph)");
  omega->add_option("file", input_path)->required();

  auto* label = app.add_subcommand("label", "compute a nice labelling");
  label->add_option("file", input_path)->required();
  label->add_option("--strategy", strategy)
      ->check(CLI::IsMember({"forest3", "stratified", "dilworth", "simple12", "degree2", "exact"}));
  label->add_option("--h", strata_choice)->check(CLI::IsMember({"height", "below-count"}));

  auto* verify = app.add_subcommand("verify", "check a labelling for niceness");
  verify->add_option("file", input_path)->required();
  verify->add_option("--labels", labels_path)->required();

  auto* domain = app.add_subcommand("domain", "enumerate the domain of configurations");
  domain->add_option("file", input_path)->required();
  domain->add_flag("--dot", dot);
  domain->add_option("--cap", cap);

  auto* graph = app.add_subcommand("graph", "DOT of the orthogonality graph");
  graph->add_option("file", input_path)->required();
  graph->add_flag("--dot", dot);
  graph->add_option("--labels", labels_path);

  auto* cycles = app.add_subcommand("cycles", "search for a straight cycle of length >= 4");
  cycles->add_option("file", input_path)->required();
  cycles->add_option("--max-len", max_len);

  auto* gen = app.add_subcommand("gen", "emit a seeded random structure");
  gen->add_option("--events", gen_params.event_count)->required();
  gen->add_option("--degree", gen_params.degree_bound)->check(CLI::IsMember({2, 3}));
  gen->add_option("--shape", shape_choice)->check(CLI::IsMember({"general", "forest", "graded"}));
  gen->add_option("--seed", gen_params.seed);
  gen->add_option("--density", gen_params.conflict_density)->check(CLI::Range(0.0, 1.0));

  std::vector<char*> argv;
  std::vector<std::string> storage = args;
  std::string program = "eslab";
  argv.push_back(program.data());
  for (auto& arg : storage) argv.push_back(arg.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*validate) {
      const EventStructure es = load_structure(input_path, in);
      out << "ok: " << es.size() << " events\n";
      return 0;
    }
    if (*stats) {
      const EventStructure es = load_structure(input_path, in);
      const StructuralReport report = structural_report(es);
      out << "events: " << es.size() << "\n"
          << "degree: " << report.degree << "\n"
          << "height: " << report.height << "\n"
          << "width: " << report.width << "\n"
          << "is_forest: " << text(report.is_forest) << "\n"
          << "is_graded: " << text(report.is_graded) << "\n"
          << "is_simple: " << text(report.is_simple) << "\n"
          << "e0: " << report.e0 << "\n"
          << "e1: " << report.e1 << "\n"
          << "e2: " << report.e2 << "\n"
          << "e3: " << report.e3 << "\n";
      return 0;
    }
    if (*chi) {
      const EventStructure es = load_structure(input_path, in);
      out << chromatic_number(ortho_graph(es)).first << "\n";
      return 0;
    }
    if (*omega) {
      const EventStructure es = load_structure(input_path, in);
      out << clique_number(ortho_graph(es)).first << "\n";
      return 0;
    }
    if (*label) {
      const EventStructure es = load_structure(input_path, in);
      Labelling labelling;
      if (strategy == "forest3") {
        labelling = label_forest3(es);
      } else if (strategy == "stratified") {
        labelling = label_stratified(es, strata_choice == "height" ? strata_by_height(es)
                                                                   : strata_by_below_count(es));
      } else if (strategy == "dilworth") {
        labelling = label_dilworth(es);
      } else if (strategy == "simple12") {
        labelling = label_simple12(es);
      } else if (strategy == "degree2") {
        labelling = label_degree2(es);
      } else {
        labelling = label_exact(es);
      }
      out << serialize_labelling(es, labelling);
      return 0;
    }
    if (*verify) {
      const EventStructure es = load_structure(input_path, in);
      const Labelling labelling = parse_labelling(es, read_input(labels_path, in));
      const auto violations = verify_nice(es, labelling);
      for (const auto& [x, y] : violations) {
        out << es.name_of(x) << " " << es.name_of(y) << "\n";
      }
      return violations.empty() ? 0 : 1;
    }
    if (*domain) {
      const EventStructure es = load_structure(input_path, in);
      const DomainGraph dom = enumerate_domain(es, cap);
      if (dot) {
        out << export_dot(dom);
      } else {
        out << "nodes: " << dom.node_count() << "\n"
            << "edges: " << dom.edge_count() << "\n"
            << "max_out_degree: " << max_out_degree(dom) << "\n";
      }
      return 0;
    }
    if (*graph) {
      const EventStructure es = load_structure(input_path, in);
      const OrthoGraph g = ortho_graph(es);
      std::optional<Coloring> coloring;
      if (!labels_path.empty()) {
        const Labelling labelling = parse_labelling(es, read_input(labels_path, in));
        if (!labelling.total()) {
          throw Error(ErrorKind::PartialLabelling, "labelling does not cover every event");
        }
        Coloring c;
        c.color = labelling.assign;
        c.colors_used = labelling.symbols_used();
        coloring = c;
      }
      out << export_dot(g, coloring ? &*coloring : nullptr);
      return 0;
    }
    if (*cycles) {
      const EventStructure es = load_structure(input_path, in);
      if (auto cycle = find_straight_cycle(es, max_len)) {
        out << "cycle:";
        for (int v : cycle->vertices) out << " " << es.name_of(v);
        out << "\n";
        return 1;
      }
      return 0;
    }
    if (*gen) {
      gen_params.shape = shape_choice == "forest"   ? Shape::Forest
                         : shape_choice == "graded" ? Shape::Graded
                                                    : Shape::General;
      out << serialize_es(generate_spec(gen_params));
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace eslab::cli
