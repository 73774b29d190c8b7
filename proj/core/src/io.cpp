#include "eslab/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace eslab {

namespace {

bool valid_id(const std::string& token) {
  if (token.empty()) return false;
  return std::all_of(token.begin(), token.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream stream(line);
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

std::string at_line(int line) { return " (line " + std::to_string(line) + ")"; }

}  // namespace

EventStructureSpec parse_es(const std::string& text) {
  EventStructureSpec spec;
  std::unordered_set<std::string> declared;
  struct Ref {
    std::string a, b;
    int line;
    bool is_cover;
  };
  std::vector<Ref> refs;

  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    const std::string& directive = tokens[0];
    if (directive == "event") {
      if (tokens.size() != 2 || !valid_id(tokens[1])) {
        throw Error(ErrorKind::SyntaxError, "expected 'event <id>'" + at_line(line_no));
      }
      if (!declared.insert(tokens[1]).second) {
        throw Error(ErrorKind::DuplicateEvent,
                    "event '" + tokens[1] + "' declared twice" + at_line(line_no));
      }
      spec.events.push_back(tokens[1]);
    } else if (directive == "cover" || directive == "conflict") {
      if (tokens.size() != 3 || !valid_id(tokens[1]) || !valid_id(tokens[2])) {
        throw Error(ErrorKind::SyntaxError,
                    "expected '" + directive + " <id> <id>'" + at_line(line_no));
      }
      refs.push_back(Ref{tokens[1], tokens[2], line_no, directive == "cover"});
    } else {
      throw Error(ErrorKind::SyntaxError, "unknown directive '" + directive + "'" + at_line(line_no));
    }
  }

  for (const Ref& ref : refs) {
    for (const std::string* id : {&ref.a, &ref.b}) {
      if (!declared.count(*id)) {
        throw Error(ErrorKind::UnknownEventRef,
                    "event '" + *id + "' was never declared" + at_line(ref.line));
      }
    }
    if (ref.is_cover) {
      spec.covers.emplace_back(ref.a, ref.b);
    } else {
      spec.conflicts.emplace_back(ref.a, ref.b);
    }
  }
  return spec;
}

std::string serialize_es(const EventStructureSpec& spec) {
  std::string out;
  for (const auto& name : spec.events) out += "event " + name + "\n";
  for (const auto& [parent, child] : spec.covers) out += "cover " + parent + " " + child + "\n";
  for (const auto& [a, b] : spec.conflicts) out += "conflict " + a + " " + b + "\n";
  return out;
}

std::string serialize_labelling(const EventStructure& es, const Labelling& labelling) {
  if (static_cast<int>(labelling.assign.size()) != es.size() || !labelling.total()) {
    throw Error(ErrorKind::PartialLabelling, "labelling does not cover every event");
  }
  std::string out = "alphabet " + std::to_string(labelling.symbols_used()) + "\n";
  for (EventId x = 0; x < es.size(); ++x) {
    out += es.name_of(x) + " " + labelling.symbol_of(x) + "\n";
  }
  return out;
}

Labelling parse_labelling(const EventStructure& es, const std::string& text) {
  Labelling labelling;
  labelling.assign.assign(es.size(), -1);
  std::unordered_map<std::string, int> symbols;

  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  bool saw_header = false;
  int declared_count = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (!saw_header) {
      if (tokens.size() != 2 || tokens[0] != "alphabet" || tokens[1].empty() ||
          !std::all_of(tokens[1].begin(), tokens[1].end(),
                       [](unsigned char c) { return std::isdigit(c); })) {
        throw Error(ErrorKind::SyntaxError, "expected 'alphabet <count>'" + at_line(line_no));
      }
      declared_count = std::stoi(tokens[1]);
      saw_header = true;
      continue;
    }
    if (tokens.size() != 2) {
      throw Error(ErrorKind::SyntaxError, "expected '<event> <symbol>'" + at_line(line_no));
    }
    if (!es.has_event(tokens[0])) {
      throw Error(ErrorKind::UnknownEventRef,
                  "event '" + tokens[0] + "' was never declared" + at_line(line_no));
    }
    EventId x = es.id_of(tokens[0]);
    if (labelling.assign[x] >= 0) {
      throw Error(ErrorKind::SyntaxError,
                  "event '" + tokens[0] + "' labelled twice" + at_line(line_no));
    }
    auto [it, inserted] = symbols.emplace(tokens[1], static_cast<int>(labelling.alphabet.size()));
    if (inserted) labelling.alphabet.push_back(tokens[1]);
    labelling.assign[x] = it->second;
  }
  if (!saw_header) {
    throw Error(ErrorKind::SyntaxError, "missing 'alphabet <count>' header");
  }
  if (declared_count != static_cast<int>(labelling.alphabet.size())) {
    throw Error(ErrorKind::SyntaxError,
                "alphabet header says " + std::to_string(declared_count) + " but " +
                    std::to_string(labelling.alphabet.size()) + " symbols appear");
  }
  return labelling;
}

namespace {

// fixed fill palette, cycled when a coloring needs more entries
const char* kPalette[] = {"#a6cee3", "#b2df8a", "#fb9a99", "#fdbf6f", "#cab2d6", "#ffff99",
                          "#1f78b4", "#33a02c", "#e31a1c", "#ff7f00", "#6a3d9a", "#b15928"};
constexpr int kPaletteSize = 12;

}  // namespace

std::string export_dot(const OrthoGraph& graph, const Coloring* coloring) {
  std::string out = "graph G {\n";
  if (coloring != nullptr) out += "  node [style=filled];\n";
  for (int v = 0; v < graph.size(); ++v) {
    out += "  \"" + graph.name_of(v) + "\"";
    if (coloring != nullptr) {
      out += " [fillcolor=\"" + std::string(kPalette[coloring->color[v] % kPaletteSize]) + "\"]";
    }
    out += ";\n";
  }
  for (int u = 0; u < graph.size(); ++u) {
    for (int v = u + 1; v < graph.size(); ++v) {
      if (graph.adjacent(u, v)) {
        out += "  \"" + graph.name_of(u) + "\" -- \"" + graph.name_of(v) + "\";\n";
      }
    }
  }
  out += "}\n";
  return out;
}

std::string export_dot(const DomainGraph& domain, const EdgeColoring* coloring) {
  auto node_label = [&](int i) {
    std::string label = "{";
    const auto& events = domain.node(i).events;
    for (std::size_t k = 0; k < events.size(); ++k) {
      if (k > 0) label += ",";
      label += domain.event_names()[events[k]];
    }
    return label + "}";
  };

  std::string out = "digraph D {\n  rankdir=BT;\n";
  for (int i = 0; i < domain.node_count(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + node_label(i) + "\"];\n";
  }
  for (int e = 0; e < domain.edge_count(); ++e) {
    const DomainEdge& edge = domain.edge(e);
    std::string label = domain.event_names()[edge.added];
    if (coloring != nullptr) {
      label += ":" + coloring->alphabet[coloring->symbol[e]];
    }
    out += "  n" + std::to_string(edge.from) + " -> n" + std::to_string(edge.to) + " [label=\"" +
           label + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace eslab
