#pragma once

#include <string>

#include "eslab/domain.hpp"
#include "eslab/event_structure.hpp"
#include "eslab/graph.hpp"
#include "eslab/labelling.hpp"

namespace eslab {

/// A parsed .es file. The name is caller-side metadata (usually the file
/// path); the text format itself carries no name.
struct EsDocument {
  EventStructureSpec spec;
  std::string name;
};

/// Line-oriented text format, '#' starts a comment, CRLF tolerated:
///   event <id>
///   cover <parent> <child>
///   conflict <id> <id>
/// Ids match [A-Za-z0-9_]+ and directives may come in any order; the event
/// declaration order is preserved (it is the global tie-break).
/// Errors: SyntaxError, DuplicateEvent, UnknownEventRef (with line numbers).
EventStructureSpec parse_es(const std::string& text);

std::string serialize_es(const EventStructureSpec& spec);

/// "alphabet <k>" header, then one "<event> <symbol>" line per event in
/// declaration order.
std::string serialize_labelling(const EventStructure& es, const Labelling& labelling);

/// Inverse of serialize_labelling; events missing from the text stay
/// unassigned (verification will reject such labellings as partial).
Labelling parse_labelling(const EventStructure& es, const std::string& text);

/// Undirected DOT of the orthogonality graph, optionally filled by color.
std::string export_dot(const OrthoGraph& graph, const Coloring* coloring = nullptr);

/// Directed DOT of the domain's Hasse diagram; edges are labelled with the
/// added event and, when given, its symbol.
std::string export_dot(const DomainGraph& domain, const EdgeColoring* coloring = nullptr);

}  // namespace eslab
