#include "eslab/labelling.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace eslab {

Labelling canonical_labelling(const std::vector<std::string>& raw_symbol_per_event) {
  Labelling result;
  std::map<std::string, int> seen;
  result.assign.reserve(raw_symbol_per_event.size());
  for (const auto& symbol : raw_symbol_per_event) {
    auto it = seen.find(symbol);
    if (it == seen.end()) {
      it = seen.emplace(symbol, static_cast<int>(result.alphabet.size())).first;
      result.alphabet.push_back("a" + std::to_string(result.alphabet.size()));
    }
    result.assign.push_back(it->second);
  }
  return result;
}

std::vector<std::pair<EventId, EventId>> verify_nice(const EventStructure& es,
                                                     const Labelling& labelling) {
  if (static_cast<int>(labelling.assign.size()) != es.size() || !labelling.total()) {
    throw Error(ErrorKind::PartialLabelling, "labelling does not cover every event");
  }
  std::vector<std::pair<EventId, EventId>> violations;
  for (EventId x = 0; x < es.size(); ++x) {
    for (EventId y = x + 1; y < es.size(); ++y) {
      if (es.orthogonal(x, y) && labelling.assign[x] == labelling.assign[y]) {
        violations.emplace_back(x, y);
      }
    }
  }
  return violations;
}

std::vector<int> strata_by_height(const EventStructure& es) {
  std::vector<int> strata(es.size());
  for (EventId x = 0; x < es.size(); ++x) strata[x] = es.height(x);
  return strata;
}

std::vector<int> strata_by_below_count(const EventStructure& es) {
  std::vector<int> strata(es.size(), 0);
  for (EventId x = 0; x < es.size(); ++x) {
    for (EventId y = 0; y < es.size(); ++y) {
      if (es.lt(y, x)) ++strata[x];
    }
  }
  return strata;
}

namespace {

void check_stratifying(const EventStructure& es, const std::vector<int>& strata) {
  if (static_cast<int>(strata.size()) != es.size()) {
    throw Error(ErrorKind::NotStratifying, "stratifying function does not cover every event");
  }
  for (EventId x = 0; x < es.size(); ++x) {
    for (EventId y = x + 1; y < es.size(); ++y) {
      if (strata[x] == strata[y] && es.comparable(x, y)) {
        throw Error(ErrorKind::NotStratifying,
                    "level " + std::to_string(strata[x]) + " contains the comparable pair '" +
                        es.name_of(x) + "', '" + es.name_of(y) + "'");
      }
    }
  }
}

}  // namespace

int skewness(const EventStructure& es, const std::vector<int>& strata) {
  check_stratifying(es, strata);
  int skew = 0;
  for (EventId x = 0; x < es.size(); ++x) {
    for (EventId y = x + 1; y < es.size(); ++y) {
      if (es.orthogonal(x, y)) skew = std::max(skew, std::abs(strata[x] - strata[y]));
    }
  }
  return skew;
}

Labelling label_stratified(const EventStructure& es, const std::vector<int>& strata) {
  const int modulus = skewness(es, strata) + 1;  // validates strata

  std::map<int, std::vector<EventId>> levels;
  for (EventId x = 0; x < es.size(); ++x) levels[strata[x]].push_back(x);

  std::vector<std::string> raw(es.size());
  for (const auto& [level, members] : levels) {
    Coloring coloring = antichain_chordal_coloring(es, members);
    for (std::size_t i = 0; i < members.size(); ++i) {
      raw[members[i]] =
          "c" + std::to_string(coloring.color[i]) + "q" + std::to_string(level % modulus);
    }
  }
  Labelling result = canonical_labelling(raw);
  if (!verify_nice(es, result).empty()) {
    throw Error(ErrorKind::InternalContradiction, "stratified labelling is not nice");
  }
  return result;
}

Labelling label_dilworth(const EventStructure& es) {
  const auto chains = min_chain_partition(es);
  std::vector<std::string> raw(es.size());
  for (std::size_t c = 0; c < chains.size(); ++c) {
    for (EventId x : chains[c]) raw[x] = "c" + std::to_string(c);
  }
  return canonical_labelling(raw);
}

namespace {

void check_partition(const EventStructure& es, const Partition& partition) {
  std::vector<int> owner(es.size(), -1);
  for (std::size_t c = 0; c < partition.size(); ++c) {
    if (partition[c].empty()) {
      throw Error(ErrorKind::InvalidPartition, "class " + std::to_string(c) + " is empty");
    }
    for (EventId x : partition[c]) {
      if (x < 0 || x >= es.size()) {
        throw Error(ErrorKind::InvalidPartition, "event index " + std::to_string(x) + " out of range");
      }
      if (owner[x] >= 0) {
        throw Error(ErrorKind::InvalidPartition,
                    "event '" + es.name_of(x) + "' appears in two classes");
      }
      owner[x] = static_cast<int>(c);
    }
  }
  for (EventId x = 0; x < es.size(); ++x) {
    if (owner[x] < 0) {
      throw Error(ErrorKind::InvalidPartition, "event '" + es.name_of(x) + "' not covered");
    }
  }
}

}  // namespace

OrthoGraph quotient_graph(const EventStructure& es, const Partition& partition) {
  check_partition(es, partition);
  const int k = static_cast<int>(partition.size());
  RelationTable adjacency(k);
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      bool adjacent = false;
      for (EventId x : partition[a]) {
        for (EventId y : partition[b]) {
          if (es.orthogonal(x, y)) {
            adjacent = true;
            break;
          }
        }
        if (adjacent) break;
      }
      if (adjacent) {
        adjacency.set(a, b);
        adjacency.set(b, a);
      }
    }
  }
  std::vector<std::string> names;
  names.reserve(k);
  for (const auto& cls : partition) {
    EventId first = *std::min_element(cls.begin(), cls.end());
    names.push_back(es.name_of(first));
  }
  return OrthoGraph(std::move(names), std::move(adjacency),
                    "quotient of " + std::to_string(es.size()) + "-event structure");
}

Labelling label_quotient(const EventStructure& es, const Partition& partition,
                         const std::vector<Coloring>& class_colorings,
                         const Coloring& quotient_coloring) {
  const OrthoGraph quotient = quotient_graph(es, partition);  // validates the partition
  const int k = static_cast<int>(partition.size());
  if (static_cast<int>(class_colorings.size()) != k) {
    throw Error(ErrorKind::ImproperClassColoring, "expected one coloring per class");
  }
  for (int c = 0; c < k; ++c) {
    const auto& members = partition[c];
    const auto& coloring = class_colorings[c];
    if (coloring.color.size() != members.size()) {
      throw Error(ErrorKind::ImproperClassColoring,
                  "class " + std::to_string(c) + " coloring has wrong size");
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (es.orthogonal(members[i], members[j]) && coloring.color[i] == coloring.color[j]) {
          throw Error(ErrorKind::ImproperClassColoring,
                      "orthogonal pair '" + es.name_of(members[i]) + "', '" +
                          es.name_of(members[j]) + "' shares a class color");
        }
      }
    }
  }
  if (static_cast<int>(quotient_coloring.color.size()) != k) {
    throw Error(ErrorKind::ImproperQuotientColoring, "quotient coloring has wrong size");
  }
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (quotient.adjacent(a, b) && quotient_coloring.color[a] == quotient_coloring.color[b]) {
        throw Error(ErrorKind::ImproperQuotientColoring,
                    "adjacent classes " + std::to_string(a) + " and " + std::to_string(b) +
                        " share a quotient color");
      }
    }
  }

  std::vector<std::string> raw(es.size());
  for (int c = 0; c < k; ++c) {
    for (std::size_t i = 0; i < partition[c].size(); ++i) {
      raw[partition[c][i]] = "c" + std::to_string(class_colorings[c].color[i]) + "q" +
                             std::to_string(quotient_coloring.color[c]);
    }
  }
  Labelling result = canonical_labelling(raw);
  if (!verify_nice(es, result).empty()) {
    throw Error(ErrorKind::InternalContradiction, "quotient labelling is not nice");
  }
  return result;
}

Labelling label_degree2(const EventStructure& es) {
  const OrthoGraph graph = ortho_graph(es);
  const int degree = clique_number(graph).first;
  if (degree > 2) {
    throw Error(ErrorKind::DegreeTooHigh,
                "degree " + std::to_string(degree) + " exceeds 2");
  }
  auto coloring = bipartite_two_coloring(graph);
  if (!coloring) {
    throw Error(ErrorKind::UnexpectedOddCycle,
                "odd cycle in the graph of a degree-2 structure");
  }
  std::vector<std::string> raw(es.size());
  for (EventId x = 0; x < es.size(); ++x) raw[x] = "c" + std::to_string(coloring->color[x]);
  return canonical_labelling(raw);
}

Labelling label_exact(const EventStructure& es, int cap) {
  auto [chi, coloring] = chromatic_number(ortho_graph(es), cap);
  (void)chi;
  std::vector<std::string> raw(es.size());
  for (EventId x = 0; x < es.size(); ++x) raw[x] = "c" + std::to_string(coloring.color[x]);
  return canonical_labelling(raw);
}

}  // namespace eslab
