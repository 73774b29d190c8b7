#pragma once

#include <map>
#include <string>
#include <vector>

#include "eslab/event_structure.hpp"
#include "eslab/labelling.hpp"

namespace eslab {

/// History-aware configuration: lower-closed, conflict-free event set in
/// canonical sorted form.
struct Configuration {
  std::vector<EventId> events;
  bool operator==(const Configuration&) const = default;
};

struct DomainEdge {
  int from = 0;
  int to = 0;
  EventId added = 0;
};

/// Hasse diagram of the domain D(E). Node 0 is the empty configuration;
/// nodes are numbered in breadth-first discovery order.
class DomainGraph {
 public:
  DomainGraph(std::vector<std::string> event_names, std::vector<Configuration> nodes,
              std::vector<DomainEdge> edges);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Configuration& node(int i) const { return nodes_[i]; }
  const std::vector<DomainEdge>& edges() const { return edges_; }
  const DomainEdge& edge(int e) const { return edges_[e]; }
  /// Indices into edges() of the transitions leaving a node.
  const std::vector<int>& out_edges(int node) const { return out_[node]; }
  /// Node index of a configuration, -1 when absent.
  int node_of(const std::vector<EventId>& config) const;

  int event_count() const { return static_cast<int>(event_names_.size()); }
  const std::vector<std::string>& event_names() const { return event_names_; }

 private:
  std::vector<std::string> event_names_;
  std::vector<Configuration> nodes_;
  std::vector<DomainEdge> edges_;
  std::vector<std::vector<int>> out_;
  std::map<std::vector<EventId>, int> index_;
};

/// Breadth-first closure from the empty configuration, adding one enabled
/// conflict-free event at a time. Throws DomainTooLarge when the node count
/// would exceed the cap.
DomainGraph enumerate_domain(const EventStructure& es, int cap = 50000);

/// Maximum number of outgoing Hasse edges over all nodes; equals the clique
/// number of G(E) on coherent structures.
int max_out_degree(const DomainGraph& domain);

/// Symbol per Hasse edge, indexed like DomainGraph::edges().
struct EdgeColoring {
  std::vector<std::string> alphabet;
  std::vector<int> symbol;
  bool operator==(const EdgeColoring&) const = default;
};

/// Lifts an event labelling to edges: the edge adding x carries the symbol
/// of x. The result always satisfies the concurrent-square condition.
EdgeColoring lift_labelling(const DomainGraph& domain, const Labelling& labelling);

struct EdgeColoringReport {
  bool deterministic = true;  // no node has two equally-colored out-edges
  bool concurrent = true;     // opposite sides of every covering square match
  std::vector<std::string> violations;
};

EdgeColoringReport verify_edge_coloring(const DomainGraph& domain, const EdgeColoring& coloring);

/// Reads the labelling back off the ideal edges (down-set of x minus x, plus
/// x). Requires the coloring to pass the concurrent-square check.
/// Errors: NotConcurrent, MissingEdge.
Labelling labelling_from_edge_coloring(const DomainGraph& domain, const EdgeColoring& coloring);

}  // namespace eslab
