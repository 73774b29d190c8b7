#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eslab/event_structure.hpp"

namespace eslab {

/// Undirected graph of the orthogonality relation. Vertex order matches the
/// declaration order of the originating structure.
class OrthoGraph {
 public:
  /// Raw construction, mainly for tests that need graphs no coherent
  /// structure produces. Adjacency must be symmetric and irreflexive.
  OrthoGraph(std::vector<std::string> names, RelationTable adjacency, std::string source_note);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name_of(int v) const { return names_[v]; }
  const std::vector<std::string>& vertex_names() const { return names_; }
  bool adjacent(int u, int v) const { return adjacency_(u, v); }
  const RelationTable& adjacency() const { return adjacency_; }
  std::vector<int> neighbors(int v) const;
  int edge_count() const;
  /// Note identifying where the graph came from.
  const std::string& source_note() const { return source_note_; }

 private:
  std::vector<std::string> names_;
  RelationTable adjacency_;
  std::string source_note_;
};

OrthoGraph ortho_graph(const EventStructure& es);

/// Proper vertex coloring; color indices are dense (0..colors_used-1).
struct Coloring {
  std::vector<int> color;
  int colors_used = 0;
};

/// Collapses color indices to 0..k-1 in order of first use.
Coloring canonicalize_coloring(std::vector<int> raw);

/// Cycle in G(E) whose vertices form an antichain; stored with the closing
/// vertex repeated (front == back). Length = number of distinct vertices.
struct StraightCycle {
  std::vector<int> vertices;
  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

/// Exact clique number with a deterministic witness: among all maximum
/// cliques the one least in colexicographic vertex order is returned.
std::pair<int, std::vector<int>> clique_number(const OrthoGraph& g);

/// Exact chromatic number: iterative deepening on k with backtracking; the
/// first vertex of each new color class is forced onto the earliest uncolored
/// vertex of the search order. Throws InstanceTooLarge above the cap.
std::pair<int, Coloring> chromatic_number(const OrthoGraph& g, int cap = 64);

/// Some straight cycle of length in [4, max_len] if one exists. For coherent
/// structures of degree at most 3 the answer is always nullopt.
std::optional<StraightCycle> find_straight_cycle(const EventStructure& es, int max_len);
/// Raw-graph variant: all vertices are treated as pairwise incomparable.
std::optional<StraightCycle> find_straight_cycle(const OrthoGraph& g, int max_len);

/// Colors the subgraph induced by an antichain via maximum cardinality
/// search. The elimination order is verified to be perfect before the greedy
/// pass, so the result is optimal; degree-3 structures need at most 3 colors.
/// The returned coloring is aligned with the antichain as given.
Coloring antichain_chordal_coloring(const EventStructure& es, const std::vector<EventId>& antichain);

/// Breadth-first 2-coloring per connected component; nullopt iff some
/// component contains an odd cycle.
std::optional<Coloring> bipartite_two_coloring(const OrthoGraph& g);

}  // namespace eslab
