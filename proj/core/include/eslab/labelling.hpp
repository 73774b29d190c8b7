#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eslab/event_structure.hpp"
#include "eslab/graph.hpp"

namespace eslab {

/// A (possibly partial) symbol assignment. assign[event] indexes into the
/// alphabet, -1 meaning unassigned. Strategy outputs are canonical: the
/// alphabet lists exactly the used symbols a0, a1, ... in order of first use
/// along the declaration order.
struct Labelling {
  std::vector<std::string> alphabet;
  std::vector<int> assign;

  bool total() const {
    for (int a : assign) {
      if (a < 0) return false;
    }
    return true;
  }
  const std::string& symbol_of(EventId x) const { return alphabet[assign[x]]; }
  int symbols_used() const { return static_cast<int>(alphabet.size()); }
  bool operator==(const Labelling&) const = default;
};

/// Renames the distinct raw symbols to a0..a{k-1} in order of first use.
Labelling canonical_labelling(const std::vector<std::string>& raw_symbol_per_event);

/// All orthogonal pairs (x < y by index) that share a symbol; empty iff the
/// labelling is nice. Throws PartialLabelling when not total.
std::vector<std::pair<EventId, EventId>> verify_nice(const EventStructure& es,
                                                     const Labelling& labelling);

/// Total order on a tree's events compatible with tree height and, on proper
/// pairs of brothers, with strict society containment (the strictly more
/// experienced brother comes first).
class TreeOrder {
 public:
  const std::vector<EventId>& sequence() const { return sequence_; }
  bool contains(EventId x) const { return rank_[x] >= 0; }
  /// Strict order test; both events must belong to the tree.
  bool before(EventId x, EventId y) const { return rank_[x] < rank_[y]; }
  int rank_of(EventId x) const { return rank_[x]; }
  /// The unique lower cover of a tree event (may lie outside the tree).
  EventId parent_of(EventId x) const { return parent_[x]; }
  /// Number of tree events strictly below x.
  int height_in_tree(EventId x) const { return tree_height_[x]; }

 private:
  friend TreeOrder tree_order(const EventStructure& es, const std::vector<EventId>& tree);
  std::vector<EventId> sequence_;
  std::vector<int> rank_;         // -1 outside the tree
  std::vector<EventId> parent_;   // -1 outside the tree
  std::vector<int> tree_height_;  // -1 outside the tree
};

/// Validates the three tree clauses (single lower cover, convexity, shared
/// parent of minimal members) and builds the order. Throws NotATree.
TreeOrder tree_order(const EventStructure& es, const std::vector<EventId>& tree);

/// Older-neighbourhood split of a tree event: older = O_x (orthogonal tree
/// events before x), older_brothers = C_x (those above pi(x)), lineage = L_x
/// (the rest, always an initial segment of the society).
struct NeighborhoodSets {
  std::vector<EventId> older;
  std::vector<EventId> older_brothers;
  std::vector<EventId> lineage;
};

NeighborhoodSets neighborhood_sets(const EventStructure& es, const TreeOrder& order, EventId x);

/// Labels the events of a tree subset with at most three symbols via the
/// eldest-inherits / younger-picks-free-symbol clauses. assign is -1 outside
/// the tree; the alphabet is the raw {a0,a1,a2} prefix actually used only
/// after canonicalization by callers.
Labelling label_tree(const EventStructure& es, const std::vector<EventId>& tree);

/// Optimal 3-symbol labelling of a degree-<=3 forest: lifts an internal
/// bottom (never labelled), runs the tree clauses over all original events,
/// and checks the result is nice. Errors: NotAForest, DegreeTooHigh,
/// InternalContradiction.
Labelling label_forest3(const EventStructure& es);

/// Stratifying helpers: event height, and the number of strict predecessors.
std::vector<int> strata_by_height(const EventStructure& es);
std::vector<int> strata_by_below_count(const EventStructure& es);

/// Max level gap across an orthogonal pair, 0 when no pair is orthogonal.
/// Throws NotStratifying when some level set is not an antichain.
int skewness(const EventStructure& es, const std::vector<int>& strata);

/// Product labelling (per-level chordal color, level mod (skewness+1));
/// uses at most 3*(skewness+1) symbols on degree-3 structures.
Labelling label_stratified(const EventStructure& es, const std::vector<int>& strata);

/// One symbol per chain of a minimum chain partition; always nice, and
/// optimal whenever the conflict relation is empty.
Labelling label_dilworth(const EventStructure& es);

/// Disjoint nonempty event classes covering the structure.
using Partition = std::vector<std::vector<EventId>>;

/// Class-level graph: two classes are adjacent iff some cross pair is
/// orthogonal; intra-class edges are dropped. Vertices are named after the
/// first declared member of each class.
OrthoGraph quotient_graph(const EventStructure& es, const Partition& partition);

/// Product of per-class colorings with a coloring of the quotient graph.
/// Errors: InvalidPartition, ImproperClassColoring, ImproperQuotientColoring.
Labelling label_quotient(const EventStructure& es, const Partition& partition,
                         const std::vector<Coloring>& class_colorings,
                         const Coloring& quotient_coloring);

/// Constant-bound labelling for simple (graded, every triangle has a minimal
/// conflict) structures of degree <=3: 3 colors inside each part of the
/// {bottom} / maximal-tree / two-cover partition, at most 4 on the quotient,
/// hence at most 12 symbols. The two greedy bounds taken from the underlying
/// argument are asserted at runtime (GreedyAssertionFailed).
Labelling label_simple12(const EventStructure& es);

/// Two-symbol labelling of a degree-<=2 structure via bipartition of G(E).
/// Errors: DegreeTooHigh, UnexpectedOddCycle.
Labelling label_degree2(const EventStructure& es);

/// Optimal labelling from the exact chromatic number.
Labelling label_exact(const EventStructure& es, int cap = 64);

}  // namespace eslab
