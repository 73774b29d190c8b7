#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "eslab/errors.hpp"

namespace eslab {

/// Events are referred to by their declaration index; the declaration order is
/// the tie-break for every deterministic choice made anywhere in the library.
using EventId = int;

/// Dense square boolean table over event indices.
class RelationTable {
 public:
  RelationTable() = default;
  explicit RelationTable(int n)
      : n_(n), cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

  int size() const { return n_; }
  bool operator()(int i, int j) const {
    return cells_[static_cast<std::size_t>(i) * n_ + j] != 0;
  }
  void set(int i, int j, bool value = true) {
    cells_[static_cast<std::size_t>(i) * n_ + j] = value ? 1 : 0;
  }
  bool operator==(const RelationTable&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> cells_;
};

/// The wire-level presentation of a structure: declared events, covering pairs
/// of the causality order, and base conflicts (not necessarily minimal).
struct EventStructureSpec {
  std::vector<std::string> events;
  std::vector<std::pair<std::string, std::string>> covers;     // parent, child
  std::vector<std::pair<std::string, std::string>> conflicts;  // unordered
  bool operator==(const EventStructureSpec&) const = default;
};

enum class Relation {
  Leq,
  Covers,
  Conflict,
  MinimalConflict,
  Concurrent,
  WeakConcurrent,
  Orthogonal,
};

/// A validated finite coherent event structure with all derived relations
/// cached. Immutable after construction; safe to share across threads.
///
/// Invariants established by build_event_structure:
///   - leq is a partial order (reflexive-transitive closure of the covers);
///   - conflict is symmetric, irreflexive, hereditary (x#y and y<=z gives x#z)
///     and holds only between incomparable events;
///   - concurrent = incomparable and not conflicting;
///   - weak_concurrent = concurrent or comparable;
///   - minimal_conflict(x,y) iff x#y and every strict predecessor of either
///     side is weak-concurrent with the other side;
///   - orthogonal = minimal_conflict or concurrent.
class EventStructure {
 public:
  int size() const { return n_; }
  const std::vector<std::string>& event_names() const { return names_; }
  const std::string& name_of(EventId x) const { return names_[x]; }
  /// Throws UnknownEvent if the name was not declared.
  EventId id_of(std::string_view name) const;
  bool has_event(std::string_view name) const;

  bool leq(EventId x, EventId y) const { return leq_(x, y); }
  bool lt(EventId x, EventId y) const { return x != y && leq_(x, y); }
  bool comparable(EventId x, EventId y) const { return leq_(x, y) || leq_(y, x); }
  bool covers(EventId parent, EventId child) const { return covers_(parent, child); }
  bool conflict(EventId x, EventId y) const { return conflict_(x, y); }
  bool minimal_conflict(EventId x, EventId y) const { return minimal_conflict_(x, y); }
  bool concurrent(EventId x, EventId y) const { return concurrent_(x, y); }
  bool weak_concurrent(EventId x, EventId y) const { return weak_concurrent_(x, y); }
  bool orthogonal(EventId x, EventId y) const { return orthogonal_(x, y); }

  bool relation(Relation kind, EventId x, EventId y) const;
  bool relation(Relation kind, std::string_view x, std::string_view y) const;

  int height(EventId x) const { return height_[x]; }
  /// Maximum event height; 0 on the empty structure.
  int height() const;
  const std::vector<EventId>& lower_covers(EventId x) const { return lower_covers_[x]; }
  const std::vector<EventId>& upper_covers(EventId x) const { return upper_covers_[x]; }
  /// Number of lower covers (the f(x) of the E_n stratification).
  int cover_count(EventId x) const { return static_cast<int>(lower_covers_[x].size()); }

  /// Events other than x with exactly the same set of lower covers. Minimal
  /// events all share the empty set and are therefore mutual brothers.
  std::vector<EventId> brothers(EventId x) const;
  /// Society S_x: orthogonal neighbours of x that are not above any brother.
  std::vector<EventId> society(EventId x) const;
  /// Family F_x: orthogonal neighbours of x above some brother of x.
  std::vector<EventId> family(EventId x) const;

  const RelationTable& leq_table() const { return leq_; }
  const RelationTable& orthogonal_table() const { return orthogonal_; }
  const EventStructureSpec& spec() const { return spec_; }

 private:
  friend EventStructure build_event_structure(const EventStructureSpec& spec);
  EventStructure() = default;

  void check_event(EventId x) const;

  int n_ = 0;
  EventStructureSpec spec_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, EventId> index_;
  RelationTable leq_;
  RelationTable covers_;
  RelationTable conflict_;
  RelationTable minimal_conflict_;
  RelationTable concurrent_;
  RelationTable weak_concurrent_;
  RelationTable orthogonal_;
  std::vector<int> height_;
  std::vector<std::vector<EventId>> lower_covers_;
  std::vector<std::vector<EventId>> upper_covers_;
};

/// Validates the spec and computes every cached relation. Errors:
/// DuplicateEvent, UnknownEvent, SelfConflict, CycleInCovers,
/// ConflictOnComparablePair.
EventStructure build_event_structure(const EventStructureSpec& spec);

struct StructuralReport {
  bool is_forest = false;
  bool is_graded = false;
  bool is_simple = false;
  int degree = 0;
  int height = 0;
  int width = 0;
  int e0 = 0;  // events with no lower cover
  int e1 = 0;  // exactly one lower cover
  int e2 = 0;  // exactly two lower covers
  int e3 = 0;  // three or more lower covers
};

StructuralReport structural_report(const EventStructure& es);

/// New structure with a fresh bottom event below every original event. The
/// bottom is declared first; the orthogonality graph gains one isolated
/// vertex and is otherwise unchanged.
EventStructure lift_bottom(const EventStructure& es);

/// The structure induced by the orthogonal neighbourhood N_x of x. Its graph
/// is the subgraph of G(E) induced by N_x and its clique number drops
/// strictly below the one of E.
EventStructure star_substructure(const EventStructure& es, EventId x);

/// Minimum chain partition of the causality order (Dilworth: the number of
/// chains equals the width). Chains are returned top-down deterministic under
/// declaration order; every event appears in exactly one chain.
std::vector<std::vector<EventId>> min_chain_partition(const EventStructure& es);

}  // namespace eslab
