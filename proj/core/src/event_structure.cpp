#include "eslab/event_structure.hpp"

#include <algorithm>
#include <functional>

namespace eslab {

EventId EventStructure::id_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) {
    throw Error(ErrorKind::UnknownEvent, "no event named '" + std::string(name) + "'");
  }
  return it->second;
}

bool EventStructure::has_event(std::string_view name) const {
  return index_.find(std::string(name)) != index_.end();
}

void EventStructure::check_event(EventId x) const {
  if (x < 0 || x >= n_) {
    throw Error(ErrorKind::UnknownEvent, "event index " + std::to_string(x) + " out of range");
  }
}

bool EventStructure::relation(Relation kind, EventId x, EventId y) const {
  check_event(x);
  check_event(y);
  switch (kind) {
    case Relation::Leq: return leq_(x, y);
    case Relation::Covers: return covers_(x, y);
    case Relation::Conflict: return conflict_(x, y);
    case Relation::MinimalConflict: return minimal_conflict_(x, y);
    case Relation::Concurrent: return concurrent_(x, y);
    case Relation::WeakConcurrent: return weak_concurrent_(x, y);
    case Relation::Orthogonal: return orthogonal_(x, y);
  }
  return false;
}

bool EventStructure::relation(Relation kind, std::string_view x, std::string_view y) const {
  return relation(kind, id_of(x), id_of(y));
}

int EventStructure::height() const {
  int h = 0;
  for (int x = 0; x < n_; ++x) h = std::max(h, height_[x]);
  return h;
}

std::vector<EventId> EventStructure::brothers(EventId x) const {
  check_event(x);
  std::vector<EventId> result;
  for (EventId y = 0; y < n_; ++y) {
    if (y != x && lower_covers_[y] == lower_covers_[x]) result.push_back(y);
  }
  return result;
}

std::vector<EventId> EventStructure::society(EventId x) const {
  check_event(x);
  const std::vector<EventId> bros = brothers(x);
  std::vector<EventId> result;
  for (EventId z = 0; z < n_; ++z) {
    if (!orthogonal_(x, z)) continue;
    bool above_brother = false;
    for (EventId y : bros) {
      if (leq_(y, z)) {
        above_brother = true;
        break;
      }
    }
    if (!above_brother) result.push_back(z);
  }
  return result;
}

std::vector<EventId> EventStructure::family(EventId x) const {
  check_event(x);
  const std::vector<EventId> bros = brothers(x);
  std::vector<EventId> result;
  for (EventId z = 0; z < n_; ++z) {
    if (!orthogonal_(x, z)) continue;
    for (EventId y : bros) {
      if (leq_(y, z)) {
        result.push_back(z);
        break;
      }
    }
  }
  return result;
}

EventStructure build_event_structure(const EventStructureSpec& spec) {
  EventStructure es;
  es.spec_ = spec;
  es.names_ = spec.events;
  es.n_ = static_cast<int>(spec.events.size());
  const int n = es.n_;

  for (int i = 0; i < n; ++i) {
    auto [it, inserted] = es.index_.emplace(spec.events[i], i);
    if (!inserted) {
      throw Error(ErrorKind::DuplicateEvent, "event '" + spec.events[i] + "' declared twice");
    }
  }

  auto lookup = [&](const std::string& name) -> EventId {
    auto it = es.index_.find(name);
    if (it == es.index_.end()) {
      throw Error(ErrorKind::UnknownEvent, "no event named '" + name + "'");
    }
    return it->second;
  };

  // Strict reachability from the declared covers; a cycle shows up as a
  // reachable diagonal entry.
  RelationTable reach(n);
  for (const auto& [parent, child] : spec.covers) {
    EventId p = lookup(parent);
    EventId c = lookup(child);
    if (p == c) {
      throw Error(ErrorKind::CycleInCovers, "event '" + parent + "' covers itself");
    }
    reach.set(p, c);
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!reach(i, k)) continue;
      for (int j = 0; j < n; ++j) {
        if (reach(k, j)) reach.set(i, j);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (reach(i, i)) {
      throw Error(ErrorKind::CycleInCovers, "covers contain a cycle through '" + es.names_[i] + "'");
    }
  }

  es.leq_ = reach;
  for (int i = 0; i < n; ++i) es.leq_.set(i, i);

  // Canonical covering relation: transitive reduction of leq. Redundant
  // (transitive) cover lines in the input are dropped here.
  es.covers_ = RelationTable(n);
  es.lower_covers_.assign(n, {});
  es.upper_covers_.assign(n, {});
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y || !reach(x, y)) continue;
      bool direct = true;
      for (int z = 0; z < n; ++z) {
        if (z != x && z != y && reach(x, z) && reach(z, y)) {
          direct = false;
          break;
        }
      }
      if (direct) {
        es.covers_.set(x, y);
        es.lower_covers_[y].push_back(x);
        es.upper_covers_[x].push_back(y);
      }
    }
  }

  // Hereditary closure of the base conflicts: every pair above a base pair
  // (componentwise) conflicts.
  es.conflict_ = RelationTable(n);
  for (const auto& [a, b] : spec.conflicts) {
    EventId u = lookup(a);
    EventId v = lookup(b);
    if (u == v) {
      throw Error(ErrorKind::SelfConflict, "event '" + a + "' conflicts with itself");
    }
    for (int x = 0; x < n; ++x) {
      if (!es.leq_(u, x)) continue;
      for (int y = 0; y < n; ++y) {
        if (!es.leq_(v, y)) continue;
        es.conflict_.set(x, y);
        es.conflict_.set(y, x);
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (es.conflict_(x, y) && es.leq_(x, y)) {
        throw Error(ErrorKind::ConflictOnComparablePair,
                    "conflict between comparable events '" + es.names_[x] + "' and '" +
                        es.names_[y] + "'");
      }
    }
  }

  es.concurrent_ = RelationTable(n);
  es.weak_concurrent_ = RelationTable(n);
  es.minimal_conflict_ = RelationTable(n);
  es.orthogonal_ = RelationTable(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      bool comp = es.leq_(x, y) || es.leq_(y, x);
      bool conc = !comp && !es.conflict_(x, y);
      es.concurrent_.set(x, y, conc);
      es.weak_concurrent_.set(x, y, conc || comp);
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!es.conflict_(x, y)) continue;
      bool minimal = true;
      for (int z = 0; z < n && minimal; ++z) {
        if (es.lt(z, x) && !es.weak_concurrent_(z, y)) minimal = false;
        if (es.lt(z, y) && !es.weak_concurrent_(x, z)) minimal = false;
      }
      if (minimal) es.minimal_conflict_.set(x, y);
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      es.orthogonal_.set(x, y, es.minimal_conflict_(x, y) || es.concurrent_(x, y));
    }
  }

  // Heights: 0 for minimal events, else 1 + max over lower covers. Sorting by
  // the number of strict predecessors gives a linear extension.
  es.height_.assign(n, 0);
  std::vector<int> below(n, 0);
  for (int x = 0; x < n; ++x) {
    for (int z = 0; z < n; ++z) {
      if (es.lt(z, x)) ++below[x];
    }
  }
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return below[a] != below[b] ? below[a] < below[b] : a < b; });
  for (int x : order) {
    int h = 0;
    for (EventId c : es.lower_covers_[x]) h = std::max(h, es.height_[c] + 1);
    es.height_[x] = h;
  }

  return es;
}

EventStructure lift_bottom(const EventStructure& es) {
  std::string bottom = "bot";
  while (es.has_event(bottom)) bottom += "_";

  EventStructureSpec spec;
  spec.events.reserve(es.size() + 1);
  spec.events.push_back(bottom);
  for (const auto& name : es.event_names()) spec.events.push_back(name);
  for (EventId x = 0; x < es.size(); ++x) {
    if (es.lower_covers(x).empty()) spec.covers.emplace_back(bottom, es.name_of(x));
  }
  for (EventId x = 0; x < es.size(); ++x) {
    for (EventId c : es.lower_covers(x)) {
      spec.covers.emplace_back(es.name_of(c), es.name_of(x));
    }
  }
  spec.conflicts = es.spec().conflicts;
  return build_event_structure(spec);
}

EventStructure star_substructure(const EventStructure& es, EventId x) {
  if (x < 0 || x >= es.size()) {
    throw Error(ErrorKind::UnknownEvent, "event index " + std::to_string(x) + " out of range");
  }
  std::vector<EventId> carrier;
  for (EventId y = 0; y < es.size(); ++y) {
    if (es.orthogonal(x, y)) carrier.push_back(y);
  }

  EventStructureSpec spec;
  for (EventId y : carrier) spec.events.push_back(es.name_of(y));
  const int m = static_cast<int>(carrier.size());
  // Hasse edges of the restricted order have to be recomputed: dropping
  // intermediate events can turn transitive pairs into covers.
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j || !es.lt(carrier[i], carrier[j])) continue;
      bool direct = true;
      for (int k = 0; k < m && direct; ++k) {
        if (k != i && k != j && es.lt(carrier[i], carrier[k]) && es.lt(carrier[k], carrier[j])) {
          direct = false;
        }
      }
      if (direct) spec.covers.emplace_back(es.name_of(carrier[i]), es.name_of(carrier[j]));
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (es.conflict(carrier[i], carrier[j])) {
        spec.conflicts.emplace_back(es.name_of(carrier[i]), es.name_of(carrier[j]));
      }
    }
  }
  return build_event_structure(spec);
}

namespace {

// Kuhn's augmenting paths on the split digraph: left copy of every event,
// right copy of every event, an edge wherever u < v.
bool augment(const EventStructure& es, int u, std::vector<char>& visited,
             std::vector<int>& match_left, std::vector<int>& match_right) {
  for (int v = 0; v < es.size(); ++v) {
    if (!es.lt(u, v) || visited[v]) continue;
    visited[v] = 1;
    if (match_right[v] < 0 || augment(es, match_right[v], visited, match_left, match_right)) {
      match_left[u] = v;
      match_right[v] = u;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<std::vector<EventId>> min_chain_partition(const EventStructure& es) {
  const int n = es.size();
  std::vector<int> match_left(n, -1), match_right(n, -1);
  for (int u = 0; u < n; ++u) {
    std::vector<char> visited(n, 0);
    augment(es, u, visited, match_left, match_right);
  }
  std::vector<std::vector<EventId>> chains;
  for (int x = 0; x < n; ++x) {
    if (match_right[x] >= 0) continue;  // not a chain head
    std::vector<EventId> chain;
    for (int y = x; y >= 0; y = match_left[y]) chain.push_back(y);
    chains.push_back(std::move(chain));
  }
  return chains;
}

}  // namespace eslab
