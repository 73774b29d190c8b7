#include <algorithm>

#include "eslab/labelling.hpp"

namespace eslab {

namespace {

bool strict_superset(const std::vector<EventId>& a, const std::vector<EventId>& b) {
  // both sorted
  if (a.size() <= b.size()) return false;
  return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

TreeOrder tree_order(const EventStructure& es, const std::vector<EventId>& tree) {
  const int n = es.size();
  TreeOrder order;
  order.rank_.assign(n, -1);
  order.parent_.assign(n, -1);
  order.tree_height_.assign(n, -1);

  std::vector<char> member(n, 0);
  for (EventId x : tree) {
    if (x < 0 || x >= n) {
      throw Error(ErrorKind::UnknownEvent, "event index " + std::to_string(x) + " out of range");
    }
    if (member[x]) {
      throw Error(ErrorKind::NotATree, "event '" + es.name_of(x) + "' listed twice");
    }
    member[x] = 1;
  }

  // clause 1: exactly one lower cover
  for (EventId x : tree) {
    if (es.lower_covers(x).size() != 1) {
      throw Error(ErrorKind::NotATree,
                  "event '" + es.name_of(x) + "' has " +
                      std::to_string(es.lower_covers(x).size()) + " lower covers");
    }
    order.parent_[x] = es.lower_covers(x)[0];
  }
  // clause 2: convexity
  for (EventId x : tree) {
    for (EventId z : tree) {
      if (!es.lt(x, z)) continue;
      for (EventId y = 0; y < n; ++y) {
        if (!member[y] && es.lt(x, y) && es.lt(y, z)) {
          throw Error(ErrorKind::NotATree,
                      "event '" + es.name_of(y) + "' lies between tree events '" +
                          es.name_of(x) + "' and '" + es.name_of(z) + "'");
        }
      }
    }
  }
  // clause 3: minimal members share the parent
  EventId shared_parent = -1;
  for (EventId x : tree) {
    bool minimal = true;
    for (EventId y : tree) {
      if (es.lt(y, x)) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    if (shared_parent < 0) {
      shared_parent = order.parent_[x];
    } else if (order.parent_[x] != shared_parent) {
      throw Error(ErrorKind::NotATree, "minimal tree events have different lower covers");
    }
  }

  for (EventId x : tree) {
    int h = 0;
    for (EventId y : tree) {
      if (es.lt(y, x)) ++h;
    }
    order.tree_height_[x] = h;
  }

  // Stable sort by (tree height, declaration index), then put the strictly
  // more experienced member of each proper pair of brothers first.
  std::vector<EventId> sequence(tree);
  std::sort(sequence.begin(), sequence.end(), [&](EventId a, EventId b) {
    int ha = order.tree_height_[a], hb = order.tree_height_[b];
    return ha != hb ? ha < hb : a < b;
  });

  std::vector<int> position(n, -1);
  for (std::size_t i = 0; i < sequence.size(); ++i) position[sequence[i]] = static_cast<int>(i);

  std::vector<std::vector<EventId>> societies(n);
  for (EventId x : tree) {
    societies[x] = es.society(x);
  }
  for (EventId x : tree) {
    const auto bros = es.brothers(x);
    if (bros.size() != 1) continue;  // only proper pairs are constrained
    EventId y = bros[0];
    if (!member[y] || y < x) continue;  // handle each pair once
    EventId first = position[x] < position[y] ? x : y;
    EventId second = first == x ? y : x;
    if (strict_superset(societies[second], societies[first])) {
      std::swap(position[first], position[second]);
      std::swap(sequence[position[first]], sequence[position[second]]);
    }
  }

  order.sequence_ = sequence;
  for (std::size_t i = 0; i < sequence.size(); ++i) order.rank_[sequence[i]] = static_cast<int>(i);
  return order;
}

NeighborhoodSets neighborhood_sets(const EventStructure& es, const TreeOrder& order, EventId x) {
  if (x < 0 || x >= es.size() || !order.contains(x)) {
    throw Error(ErrorKind::UnknownEvent,
                "event index " + std::to_string(x) + " is not in the tree");
  }
  NeighborhoodSets sets;
  EventId parent = order.parent_of(x);
  for (EventId y : order.sequence()) {
    if (y == x) break;
    if (!es.orthogonal(x, y)) continue;
    sets.older.push_back(y);
    if (es.lt(parent, y)) {
      sets.older_brothers.push_back(y);
    } else {
      sets.lineage.push_back(y);
    }
  }
  return sets;
}

Labelling label_tree(const EventStructure& es, const std::vector<EventId>& tree) {
  const TreeOrder order = tree_order(es, tree);
  static const char* symbols[3] = {"a0", "a1", "a2"};

  Labelling result;
  result.alphabet = {"a0", "a1", "a2"};
  result.assign.assign(es.size(), -1);

  for (EventId x : order.sequence()) {
    const NeighborhoodSets sets = neighborhood_sets(es, order, x);
    if (sets.older_brothers.size() > 2) {
      throw Error(ErrorKind::InternalContradiction,
                  "event '" + es.name_of(x) + "' has more than two older brothers");
    }
    int symbol = -1;
    if (sets.older_brothers.empty()) {
      // eldest brother: first of its generation or inheriting from the parent
      if (order.height_in_tree(x) == 0) {
        symbol = 0;
      } else {
        EventId parent = order.parent_of(x);
        symbol = result.assign[parent];
        if (symbol < 0) {
          throw Error(ErrorKind::InternalContradiction,
                      "parent of '" + es.name_of(x) + "' is unlabelled");
        }
      }
    } else if (sets.lineage.empty()) {
      bool taken[3] = {false, false, false};
      for (EventId y : sets.older_brothers) taken[result.assign[y]] = true;
      for (int c = 0; c < 3; ++c) {
        if (!taken[c]) {
          symbol = c;
          break;
        }
      }
    } else {
      // younger brother with society contact: single older brother, and the
      // lineage is an initial chain of the society headed by z0
      if (sets.older_brothers.size() != 1) {
        throw Error(ErrorKind::InternalContradiction,
                    "event '" + es.name_of(x) + "' has lineage and several older brothers");
      }
      EventId brother = sets.older_brothers[0];
      const auto bros = es.brothers(x);
      if (bros.size() != 1 || bros[0] != brother) {
        throw Error(ErrorKind::InternalContradiction,
                    "'" + es.name_of(x) + "' and '" + es.name_of(brother) +
                        "' are not a proper pair of brothers");
      }
      const std::vector<EventId> society = es.society(x);
      for (EventId z : sets.lineage) {
        if (!std::binary_search(society.begin(), society.end(), z)) {
          throw Error(ErrorKind::InternalContradiction,
                      "lineage of '" + es.name_of(x) + "' leaves its society");
        }
      }
      EventId z0 = sets.lineage[0];
      for (EventId z : sets.lineage) {
        if (es.lt(z, z0)) z0 = z;
      }
      for (EventId z : sets.lineage) {
        if (z != z0 && !es.lt(z0, z)) {
          throw Error(ErrorKind::InternalContradiction,
                      "lineage of '" + es.name_of(x) + "' has no least element");
        }
      }
      for (EventId z : society) {
        if (z != z0 && !es.lt(z0, z)) {
          throw Error(ErrorKind::InternalContradiction,
                      "society of '" + es.name_of(x) + "' is not headed by '" +
                          es.name_of(z0) + "'");
        }
      }
      if (result.assign[brother] == result.assign[z0]) {
        throw Error(ErrorKind::InternalContradiction,
                    "no free symbol for '" + es.name_of(x) + "': brother and lineage share '" +
                        symbols[result.assign[brother]] + "'");
      }
      for (int c = 0; c < 3; ++c) {
        if (c != result.assign[brother] && c != result.assign[z0]) {
          symbol = c;
          break;
        }
      }
    }
    result.assign[x] = symbol;
  }
  return result;
}

Labelling label_forest3(const EventStructure& es) {
  for (EventId x = 0; x < es.size(); ++x) {
    if (es.lower_covers(x).size() > 1) {
      throw Error(ErrorKind::NotAForest,
                  "event '" + es.name_of(x) + "' has " +
                      std::to_string(es.lower_covers(x).size()) + " lower covers");
    }
  }
  const int degree = clique_number(ortho_graph(es)).first;
  if (degree > 3) {
    throw Error(ErrorKind::DegreeTooHigh, "degree " + std::to_string(degree) + " exceeds 3");
  }
  if (es.size() == 0) return Labelling{};

  const EventStructure lifted = lift_bottom(es);
  std::vector<EventId> tree(es.size());
  for (EventId x = 0; x < es.size(); ++x) tree[x] = x + 1;  // bottom sits at index 0

  const Labelling on_tree = label_tree(lifted, tree);
  std::vector<std::string> raw(es.size());
  for (EventId x = 0; x < es.size(); ++x) raw[x] = on_tree.alphabet[on_tree.assign[x + 1]];
  Labelling result = canonical_labelling(raw);
  if (!verify_nice(es, result).empty()) {
    throw Error(ErrorKind::InternalContradiction, "forest labelling is not nice");
  }
  return result;
}

namespace {

// lower cover count within the lifted structure
int fan_in(const EventStructure& es, EventId x) { return es.cover_count(x); }

}  // namespace

Labelling label_simple12(const EventStructure& es) {
  const StructuralReport report = structural_report(es);
  if (report.degree > 3) {
    throw Error(ErrorKind::DegreeTooHigh, "degree " + std::to_string(report.degree) + " exceeds 3");
  }
  if (!report.is_simple) {
    throw Error(ErrorKind::NotSimple, "structure is not graded-simple");
  }
  if (es.size() == 0) return Labelling{};

  const EventStructure lifted = lift_bottom(es);
  const int n = lifted.size();
  const EventId bottom = 0;

  std::vector<EventId> two_cover;  // E_2 of the lifted structure
  for (EventId x = 0; x < n; ++x) {
    if (x == bottom) continue;
    if (fan_in(lifted, x) >= 3) {
      throw Error(ErrorKind::GreedyAssertionFailed,
                  "event '" + lifted.name_of(x) + "' has three lower covers in a simple structure");
    }
    if (fan_in(lifted, x) == 2) two_cover.push_back(x);
  }

  // age order: height first, declaration index as tie-break
  auto older = [&](EventId a, EventId b) {
    int ha = lifted.height(a), hb = lifted.height(b);
    return ha != hb ? ha < hb : a < b;
  };

  // Greedy 3-coloring of E_2: each member may see at most two older members.
  std::vector<EventId> two_sorted(two_cover);
  std::sort(two_sorted.begin(), two_sorted.end(), older);
  std::vector<int> two_color(n, -1);
  for (std::size_t i = 0; i < two_sorted.size(); ++i) {
    EventId x = two_sorted[i];
    int seen = 0;
    bool taken[3] = {false, false, false};
    for (std::size_t j = 0; j < i; ++j) {
      EventId y = two_sorted[j];
      if (lifted.orthogonal(x, y)) {
        ++seen;
        taken[two_color[y]] = true;
      }
    }
    if (seen > 2) {
      throw Error(ErrorKind::GreedyAssertionFailed,
                  "two-cover event '" + lifted.name_of(x) + "' has " + std::to_string(seen) +
                      " older two-cover neighbours");
    }
    for (int c = 0; c < 3; ++c) {
      if (!taken[c]) {
        two_color[x] = c;
        break;
      }
    }
  }

  // rho(x): walk the unique chain below a one-cover event to the first event
  // with a different fan-in; members with the same rho form a tree class.
  std::vector<EventId> rho(n, -1);
  for (EventId x = 0; x < n; ++x) {
    if (x == bottom || fan_in(lifted, x) != 1) continue;
    EventId y = lifted.lower_covers(x)[0];
    while (y != bottom && fan_in(lifted, y) == 1) {
      y = lifted.lower_covers(y)[0];
    }
    rho[x] = y;
  }
  std::vector<EventId> anchors;  // distinct rho values, sorted by age
  for (EventId x = 0; x < n; ++x) {
    if (rho[x] >= 0 && std::find(anchors.begin(), anchors.end(), rho[x]) == anchors.end()) {
      anchors.push_back(rho[x]);
    }
  }
  std::sort(anchors.begin(), anchors.end(), older);

  Partition partition;
  std::vector<int> quotient_color_raw;
  std::vector<Coloring> class_colorings;

  // bottom class, isolated in the quotient
  partition.push_back({bottom});
  quotient_color_raw.push_back(0);
  class_colorings.push_back(Coloring{{0}, 1});

  // one tree class per anchor, greedily 3-colored along the anchor age order
  std::vector<int> tree_class_color;
  std::vector<std::vector<EventId>> tree_classes;
  for (EventId anchor : anchors) {
    std::vector<EventId> members;
    for (EventId x = 0; x < n; ++x) {
      if (rho[x] == anchor) members.push_back(x);
    }
    tree_classes.push_back(members);
  }
  for (std::size_t i = 0; i < tree_classes.size(); ++i) {
    int seen = 0;
    bool taken[3] = {false, false, false};
    for (std::size_t j = 0; j < i; ++j) {
      bool adjacent = false;
      for (EventId x : tree_classes[i]) {
        for (EventId y : tree_classes[j]) {
          if (lifted.orthogonal(x, y)) {
            adjacent = true;
            break;
          }
        }
        if (adjacent) break;
      }
      if (adjacent) {
        ++seen;
        taken[tree_class_color[j]] = true;
      }
    }
    if (seen > 2) {
      throw Error(ErrorKind::GreedyAssertionFailed,
                  "tree class anchored at '" + lifted.name_of(anchors[i]) + "' has " +
                      std::to_string(seen) + " older tree neighbours");
    }
    int color = 0;
    while (taken[color]) ++color;
    tree_class_color.push_back(color);
  }
  for (std::size_t i = 0; i < tree_classes.size(); ++i) {
    const auto& members = tree_classes[i];
    Labelling on_tree;
    try {
      on_tree = label_tree(lifted, members);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NotATree) {
        throw Error(ErrorKind::InternalContradiction,
                    std::string("one-cover class is not a tree: ") + e.what());
      }
      throw;
    }
    std::vector<int> colors;
    colors.reserve(members.size());
    for (EventId x : members) colors.push_back(on_tree.assign[x]);
    partition.push_back(members);
    quotient_color_raw.push_back(tree_class_color[i]);
    class_colorings.push_back(canonicalize_coloring(std::move(colors)));
  }

  // the two-cover class takes the fourth quotient color
  if (!two_cover.empty()) {
    std::vector<int> colors;
    colors.reserve(two_cover.size());
    for (EventId x : two_cover) colors.push_back(two_color[x]);
    partition.push_back(two_cover);
    quotient_color_raw.push_back(3);
    class_colorings.push_back(canonicalize_coloring(std::move(colors)));
  }

  const Coloring quotient_coloring = canonicalize_coloring(quotient_color_raw);

  const Labelling on_lifted = label_quotient(lifted, partition, class_colorings, quotient_coloring);
  std::vector<std::string> raw(es.size());
  for (EventId x = 0; x < es.size(); ++x) raw[x] = on_lifted.alphabet[on_lifted.assign[x + 1]];
  Labelling result = canonical_labelling(raw);
  if (!verify_nice(es, result).empty()) {
    throw Error(ErrorKind::InternalContradiction, "simple-structure labelling is not nice");
  }
  return result;
}

}  // namespace eslab
