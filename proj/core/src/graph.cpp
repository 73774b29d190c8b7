#include "eslab/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace eslab {

OrthoGraph::OrthoGraph(std::vector<std::string> names, RelationTable adjacency,
                       std::string source_note)
    : names_(std::move(names)), adjacency_(std::move(adjacency)), source_note_(std::move(source_note)) {
  const int n = size();
  if (adjacency_.size() != n) {
    throw std::invalid_argument("adjacency size does not match vertex count");
  }
  for (int u = 0; u < n; ++u) {
    if (adjacency_(u, u)) throw std::invalid_argument("adjacency must be irreflexive");
    for (int v = 0; v < n; ++v) {
      if (adjacency_(u, v) != adjacency_(v, u)) {
        throw std::invalid_argument("adjacency must be symmetric");
      }
    }
  }
}

std::vector<int> OrthoGraph::neighbors(int v) const {
  std::vector<int> result;
  for (int u = 0; u < size(); ++u) {
    if (adjacency_(v, u)) result.push_back(u);
  }
  return result;
}

int OrthoGraph::edge_count() const {
  int count = 0;
  for (int u = 0; u < size(); ++u) {
    for (int v = u + 1; v < size(); ++v) {
      if (adjacency_(u, v)) ++count;
    }
  }
  return count;
}

OrthoGraph ortho_graph(const EventStructure& es) {
  return OrthoGraph(es.event_names(), es.orthogonal_table(),
                    "orthogonality of " + std::to_string(es.size()) + "-event structure");
}

Coloring canonicalize_coloring(std::vector<int> raw) {
  Coloring result;
  std::vector<int> remap;
  result.color.reserve(raw.size());
  for (int c : raw) {
    int mapped = -1;
    for (std::size_t i = 0; i < remap.size(); ++i) {
      if (remap[i] == c) {
        mapped = static_cast<int>(i);
        break;
      }
    }
    if (mapped < 0) {
      mapped = static_cast<int>(remap.size());
      remap.push_back(c);
    }
    result.color.push_back(mapped);
  }
  result.colors_used = static_cast<int>(remap.size());
  return result;
}

namespace {

int max_clique_size(const OrthoGraph& g, std::vector<int>& candidates, int current, int best) {
  if (candidates.empty()) return current;
  if (current + static_cast<int>(candidates.size()) <= best) return best;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (current + static_cast<int>(candidates.size() - i) <= best) break;
    int v = candidates[i];
    std::vector<int> next;
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (g.adjacent(v, candidates[j])) next.push_back(candidates[j]);
    }
    best = std::max(best, max_clique_size(g, next, current + 1, best));
  }
  return best;
}

// Colex-least k-clique among vertices of `allowed`: pick the smallest
// possible maximum vertex first, then recurse below it.
bool colex_least_clique(const OrthoGraph& g, const std::vector<int>& allowed, int k,
                        std::vector<int>& out) {
  if (k == 0) return true;
  for (std::size_t i = k - 1; i < allowed.size(); ++i) {
    int m = allowed[i];
    std::vector<int> below;
    for (std::size_t j = 0; j < i; ++j) {
      if (g.adjacent(m, allowed[j])) below.push_back(allowed[j]);
    }
    if (colex_least_clique(g, below, k - 1, out)) {
      out.push_back(m);
      return true;
    }
  }
  return false;
}

}  // namespace

std::pair<int, std::vector<int>> clique_number(const OrthoGraph& g) {
  const int n = g.size();
  if (n == 0) return {0, {}};
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  int omega = max_clique_size(g, all, 0, 0);
  std::vector<int> witness;
  colex_least_clique(g, all, omega, witness);
  std::sort(witness.begin(), witness.end());
  return {omega, witness};
}

namespace {

// Backtracking k-colorability along a fixed vertex order; a vertex may open
// at most one new color class.
bool try_k_coloring(const RelationTable& adj, const std::vector<int>& order, int k,
                    std::vector<int>& colors) {
  const int n = static_cast<int>(order.size());
  std::vector<int> assigned(n, -1);  // by position in order
  int pos = 0;
  std::vector<int> used_up_to(n + 1, 0);
  while (true) {
    if (pos == n) {
      for (int i = 0; i < n; ++i) colors[order[i]] = assigned[i];
      return true;
    }
    int v = order[pos];
    int start = assigned[pos] + 1;
    int limit = std::min(k - 1, used_up_to[pos]);  // allow one fresh color
    int chosen = -1;
    for (int c = start; c <= limit; ++c) {
      bool ok = true;
      for (int i = 0; i < pos && ok; ++i) {
        if (assigned[i] == c && adj(v, order[i])) ok = false;
      }
      if (ok) {
        chosen = c;
        break;
      }
    }
    if (chosen >= 0) {
      assigned[pos] = chosen;
      used_up_to[pos + 1] = std::max(used_up_to[pos], chosen + 1);
      ++pos;
    } else {
      assigned[pos] = -1;
      --pos;
      if (pos < 0) return false;
    }
  }
}

}  // namespace

std::pair<int, Coloring> chromatic_number(const OrthoGraph& g, int cap) {
  const int n = g.size();
  if (n > cap) {
    throw Error(ErrorKind::InstanceTooLarge,
                std::to_string(n) + " vertices exceed the chromatic cap " + std::to_string(cap));
  }
  if (n == 0) return {0, Coloring{}};

  // Search order: decreasing degree, declaration index as tie-break.
  std::vector<int> degree(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (g.adjacent(u, v)) ++degree[u];
    }
  }
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return degree[a] != degree[b] ? degree[a] > degree[b] : a < b; });

  // Greedy upper bound along the same order.
  std::vector<int> greedy(n, -1);
  int upper = 0;
  for (int v : order) {
    std::vector<char> taken(n + 1, 0);
    for (int u = 0; u < n; ++u) {
      if (g.adjacent(v, u) && greedy[u] >= 0) taken[greedy[u]] = 1;
    }
    int c = 0;
    while (taken[c]) ++c;
    greedy[v] = c;
    upper = std::max(upper, c + 1);
  }
  int lower = clique_number(g).first;

  std::vector<int> colors(n, -1);
  for (int k = lower; k < upper; ++k) {
    if (try_k_coloring(g.adjacency(), order, k, colors)) {
      Coloring result = canonicalize_coloring(colors);
      return {result.colors_used, result};
    }
  }
  Coloring result = canonicalize_coloring(greedy);
  return {result.colors_used, result};
}

namespace {

struct CycleSearch {
  const RelationTable* adj;
  const RelationTable* leq;  // nullptr: everything incomparable
  int max_len;
  std::vector<int> path;
  std::vector<char> in_path;

  bool comparable(int u, int v) const {
    return leq != nullptr && ((*leq)(u, v) || (*leq)(v, u));
  }

  std::optional<StraightCycle> extend(int n) {
    int last = path.back();
    int start = path.front();
    if (static_cast<int>(path.size()) >= 4 && (*adj)(last, start)) {
      StraightCycle cycle;
      cycle.vertices = path;
      cycle.vertices.push_back(start);
      return cycle;
    }
    if (static_cast<int>(path.size()) >= max_len) return std::nullopt;
    for (int v = start + 1; v < n; ++v) {
      if (in_path[v] || !(*adj)(last, v)) continue;
      bool antichain = true;
      for (int u : path) {
        if (comparable(u, v)) {
          antichain = false;
          break;
        }
      }
      if (!antichain) continue;
      path.push_back(v);
      in_path[v] = 1;
      if (auto found = extend(n)) return found;
      in_path[v] = 0;
      path.pop_back();
    }
    return std::nullopt;
  }
};

std::optional<StraightCycle> straight_cycle_search(const RelationTable& adj,
                                                   const RelationTable* leq, int n, int max_len) {
  if (max_len < 4) {
    throw std::invalid_argument("straight cycle search needs max_len >= 4");
  }
  CycleSearch search{&adj, leq, max_len, {}, std::vector<char>(n, 0)};
  for (int s = 0; s < n; ++s) {
    search.path.assign(1, s);
    std::fill(search.in_path.begin(), search.in_path.end(), 0);
    search.in_path[s] = 1;
    if (auto found = search.extend(n)) return found;
  }
  return std::nullopt;
}

}  // namespace

std::optional<StraightCycle> find_straight_cycle(const EventStructure& es, int max_len) {
  return straight_cycle_search(es.orthogonal_table(), &es.leq_table(), es.size(), max_len);
}

std::optional<StraightCycle> find_straight_cycle(const OrthoGraph& g, int max_len) {
  return straight_cycle_search(g.adjacency(), nullptr, g.size(), max_len);
}

Coloring antichain_chordal_coloring(const EventStructure& es,
                                    const std::vector<EventId>& antichain) {
  const int m = static_cast<int>(antichain.size());
  for (int i = 0; i < m; ++i) {
    EventId a = antichain[i];
    if (a < 0 || a >= es.size()) {
      throw Error(ErrorKind::UnknownEvent, "event index " + std::to_string(a) + " out of range");
    }
    for (int j = i + 1; j < m; ++j) {
      if (a == antichain[j] || es.comparable(a, antichain[j])) {
        throw Error(ErrorKind::NotAnAntichain,
                    "'" + es.name_of(a) + "' and '" + es.name_of(antichain[j]) +
                        "' are not an antichain pair");
      }
    }
  }

  auto adjacent = [&](int i, int j) { return es.orthogonal(antichain[i], antichain[j]); };

  // Maximum cardinality search; visit order read backwards is the candidate
  // perfect elimination order.
  std::vector<int> weight(m, 0), visit;
  std::vector<char> visited(m, 0);
  for (int step = 0; step < m; ++step) {
    int pick = -1;
    for (int i = 0; i < m; ++i) {
      if (!visited[i] && (pick < 0 || weight[i] > weight[pick])) pick = i;
    }
    visited[pick] = 1;
    visit.push_back(pick);
    for (int i = 0; i < m; ++i) {
      if (!visited[i] && adjacent(pick, i)) ++weight[i];
    }
  }

  // Certify: the already-visited neighbours of each vertex must be a clique.
  for (int step = 0; step < m; ++step) {
    std::vector<int> earlier;
    for (int s = 0; s < step; ++s) {
      if (adjacent(visit[step], visit[s])) earlier.push_back(visit[s]);
    }
    for (std::size_t i = 0; i < earlier.size(); ++i) {
      for (std::size_t j = i + 1; j < earlier.size(); ++j) {
        if (!adjacent(earlier[i], earlier[j])) {
          throw Error(ErrorKind::NotChordal,
                      "antichain subgraph has no perfect elimination order (vertex '" +
                          es.name_of(antichain[visit[step]]) + "')");
        }
      }
    }
  }

  std::vector<int> colors(m, -1);
  for (int step = 0; step < m; ++step) {
    int v = visit[step];
    std::vector<char> taken(m + 1, 0);
    for (int u = 0; u < m; ++u) {
      if (colors[u] >= 0 && adjacent(v, u)) taken[colors[u]] = 1;
    }
    int c = 0;
    while (taken[c]) ++c;
    colors[v] = c;
  }
  return canonicalize_coloring(colors);
}

std::optional<Coloring> bipartite_two_coloring(const OrthoGraph& g) {
  const int n = g.size();
  std::vector<int> side(n, -1);
  for (int root = 0; root < n; ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int u = 0; u < n; ++u) {
        if (!g.adjacent(v, u)) continue;
        if (side[u] < 0) {
          side[u] = 1 - side[v];
          queue.push_back(u);
        } else if (side[u] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  if (n == 0) return Coloring{};
  return canonicalize_coloring(side);
}

}  // namespace eslab
