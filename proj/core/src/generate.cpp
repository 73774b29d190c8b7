#include "eslab/generate.hpp"

#include <algorithm>
#include <stdexcept>

#include "eslab/graph.hpp"

namespace eslab {

namespace {

// splitmix64: tiny, seedable, identical output on every platform
struct Rng {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  bool chance(double p) {
    return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0) < p;
  }
};

int degree_of(const EventStructure& es) { return clique_number(ortho_graph(es)).first; }

constexpr int kAttemptsPerEvent = 48;
constexpr int kRestarts = 64;

bool try_generate(const GenParams& params, std::uint64_t seed, EventStructureSpec& out) {
  Rng rng{seed};
  EventStructureSpec spec;
  spec.events.reserve(params.event_count);

  int roots = 0;
  for (int i = 0; i < params.event_count; ++i) {
    const std::string name = "e" + std::to_string(i);
    const EventStructure current = build_event_structure(spec);

    bool placed = false;
    for (int attempt = 0; attempt < kAttemptsPerEvent && !placed; ++attempt) {
      EventStructureSpec candidate = spec;
      candidate.events.push_back(name);

      std::vector<int> parents;
      bool as_root = false;
      switch (params.shape) {
        case Shape::Forest: {
          as_root = i == 0 || (roots < params.degree_bound && rng.chance(0.15));
          if (!as_root) parents.push_back(rng.below(i));
          break;
        }
        case Shape::General: {
          as_root = i == 0 || (roots < params.degree_bound && rng.chance(0.15));
          if (!as_root) {
            parents.push_back(rng.below(i));
            if (i > 1 && rng.chance(0.3)) {
              int second = rng.below(i);
              // conflicting parents would force the newcomer into conflict
              // with its own ancestry through heredity
              if (second != parents[0] && !current.conflict(parents[0], second)) {
                parents.push_back(second);
              }
            }
          }
          break;
        }
        case Shape::Graded: {
          as_root = i == 0 || (roots < params.degree_bound && rng.chance(0.1));
          if (!as_root) {
            int top_layer = current.height();
            int layer = 1 + rng.below(top_layer + 1);
            std::vector<int> pool;
            for (int y = 0; y < i; ++y) {
              if (current.height(y) == layer - 1) pool.push_back(y);
            }
            parents.push_back(pool[rng.below(static_cast<int>(pool.size()))]);
            if (pool.size() > 1 && rng.chance(0.3)) {
              int second = pool[rng.below(static_cast<int>(pool.size()))];
              if (second != parents[0] && !current.conflict(parents[0], second)) {
                parents.push_back(second);
              }
            }
          }
          break;
        }
      }
      for (int p : parents) candidate.covers.emplace_back(spec.events[p], name);

      std::vector<char> ancestor(i, 0);  // strict predecessors of the newcomer
      for (int p : parents) {
        for (int z = 0; z < i; ++z) {
          if (current.leq(z, p)) ancestor[z] = 1;
        }
      }

      // base conflicts against events incomparable with the newcomer; the
      // conflict partner's whole up-set must stay incomparable too, or the
      // hereditary closure would hit an ancestor. Retries get denser, which
      // trims the concurrent neighbourhood above the conflict points.
      const double density =
          params.conflict_density == 0.0
              ? 0.0
              : std::min(0.9, params.conflict_density + 0.2 * attempt);
      for (int z = 0; z < i; ++z) {
        bool touches_ancestry = false;
        for (int a = 0; a < i && !touches_ancestry; ++a) {
          if (ancestor[a] && current.leq(z, a)) touches_ancestry = true;
        }
        if (!touches_ancestry && rng.chance(density)) {
          candidate.conflicts.emplace_back(spec.events[z], name);
        }
      }

      const EventStructure trial = build_event_structure(candidate);
      if (degree_of(trial) <= params.degree_bound) {
        spec = std::move(candidate);
        if (as_root) ++roots;
        placed = true;
      }
    }
    if (!placed) return false;
  }
  out = spec;
  return true;
}

}  // namespace

EventStructureSpec generate_spec(const GenParams& params) {
  if (params.event_count < 0 || (params.degree_bound != 2 && params.degree_bound != 3) ||
      params.conflict_density < 0.0 || params.conflict_density > 1.0) {
    throw std::invalid_argument("invalid generation parameters");
  }
  for (int restart = 0; restart < kRestarts; ++restart) {
    // decorrelate restarts without touching the caller-visible seed
    std::uint64_t seed = params.seed + 0x51ed2701a3c5e1d9ULL * static_cast<std::uint64_t>(restart);
    EventStructureSpec spec;
    if (try_generate(params, seed, spec)) return spec;
  }
  throw Error(ErrorKind::GenerationBudgetExceeded,
              "no valid structure after " + std::to_string(kRestarts) + " restarts");
}

EventStructure generate(const GenParams& params) {
  return build_event_structure(generate_spec(params));
}

namespace {

void emit_conflict_sets(const std::vector<std::string>& names,
                        const std::vector<std::pair<int, int>>& covers,
                        const RelationTable& leq, int degree_cap,
                        const std::function<void(const EventStructure&)>& visit) {
  const int n = static_cast<int>(names.size());
  EventStructureSpec spec;
  spec.events = names;
  for (auto [p, c] : covers) spec.covers.emplace_back(names[p], names[c]);

  std::vector<std::pair<int, int>> incomparable;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!leq(i, j) && !leq(j, i)) incomparable.emplace_back(i, j);
    }
  }
  const int m = static_cast<int>(incomparable.size());
  if (m > 20) {
    throw std::invalid_argument("exhaustive enumeration limited to 20 incomparable pairs");
  }

  // per-pair hereditary closure over the incomparable pairs; pairs whose
  // closure would hit a comparable pair can never appear in a valid set
  std::vector<std::uint32_t> closure(m, 0);
  std::uint32_t forbidden = 0;
  for (int p = 0; p < m; ++p) {
    auto [a, b] = incomparable[p];
    bool valid = true;
    for (int u = 0; u < n && valid; ++u) {
      if (!leq(a, u) && !leq(b, u)) continue;
      for (int v = 0; v < n && valid; ++v) {
        bool covered = (leq(a, u) && leq(b, v)) || (leq(b, u) && leq(a, v));
        if (!covered) continue;
        if (leq(u, v) || leq(v, u)) {
          valid = false;
          break;
        }
        int lo = std::min(u, v), hi = std::max(u, v);
        for (int q = 0; q < m; ++q) {
          if (incomparable[q] == std::make_pair(lo, hi)) {
            closure[p] |= 1u << q;
            break;
          }
        }
      }
    }
    if (!valid) forbidden |= 1u << p;
  }

  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (mask & forbidden) continue;
    std::uint32_t required = 0;
    for (int p = 0; p < m; ++p) {
      if (mask & (1u << p)) required |= closure[p];
    }
    if ((required & ~mask) != 0) continue;  // not hereditarily closed

    spec.conflicts.clear();
    for (int p = 0; p < m; ++p) {
      if (mask & (1u << p)) {
        spec.conflicts.emplace_back(names[incomparable[p].first], names[incomparable[p].second]);
      }
    }
    const EventStructure es = build_event_structure(spec);
    if (degree_of(es) <= degree_cap) visit(es);
  }
}

}  // namespace

void enumerate_structures(int max_events, int degree_cap,
                          const std::function<void(const EventStructure&)>& visit) {
  for (int n = 0; n <= max_events; ++n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    const int np = static_cast<int>(pairs.size());
    std::vector<int> state(np, 0);  // 0 incomparable, 1 i<j, 2 j<i

    while (true) {
      RelationTable leq(n);
      for (int i = 0; i < n; ++i) leq.set(i, i);
      for (int p = 0; p < np; ++p) {
        if (state[p] == 1) leq.set(pairs[p].first, pairs[p].second);
        if (state[p] == 2) leq.set(pairs[p].second, pairs[p].first);
      }
      bool transitive = true;
      for (int a = 0; a < n && transitive; ++a) {
        for (int b = 0; b < n && transitive; ++b) {
          if (a == b || !leq(a, b)) continue;
          for (int c = 0; c < n; ++c) {
            if (c != b && c != a && leq(b, c) && !leq(a, c)) {
              transitive = false;
              break;
            }
          }
        }
      }
      if (transitive) {
        int minimal = 0;
        for (int x = 0; x < n; ++x) {
          bool is_min = true;
          for (int y = 0; y < n; ++y) {
            if (y != x && leq(y, x)) is_min = false;
          }
          if (is_min) ++minimal;
        }
        // minimal events are pairwise orthogonal, so too many of them can
        // never meet the degree cap
        if (minimal <= degree_cap) {
          std::vector<std::pair<int, int>> covers;
          for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y) {
              if (x == y || !leq(x, y)) continue;
              bool direct = true;
              for (int z = 0; z < n && direct; ++z) {
                if (z != x && z != y && leq(x, z) && leq(z, y)) direct = false;
              }
              if (direct) covers.emplace_back(x, y);
            }
          }
          emit_conflict_sets(names, covers, leq, degree_cap, visit);
        }
      }
      int p = 0;
      while (p < np && state[p] == 2) state[p++] = 0;
      if (p == np) break;
      ++state[p];
    }
  }
}

void enumerate_forests(int max_events, int degree_cap,
                       const std::function<void(const EventStructure&)>& visit) {
  for (int n = 0; n <= max_events; ++n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));

    std::vector<int> parent(n, -1);  // -1 root, else an earlier event
    while (true) {
      int roots = 0;
      for (int i = 0; i < n; ++i) {
        if (parent[i] < 0) ++roots;
      }
      if (roots <= degree_cap || n == 0) {
        RelationTable leq(n);
        for (int i = 0; i < n; ++i) {
          leq.set(i, i);
          for (int a = parent[i]; a >= 0; a = parent[a]) leq.set(a, i);
        }
        std::vector<std::pair<int, int>> covers;
        for (int i = 0; i < n; ++i) {
          if (parent[i] >= 0) covers.emplace_back(parent[i], i);
        }
        emit_conflict_sets(names, covers, leq, degree_cap, visit);
      }
      if (n == 0) break;
      int i = 0;
      while (i < n && parent[i] == i - 1) parent[i] = -1, ++i;
      if (i == n) break;
      ++parent[i];
    }
  }
}

}  // namespace eslab
