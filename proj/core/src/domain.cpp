#include "eslab/domain.hpp"

#include <algorithm>
#include <deque>

namespace eslab {

DomainGraph::DomainGraph(std::vector<std::string> event_names, std::vector<Configuration> nodes,
                         std::vector<DomainEdge> edges)
    : event_names_(std::move(event_names)), nodes_(std::move(nodes)), edges_(std::move(edges)) {
  out_.assign(nodes_.size(), {});
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    out_[edges_[e].from].push_back(static_cast<int>(e));
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    index_.emplace(nodes_[i].events, static_cast<int>(i));
  }
}

int DomainGraph::node_of(const std::vector<EventId>& config) const {
  auto it = index_.find(config);
  return it == index_.end() ? -1 : it->second;
}

DomainGraph enumerate_domain(const EventStructure& es, int cap) {
  if (cap < 1) {
    throw Error(ErrorKind::DomainTooLarge, "cap must be at least 1");
  }
  const int n = es.size();

  std::vector<Configuration> nodes{Configuration{}};
  std::vector<DomainEdge> edges;
  std::map<std::vector<EventId>, int> index;
  index.emplace(std::vector<EventId>{}, 0);

  std::deque<int> queue{0};
  while (!queue.empty()) {
    int current = queue.front();
    queue.pop_front();
    const std::vector<EventId> config = nodes[current].events;  // copy: nodes grows below
    std::vector<char> in_config(n, 0);
    for (EventId e : config) in_config[e] = 1;

    for (EventId x = 0; x < n; ++x) {
      if (in_config[x]) continue;
      bool enabled = true;
      for (EventId y = 0; y < n && enabled; ++y) {
        if (es.lt(y, x) && !in_config[y]) enabled = false;
      }
      if (!enabled) continue;
      bool conflict_free = true;
      for (EventId y : config) {
        if (es.conflict(x, y)) {
          conflict_free = false;
          break;
        }
      }
      if (!conflict_free) continue;

      std::vector<EventId> next(config);
      next.insert(std::upper_bound(next.begin(), next.end(), x), x);
      auto [it, inserted] = index.emplace(next, static_cast<int>(nodes.size()));
      if (inserted) {
        if (static_cast<int>(nodes.size()) >= cap) {
          throw Error(ErrorKind::DomainTooLarge,
                      "domain exceeds " + std::to_string(cap) + " configurations");
        }
        nodes.push_back(Configuration{std::move(next)});
        queue.push_back(it->second);
      }
      edges.push_back(DomainEdge{current, it->second, x});
    }
  }
  return DomainGraph(es.event_names(), std::move(nodes), std::move(edges));
}

int max_out_degree(const DomainGraph& domain) {
  int best = 0;
  for (int i = 0; i < domain.node_count(); ++i) {
    best = std::max(best, static_cast<int>(domain.out_edges(i).size()));
  }
  return best;
}

EdgeColoring lift_labelling(const DomainGraph& domain, const Labelling& labelling) {
  if (static_cast<int>(labelling.assign.size()) != domain.event_count() || !labelling.total()) {
    throw Error(ErrorKind::PartialLabelling, "labelling does not cover every event");
  }
  EdgeColoring coloring;
  coloring.alphabet = labelling.alphabet;
  coloring.symbol.reserve(domain.edge_count());
  for (const DomainEdge& edge : domain.edges()) {
    coloring.symbol.push_back(labelling.assign[edge.added]);
  }
  return coloring;
}

namespace {

std::string config_text(const DomainGraph& domain, int node) {
  std::string text = "{";
  const auto& events = domain.node(node).events;
  for (std::size_t i = 0; i < events.size(); ++i) {
    if (i > 0) text += ",";
    text += domain.event_names()[events[i]];
  }
  text += "}";
  return text;
}

}  // namespace

EdgeColoringReport verify_edge_coloring(const DomainGraph& domain, const EdgeColoring& coloring) {
  if (static_cast<int>(coloring.symbol.size()) != domain.edge_count()) {
    throw Error(ErrorKind::PartialLabelling, "edge coloring does not cover every edge");
  }
  EdgeColoringReport report;

  for (int node = 0; node < domain.node_count(); ++node) {
    const auto& out = domain.out_edges(node);
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t j = i + 1; j < out.size(); ++j) {
        if (coloring.symbol[out[i]] == coloring.symbol[out[j]]) {
          report.deterministic = false;
          report.violations.push_back(
              "node " + config_text(domain, node) + ": transitions +" +
              domain.event_names()[domain.edge(out[i]).added] + " and +" +
              domain.event_names()[domain.edge(out[j]).added] + " share a symbol");
        }
      }
    }
  }

  // Covering squares: out-edges adding x and y from node I, closed by the
  // configuration I + {x,y}; opposite sides must carry the same symbol.
  for (int node = 0; node < domain.node_count(); ++node) {
    const auto& out = domain.out_edges(node);
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t j = 0; j < out.size(); ++j) {
        if (i == j) continue;
        const DomainEdge& first = domain.edge(out[i]);   // adds x
        const DomainEdge& second = domain.edge(out[j]);  // adds y
        int opposite = -1;
        for (int e : domain.out_edges(first.to)) {
          if (domain.edge(e).added == second.added) {
            opposite = e;
            break;
          }
        }
        if (opposite < 0) continue;  // the square does not close
        if (coloring.symbol[out[j]] != coloring.symbol[opposite]) {
          report.concurrent = false;
          report.violations.push_back(
              "square at " + config_text(domain, node) + ": sides adding " +
              domain.event_names()[second.added] + " disagree");
        }
      }
    }
  }
  return report;
}

Labelling labelling_from_edge_coloring(const DomainGraph& domain, const EdgeColoring& coloring) {
  const EdgeColoringReport report = verify_edge_coloring(domain, coloring);
  if (!report.concurrent) {
    throw Error(ErrorKind::NotConcurrent, report.violations.front());
  }

  const int n = domain.event_count();
  Labelling labelling;
  labelling.alphabet = coloring.alphabet;
  labelling.assign.assign(n, -1);

  // The ideal edge of x, (ideal(x) - x) -> ideal(x), is the x-adding edge
  // with the inclusion-least source. The concurrency condition makes every
  // other x-adding edge carry the same symbol.
  std::vector<std::vector<int>> adding(n);
  for (int e = 0; e < domain.edge_count(); ++e) {
    adding[domain.edge(e).added].push_back(e);
  }
  for (EventId x = 0; x < n; ++x) {
    if (adding[x].empty()) {
      throw Error(ErrorKind::MissingEdge,
                  "no transition adds event '" + domain.event_names()[x] + "'");
    }
    int ideal_edge = adding[x][0];
    for (int e : adding[x]) {
      if (domain.node(domain.edge(e).from).events.size() <
          domain.node(domain.edge(ideal_edge).from).events.size()) {
        ideal_edge = e;
      }
    }
    const auto& source = domain.node(domain.edge(ideal_edge).from).events;
    for (int e : adding[x]) {
      const auto& other = domain.node(domain.edge(e).from).events;
      if (!std::includes(other.begin(), other.end(), source.begin(), source.end())) {
        throw Error(ErrorKind::MissingEdge,
                    "the transitions adding event '" + domain.event_names()[x] +
                        "' have no least source");
      }
    }
    labelling.assign[x] = coloring.symbol[ideal_edge];
  }
  return labelling;
}

}  // namespace eslab
