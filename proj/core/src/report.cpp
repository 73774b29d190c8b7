#include "eslab/event_structure.hpp"
#include "eslab/graph.hpp"

namespace eslab {

StructuralReport structural_report(const EventStructure& es) {
  StructuralReport report;
  const int n = es.size();

  report.is_forest = true;
  for (EventId x = 0; x < n; ++x) {
    switch (es.cover_count(x)) {
      case 0: ++report.e0; break;
      case 1: ++report.e1; break;
      case 2: ++report.e2; break;
      default: ++report.e3; break;
    }
    if (es.cover_count(x) > 1) report.is_forest = false;
  }

  report.is_graded = true;
  for (EventId x = 0; x < n && report.is_graded; ++x) {
    for (EventId y : es.upper_covers(x)) {
      if (es.height(y) != es.height(x) + 1) {
        report.is_graded = false;
        break;
      }
    }
  }

  report.height = es.height();
  report.width = static_cast<int>(min_chain_partition(es).size());

  const OrthoGraph graph = ortho_graph(es);
  report.degree = clique_number(graph).first;

  report.is_simple = report.is_graded;
  for (EventId x = 0; x < n && report.is_simple; ++x) {
    for (EventId y = x + 1; y < n && report.is_simple; ++y) {
      if (!es.orthogonal(x, y)) continue;
      for (EventId z = y + 1; z < n; ++z) {
        if (!es.orthogonal(x, z) || !es.orthogonal(y, z)) continue;
        if (!es.minimal_conflict(x, y) && !es.minimal_conflict(x, z) &&
            !es.minimal_conflict(y, z)) {
          report.is_simple = false;
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace eslab
