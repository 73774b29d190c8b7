#pragma once

#include <cstdint>
#include <functional>

#include "eslab/event_structure.hpp"

namespace eslab {

enum class Shape { General, Forest, Graded };

struct GenParams {
  int event_count = 0;
  int degree_bound = 3;  // 2 or 3
  Shape shape = Shape::General;
  double conflict_density = 0.0;  // in [0, 1]
  std::uint64_t seed = 0;
};

/// Seeded random coherent structure with clique number at most the degree
/// bound. Events are placed one by one; placements that would create a
/// too-large clique are rejected and resampled, with whole-run restarts as a
/// fallback. Deterministic per parameter set.
/// Throws GenerationBudgetExceeded when the retry budget runs out.
EventStructure generate(const GenParams& params);
EventStructureSpec generate_spec(const GenParams& params);

/// All coherent structures on up to max_events labelled events (every strict
/// order times every hereditarily-closed conflict set) with clique number at
/// most degree_cap. Structures are not deduplicated up to isomorphism.
void enumerate_structures(int max_events, int degree_cap,
                          const std::function<void(const EventStructure&)>& visit);

/// Forest variant: every event takes at most one lower cover.
void enumerate_forests(int max_events, int degree_cap,
                       const std::function<void(const EventStructure&)>& visit);

}  // namespace eslab
