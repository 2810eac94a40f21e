#pragma once

#include <cstdint>
#include <vector>

#include "braidmono/braid.hpp"
#include "braidmono/tracker.hpp"

namespace braidmono {

struct NoGenericAngle : Error {
  using Error::Error;
};
struct TangencyUnresolved : Error {
  using Error::Error;
};
struct SimultaneousCrossing : Error {
  using Error::Error;
};

struct CrossingEvent {
  double time = 0.0;
  int position = 0;  // 0-based slot pair (position, position+1)
  int sign = 0;      // +1 counterclockwise exchange, -1 clockwise
};

// Projection direction for strand ordering: strands are ranked by
// Re(e^{-i angle} z). The angle is generic for the given points when all
// projections are pairwise separated by at least sep_tol, which defaults
// (sep_tol = 0) to 1e-7 * diameter. Candidates: 0 first, then seeded
// uniform angles; the first `skip` valid candidates are passed over (used
// to retry after an interior tangency).
double choose_projection_angle(const std::vector<Complex>& points,
                               std::uint64_t seed, int skip = 0,
                               double sep_tol = 0.0);

struct ExtractedWord {
  BraidWord word;
  Permutation permutation;
  std::vector<CrossingEvent> events;
};

// Reads the braid word off a track: a letter for every change of adjacent
// projection order, refined by bisection (with Newton re-correction on the
// true curve) to 1e-9 in time. The letter at slot m is +m when the strand
// arriving from the larger projection has the larger Im(e^{-i angle} z) at
// the crossing, which is the counterclockwise (positive generator) exchange.
// The word's permutation always equals end_permutation of the track.
//   TangencyUnresolved   projections linger within sep_tol without swapping
//   SimultaneousCrossing two overlapping slot pairs cross within 1e-9
ExtractedWord extract_word(const FiberTrack& track, double projection_angle,
                           double sep_tol = 0.0);

// Word along a loop to infinity; by construction it equals the composition
// of the branch-loop words of the same system up to braid isotopy.
BraidWord word_of_infinity(const FiberTrack& infinity_track,
                           double projection_angle, double sep_tol = 0.0);

}  // namespace braidmono
