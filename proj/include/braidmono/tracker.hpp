#pragma once

#include <vector>

#include "braidmono/loops.hpp"
#include "braidmono/permutation.hpp"
#include "braidmono/poly.hpp"

namespace braidmono {

struct DegenerateFiber : Error {
  using Error::Error;
};
struct CollisionDetected : Error {
  using Error::Error;
};
struct StepUnderflow : Error {
  using Error::Error;
};
struct NewtonDivergence : Error {
  using Error::Error;
};
struct MatchAmbiguous : Error {
  using Error::Error;
};
struct UnwrapAliasing : Error {
  using Error::Error;
};

struct TrackOptions {
  double newton_tol = 1e-10;    // corrector residual target |P(z) - w|
  double collision_tol = 1e-6;  // minimum allowed pairwise strand distance
  double match_tol = 1e-6;      // end-fiber to start-fiber matching radius
  double dt_init = 1e-3;
  double dt_min = 1e-9;
  double dt_max = 0.05;
  // 0 selects (min initial pairwise fiber distance) / 8.
  double max_strand_step = 0.0;
  double deriv_floor = 1e-12;  // |P'| below this rejects the predictor step
  int accept_streak = 4;       // accepted steps before dt doubles
  int newton_max_iters = 30;
};

// Joint lift of all fiber points along a loop. One shared adaptive time
// grid; strand k's samples are strands[k][i] at times[i]. Strand identity is
// kept by continuation: every strand is corrected from its own prediction,
// never re-matched globally, and a nearest-neighbor audit rejects steps
// where a strand lands closer to a sibling's previous position than to its
// own (the signature of a silent exchange).
struct FiberTrack {
  std::vector<double> times;
  std::vector<std::vector<Complex>> strands;
  Loop loop;
  Polynomial polynomial;
  TrackOptions options;

  int strand_count() const { return static_cast<int>(strands.size()); }
  std::vector<Complex> fiber_at(std::size_t index) const;
  std::vector<Complex> start_fiber() const { return fiber_at(0); }
  std::vector<Complex> end_fiber() const { return fiber_at(times.size() - 1); }
};

// Roots of P(z) - w0, sorted by increasing Re(e^{-i angle} z).
// DegenerateFiber if two roots are within collision_tol.
std::vector<Complex> fiber(const Polynomial& p, Complex w0,
                           double projection_angle,
                           double collision_tol = 1e-6);

// Predictor-corrector continuation of fiber0 along the loop: Euler predictor
// dz = dw / P'(z), Newton corrector onto P(z) = w(t). dt halves on any
// rejection and doubles after a run of accepted steps.
//   CollisionDetected  strands within collision_tol (loop near ramification)
//   StepUnderflow      dt < dt_min with healthy geometry
//   NewtonDivergence   corrector kept failing down to dt_min
FiberTrack track_fiber(const Polynomial& p, const Loop& loop,
                       const std::vector<Complex>& fiber0,
                       const TrackOptions& opts = {});

// pi(k) = index of the start point the end of strand k returns to.
// MatchAmbiguous if that assignment is not a bijection within match_tol.
Permutation end_permutation(const FiberTrack& track);

struct HalfTwistCount {
  int count = 0;       // net half turns of strand_b around strand_a
  double residual = 0.0;  // |unwrapped angle / pi - count|
};

// Unwraps arg(strand_b - strand_a) along the track. Per-step jumps must stay
// under pi/2; otherwise the track is re-run with a halved step bound, and
// UnwrapAliasing is raised if refinement cannot settle it.
HalfTwistCount half_twist_count(const FiberTrack& track, int strand_a,
                                int strand_b);

// Largest corrector residual |P(z) - w(t)| over all samples.
double max_track_residual(const FiberTrack& track);

}  // namespace braidmono
