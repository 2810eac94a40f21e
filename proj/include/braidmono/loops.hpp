#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "braidmono/common.hpp"
#include "braidmono/errors.hpp"

namespace braidmono {

struct BasepointSearchFailed : Error {
  using Error::Error;
};
struct ClearanceViolation : Error {
  using Error::Error;
};

struct Segment {
  Complex from;
  Complex to;
};

// Counterclockwise for sweep > 0.
struct ArcPiece {
  Complex center;
  double radius;
  double start_angle;
  double sweep;
};

using PathPiece = std::variant<Segment, ArcPiece>;

Complex piece_start(const PathPiece& piece);
Complex piece_end(const PathPiece& piece);
double piece_length(const PathPiece& piece);
Complex piece_point(const PathPiece& piece, double s);  // s in [0,1]

// Closed path based at basepoint; pieces chain end to start.
// Sampling is proportional to arclength, so sample(0) = sample(1) = basepoint.
struct Loop {
  Complex basepoint;
  std::vector<PathPiece> pieces;
  std::optional<Complex> target;  // encircled branch point, if any

  double total_length() const;
  Complex sample(double t) const;
  bool is_closed(double tol = 1e-9) const;
};

inline Complex sample_loop(const Loop& loop, double t) { return loop.sample(t); }

// Straight segment to distance epsilon from target, a full counterclockwise
// circle of radius epsilon, and the segment back.
Loop branch_loop(Complex basepoint, Complex target, double epsilon);

Loop reversed(const Loop& loop);
Loop concat_loops(const Loop& a, const Loop& b);

struct LoopSystem {
  Complex basepoint;
  std::vector<Loop> loops;  // one per branch point, in composition order
  Loop infinity;
};

// Disk radius for the encircling arc around branch point j as seen from w0:
// one third of the smaller of (nearest other branch point, distance to w0).
double epsilon_for(const std::vector<Complex>& branch_points, std::size_t j,
                   Complex w0);

// Bisector of the largest angular gap between branch-point directions from
// w0; the loop composition starts here and the loop to infinity leaves here.
double cut_ray_angle(const std::vector<Complex>& branch_points, Complex w0);

// True iff w0 keeps clearance from every branch point and the branch-point
// directions from w0 are pairwise separated by at least 5 degrees.
bool basepoint_admissible(const std::vector<Complex>& branch_points,
                          Complex w0);

// Deterministic candidate scan: the origin first, then seeded points on a
// circle of radius max(2 * diameter, 1) around the centroid, then seeded
// interior points. First admissible candidate wins.
Complex choose_basepoint(const std::vector<Complex>& branch_points,
                         std::uint64_t seed);

// One loop per branch point, ordered counterclockwise by direction starting
// from the cut ray, plus the loop to infinity. Traversing the loops in order
// is homotopic to the infinity loop, which makes the composed braid word
// match the word extracted along the infinity loop.
// ClearanceViolation if some connecting segment enters another branch
// point's epsilon disk.
LoopSystem geometric_basis(const std::vector<Complex>& branch_points,
                           Complex w0);

// Segment along the cut ray to radius R = 2 * max distance + 1, full
// counterclockwise circle, segment back.
Loop infinity_loop(const std::vector<Complex>& branch_points, Complex w0);

}  // namespace braidmono
