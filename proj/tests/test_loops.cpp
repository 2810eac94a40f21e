#include <cmath>

#include "doctest.h"

#include "braidmono/loops.hpp"

using namespace braidmono;

namespace {

const std::vector<Complex> kCubicBranch = {Complex(-2.0), Complex(2.0)};

}  // namespace

TEST_CASE("segment and arc sampling") {
  Loop loop;
  loop.basepoint = Complex(0.0);
  loop.pieces.push_back(Segment{Complex(0.0), Complex(2.0)});
  loop.pieces.push_back(ArcPiece{Complex(3.0), 1.0, kPi, -kTwoPi});
  loop.pieces.push_back(Segment{Complex(2.0), Complex(0.0)});
  CHECK(loop.is_closed());
  CHECK(std::abs(loop.sample(0.0)) < 1e-15);
  CHECK(std::abs(loop.sample(1.0)) < 1e-15);
  const double seg_frac = 2.0 / loop.total_length();
  CHECK(std::abs(loop.sample(0.5 * seg_frac) - Complex(1.0)) < 1e-12);
  // halfway around the clockwise circle: angle pi - pi = 0, point 4
  CHECK(std::abs(loop.sample(seg_frac + 0.5 * kTwoPi / loop.total_length()) -
                 Complex(4.0)) < 1e-12);
}

TEST_CASE("branch loop encircles its target once") {
  const Loop loop = branch_loop(Complex(0.0), Complex(2.0), 0.5);
  CHECK(loop.is_closed());
  REQUIRE(loop.target.has_value());
  CHECK(*loop.target == Complex(2.0));
  // winding of w - 2 along the loop is one full turn
  double winding = 0.0;
  Complex prev = loop.sample(0.0) - Complex(2.0);
  const int steps = 2000;
  for (int i = 1; i <= steps; ++i) {
    const Complex cur = loop.sample(static_cast<double>(i) / steps) -
                        Complex(2.0);
    winding += std::arg(cur / prev);
    prev = cur;
  }
  CHECK(std::abs(winding - kTwoPi) < 1e-6);
  CHECK_THROWS_AS(branch_loop(Complex(1.9), Complex(2.0), 0.5),
                  ClearanceViolation);
}

TEST_CASE("reversed and concatenated loops") {
  const Loop loop = branch_loop(Complex(0.0), Complex(2.0), 0.5);
  const Loop back = reversed(loop);
  CHECK(back.is_closed());
  CHECK(std::abs(back.sample(0.25) - loop.sample(0.75)) < 1e-9);
  const Loop both = concat_loops(loop, back);
  CHECK(both.is_closed());
  CHECK(std::abs(both.total_length() - 2.0 * loop.total_length()) < 1e-9);
}

TEST_CASE("epsilon keeps disks apart") {
  // one third of min(nearest other branch point, distance to basepoint)
  CHECK(epsilon_for(kCubicBranch, 0, Complex(0.0)) ==
        doctest::Approx(2.0 / 3.0));
  CHECK(epsilon_for({Complex(0.0), Complex(10.0)}, 0, Complex(-1.0)) ==
        doctest::Approx(1.0 / 3.0));
}

TEST_CASE("cut ray bisects the largest angular gap") {
  // directions pi and 0 leave two gaps of pi; the first maximum starts at 0
  CHECK(cut_ray_angle(kCubicBranch, Complex(0.0)) ==
        doctest::Approx(kPi / 2.0));
  // single branch point: cut ray points away from it
  CHECK(cut_ray_angle({Complex(1.0)}, Complex(0.0)) == doctest::Approx(kPi));
}

TEST_CASE("basepoint admissibility") {
  CHECK(basepoint_admissible(kCubicBranch, Complex(0.0)));
  // too close to a branch point
  CHECK_FALSE(basepoint_admissible(kCubicBranch, Complex(1.95)));
  // directions separated by well under 5 degrees
  CHECK_FALSE(
      basepoint_admissible({Complex(1.0), Complex(1.0, 0.01)}, Complex(0.0)));
}

TEST_CASE("choose_basepoint prefers the origin when admissible") {
  CHECK(choose_basepoint(kCubicBranch, 1) == Complex(0.0));
  // origin blocked by a branch point next to it
  const std::vector<Complex> blocked = {Complex(-2.0), Complex(2.0),
                                        Complex(0.0, 1e-7)};
  const Complex w0 = choose_basepoint(blocked, 1);
  CHECK(w0 != Complex(0.0));
  CHECK(basepoint_admissible(blocked, w0));
  // deterministic in the seed
  CHECK(choose_basepoint(blocked, 1) == w0);
}

TEST_CASE("geometric basis orders loops counterclockwise from the cut ray") {
  const LoopSystem system = geometric_basis(kCubicBranch, Complex(0.0));
  REQUIRE(system.loops.size() == 2);
  // cut ray is pi/2; -2 sits at angle pi (offset pi/2), +2 at 0 (offset 3pi/2)
  CHECK(system.loops[0].target == Complex(-2.0));
  CHECK(system.loops[1].target == Complex(2.0));
  for (const Loop& loop : system.loops) {
    CHECK(loop.is_closed());
    CHECK(loop.basepoint == Complex(0.0));
  }
  CHECK(system.infinity.is_closed());
  CHECK_THROWS_AS(geometric_basis(kCubicBranch, Complex(1.95)),
                  ClearanceViolation);
}

TEST_CASE("infinity loop radius clears every branch point") {
  const Loop loop = infinity_loop(kCubicBranch, Complex(0.0));
  // R = 2 * max distance + 1 = 5, centered at the basepoint
  double max_radius = 0.0;
  for (int i = 0; i <= 1000; ++i)
    max_radius =
        std::max(max_radius, std::abs(loop.sample(i / 1000.0)));
  CHECK(max_radius == doctest::Approx(5.0));
}
