#include "braidmono/tracker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace braidmono {

namespace {

double min_pairwise_distance(const std::vector<Complex>& points) {
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      d = std::min(d, std::abs(points[i] - points[j]));
  return d;
}

// Newton iteration for P(z) = w from an initial guess; empty optional on
// failure to converge.
std::optional<Complex> newton_solve(const Polynomial& p, Complex w,
                                    Complex guess, double tol, int max_iters,
                                    double step_limit) {
  Complex z = guess;
  for (int i = 0; i < max_iters; ++i) {
    const auto [value, deriv] = p.evaluate(z);
    const Complex residual = value - w;
    if (std::abs(residual) <= tol) return z;
    if (std::abs(deriv) < 1e-300) return std::nullopt;
    const Complex step = residual / deriv;
    if (std::abs(step) > step_limit) return std::nullopt;
    z -= step;
  }
  const auto [value, deriv] = p.evaluate(z);
  (void)deriv;
  if (std::abs(value - w) <= tol) return z;
  return std::nullopt;
}

enum class RejectReason { kNone, kDerivFloor, kNewton, kLargeStep, kAudit };

}  // namespace

std::vector<Complex> FiberTrack::fiber_at(std::size_t index) const {
  std::vector<Complex> out(strands.size());
  for (std::size_t k = 0; k < strands.size(); ++k) out[k] = strands[k][index];
  return out;
}

std::vector<Complex> fiber(const Polynomial& p, Complex w0,
                           double projection_angle, double collision_tol) {
  std::vector<Complex> coeffs = p.coeffs();
  coeffs[0] -= w0;
  std::vector<Complex> roots = roots_of_coefficients(coeffs);
  const double min_dist = min_pairwise_distance(roots);
  if (min_dist < collision_tol)
    throw DegenerateFiber("fiber points only " + std::to_string(min_dist) +
                          " apart; basepoint too close to a branch point");
  const Complex rot = Complex(std::cos(-projection_angle),
                              std::sin(-projection_angle));
  std::sort(roots.begin(), roots.end(), [&](Complex a, Complex b) {
    const Complex ra = a * rot;
    const Complex rb = b * rot;
    if (ra.real() != rb.real()) return ra.real() < rb.real();
    return ra.imag() < rb.imag();
  });
  return roots;
}

FiberTrack track_fiber(const Polynomial& p, const Loop& loop,
                       const std::vector<Complex>& fiber0,
                       const TrackOptions& opts) {
  if (fiber0.size() != static_cast<std::size_t>(p.degree()))
    throw Error("fiber size does not match polynomial degree");
  if (!loop.is_closed())
    throw Error("loop pieces do not chain into a closed path");

  const int n = static_cast<int>(fiber0.size());
  const double min_pair0 = min_pairwise_distance(fiber0);
  if (min_pair0 < opts.collision_tol)
    throw CollisionDetected("initial fiber points within collision tolerance");
  const double step_cap =
      opts.max_strand_step > 0.0 ? opts.max_strand_step : min_pair0 / 8.0;

  FiberTrack track{{}, {}, loop, p, opts};
  track.strands.assign(n, {});
  track.times.reserve(1024);

  // Polish the start fiber onto the exact basepoint value.
  std::vector<Complex> current(n);
  const Complex w_start = loop.sample(0.0);
  for (int k = 0; k < n; ++k) {
    auto z = newton_solve(p, w_start, fiber0[k], opts.newton_tol,
                          opts.newton_max_iters, 10.0 * step_cap + 1.0);
    if (!z)
      throw NewtonDivergence("start fiber point " + std::to_string(k + 1) +
                             " does not satisfy P(z) = w0");
    current[k] = *z;
  }
  track.times.push_back(0.0);
  for (int k = 0; k < n; ++k) track.strands[k].push_back(current[k]);

  double t = 0.0;
  double dt = std::min(opts.dt_init, opts.dt_max);
  int streak = 0;
  Complex w_current = w_start;
  std::vector<Complex> next(n);

  while (t < 1.0) {
    const double remaining = 1.0 - t;
    const double step_dt = std::min(dt, remaining);
    const double t_next = remaining <= dt ? 1.0 : t + step_dt;
    const Complex w_next = loop.sample(t_next);
    const Complex dw = w_next - w_current;

    RejectReason reject = RejectReason::kNone;
    for (int k = 0; k < n && reject == RejectReason::kNone; ++k) {
      const auto [value, deriv] = p.evaluate(current[k]);
      (void)value;
      if (std::abs(deriv) < opts.deriv_floor) {
        reject = RejectReason::kDerivFloor;
        break;
      }
      const Complex predicted = current[k] + dw / deriv;
      const auto corrected =
          newton_solve(p, w_next, predicted, opts.newton_tol,
                       opts.newton_max_iters, 4.0 * step_cap);
      if (!corrected) {
        reject = RejectReason::kNewton;
        break;
      }
      if (std::abs(*corrected - current[k]) > step_cap) {
        reject = RejectReason::kLargeStep;
        break;
      }
      next[k] = *corrected;
    }
    if (reject == RejectReason::kNone) {
      // A strand ending nearer to a sibling's previous position than to its
      // own previous position signals a possible exchange; retry smaller.
      for (int k = 0; k < n && reject == RejectReason::kNone; ++k) {
        const double own = std::abs(next[k] - current[k]);
        for (int j = 0; j < n; ++j) {
          if (j == k) continue;
          if (std::abs(next[k] - current[j]) < own) {
            reject = RejectReason::kAudit;
            break;
          }
        }
      }
    }

    if (reject != RejectReason::kNone) {
      dt = step_dt / 2.0;
      streak = 0;
      if (dt < opts.dt_min) {
        const double pair_now = min_pairwise_distance(current);
        const double collision_scale =
            std::max(100.0 * opts.collision_tol, 1e-3 * min_pair0);
        if (pair_now < collision_scale)
          throw CollisionDetected(
              "strand separation collapsed to " + std::to_string(pair_now) +
              "; loop passes too close to a ramification value");
        if (reject == RejectReason::kNewton)
          throw NewtonDivergence("corrector failed at dt below " +
                                 std::to_string(opts.dt_min));
        throw StepUnderflow("step size fell below dt_min = " +
                            std::to_string(opts.dt_min));
      }
      continue;
    }

    const double pair_next = min_pairwise_distance(next);
    if (pair_next < opts.collision_tol)
      throw CollisionDetected(
          "strands within collision tolerance at t = " + std::to_string(t_next));

    t = t_next;
    w_current = w_next;
    current = next;
    track.times.push_back(t);
    for (int k = 0; k < n; ++k) track.strands[k].push_back(current[k]);
    if (++streak >= opts.accept_streak) {
      dt = std::min(2.0 * dt, opts.dt_max);
      streak = 0;
    }
  }

  // The loop is closed, so the end fiber must be a permutation of the start.
  std::vector<char> used(n, 0);
  for (int k = 0; k < n; ++k) {
    int match = -1;
    for (int j = 0; j < n; ++j) {
      if (std::abs(current[k] - fiber0[j]) <= opts.match_tol) {
        if (match >= 0) {
          match = -1;
          break;
        }
        match = j;
      }
    }
    if (match < 0 || used[match])
      throw MatchAmbiguous("end fiber does not match the start fiber within " +
                           std::to_string(opts.match_tol));
    used[match] = 1;
  }
  return track;
}

Permutation end_permutation(const FiberTrack& track) {
  const int n = track.strand_count();
  const std::vector<Complex> start = track.start_fiber();
  const std::vector<Complex> end = track.end_fiber();
  std::vector<int> images(n, -1);
  std::vector<char> used(n, 0);
  for (int k = 0; k < n; ++k) {
    int best = -1;
    double best_dist = track.options.match_tol;
    for (int j = 0; j < n; ++j) {
      const double d = std::abs(end[k] - start[j]);
      if (d <= best_dist) {
        best_dist = d;
        best = j;
      }
    }
    if (best < 0 || used[best])
      throw MatchAmbiguous("strand " + std::to_string(k + 1) +
                           " has no unique start point within match_tol");
    used[best] = 1;
    images[k] = best;
  }
  return Permutation(std::move(images));
}

HalfTwistCount half_twist_count(const FiberTrack& track, int strand_a,
                                int strand_b) {
  const int n = track.strand_count();
  if (strand_a < 0 || strand_b < 0 || strand_a >= n || strand_b >= n ||
      strand_a == strand_b)
    throw Error("half twist count needs two distinct strand indices");

  const FiberTrack* active = &track;
  FiberTrack refined{{}, {}, track.loop, track.polynomial, track.options};
  double step_bound = track.options.max_strand_step;
  for (int attempt = 0; attempt < 6; ++attempt) {
    const auto& times = active->times;
    const auto& a = active->strands[strand_a];
    const auto& b = active->strands[strand_b];
    double total = 0.0;
    bool aliased = false;
    for (std::size_t i = 0; i + 1 < times.size(); ++i) {
      const Complex d0 = b[i] - a[i];
      const Complex d1 = b[i + 1] - a[i + 1];
      const double jump = std::arg(d1 / d0);
      if (std::abs(jump) >= kPi / 2.0) {
        aliased = true;
        break;
      }
      total += jump;
    }
    if (!aliased) {
      HalfTwistCount result;
      result.count = static_cast<int>(std::lround(total / kPi));
      result.residual = std::abs(total / kPi - result.count);
      return result;
    }
    // Re-run the whole lift with a tighter spatial bound and try again.
    TrackOptions opts = track.options;
    if (step_bound <= 0.0)
      step_bound = min_pairwise_distance(track.start_fiber()) / 8.0;
    step_bound /= 2.0;
    opts.max_strand_step = step_bound;
    refined = track_fiber(track.polynomial, track.loop, track.start_fiber(),
                          opts);
    active = &refined;
  }
  throw UnwrapAliasing(
      "relative argument jumps stayed above pi/2 after repeated refinement");
}

double max_track_residual(const FiberTrack& track) {
  double worst = 0.0;
  for (std::size_t i = 0; i < track.times.size(); ++i) {
    const Complex w = track.loop.sample(track.times[i]);
    for (int k = 0; k < track.strand_count(); ++k)
      worst = std::max(worst,
                       std::abs(track.polynomial(track.strands[k][i]) - w));
  }
  return worst;
}

}  // namespace braidmono
