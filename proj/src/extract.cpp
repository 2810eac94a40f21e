#include "braidmono/extract.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace braidmono {

namespace {

constexpr double kTimeResolution = 1e-9;
constexpr double kSepFactor = 1e-7;
constexpr int kAngleCandidates = 360;

double diameter(const std::vector<Complex>& points) {
  double d = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      d = std::max(d, std::abs(points[i] - points[j]));
  return d;
}

bool angle_is_generic(const std::vector<Complex>& points, double angle,
                      double sep_tol) {
  const Complex rot(std::cos(-angle), std::sin(-angle));
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (std::abs(((points[i] - points[j]) * rot).real()) < sep_tol)
        return false;
  return true;
}

struct Extractor {
  const FiberTrack& track;
  Complex rot;
  double sep_tol;
  int n;
  std::vector<int> ord;  // strand index occupying each slot
  std::vector<CrossingEvent> events;

  Extractor(const FiberTrack& t, double angle, double sep_override)
      : track(t),
        rot(std::cos(-angle), std::sin(-angle)),
        sep_tol(sep_override > 0.0 ? sep_override
                                   : kSepFactor * diameter(t.start_fiber())),
        n(t.strand_count()) {
    ord.resize(n);
    for (int k = 0; k < n; ++k) ord[k] = k;
  }

  double proj(Complex z) const { return (z * rot).real(); }
  double height(Complex z) const { return (z * rot).imag(); }

  std::vector<Complex> column(std::size_t i) const {
    return track.fiber_at(i);
  }

  std::vector<Complex> correct_all(double t, const std::vector<Complex>& lo,
                                   const std::vector<Complex>& hi) const {
    const Complex w = track.loop.sample(t);
    std::vector<Complex> out(n);
    for (int k = 0; k < n; ++k) {
      const Complex guess = 0.5 * (lo[k] + hi[k]);
      Complex z = guess;
      bool ok = false;
      for (int it = 0; it < track.options.newton_max_iters; ++it) {
        const auto [value, deriv] = track.polynomial.evaluate(z);
        const Complex residual = value - w;
        if (std::abs(residual) <= track.options.newton_tol) {
          ok = true;
          break;
        }
        if (std::abs(deriv) < 1e-300) break;
        z -= residual / deriv;
      }
      if (!ok)
        throw NewtonDivergence(
            "re-correction between samples failed during crossing refinement");
      out[k] = z;
    }
    return out;
  }

  // Bisection on the sign of the projection difference of the slot pair
  // (u, v); the pair is ordered at t_lo and crossed by t_hi.
  struct Refined {
    double time;
    std::vector<Complex> positions;
  };
  Refined refine(int u, int v, double t_lo, std::vector<Complex> z_lo,
                 double t_hi, std::vector<Complex> z_hi) const {
    while (t_hi - t_lo > kTimeResolution) {
      const double t_mid = 0.5 * (t_lo + t_hi);
      std::vector<Complex> z_mid = correct_all(t_mid, z_lo, z_hi);
      const double d = proj(z_mid[v]) - proj(z_mid[u]);
      if (d > 0.0) {
        t_lo = t_mid;
        z_lo = std::move(z_mid);
      } else {
        t_hi = t_mid;
        z_hi = std::move(z_mid);
      }
    }
    const double t_star = 0.5 * (t_lo + t_hi);
    return {t_star, correct_all(t_star, z_lo, z_hi)};
  }

  void emit(double time, int slot, int sign) {
    if (!events.empty()) {
      const CrossingEvent& prev = events.back();
      if (time - prev.time < kTimeResolution &&
          std::abs(prev.position - slot) <= 1)
        throw SimultaneousCrossing(
            "two crossings sharing a strand within the time resolution");
    }
    events.push_back({time, slot, sign});
  }

  void process_interval(double t_a, std::vector<Complex> z_a, double t_b,
                        const std::vector<Complex>& z_b) {
    while (true) {
      int crossed_slot = -1;
      for (int m = 0; m + 1 < n; ++m) {
        const int u = ord[m];
        const int v = ord[m + 1];
        const double d_a = proj(z_a[v]) - proj(z_a[u]);
        const double d_b = proj(z_b[v]) - proj(z_b[u]);
        if (d_b <= 0.0) {
          if (crossed_slot < 0) crossed_slot = m;
        } else if (std::abs(d_a) < sep_tol && std::abs(d_b) < sep_tol) {
          throw TangencyUnresolved(
              "projections of an adjacent pair linger within sep_tol "
              "without exchanging; projection angle is not generic here");
        }
      }
      if (crossed_slot < 0) return;

      // Refine every crossed pair and take the earliest exchange.
      double best_time = 0.0;
      int best_slot = -1;
      Refined best{0.0, {}};
      for (int m = 0; m + 1 < n; ++m) {
        const int u = ord[m];
        const int v = ord[m + 1];
        if (proj(z_b[v]) - proj(z_b[u]) > 0.0) continue;
        Refined r = refine(u, v, t_a, z_a, t_b, z_b);
        if (best_slot < 0 || r.time < best_time) {
          best_time = r.time;
          best_slot = m;
          best = std::move(r);
        }
      }

      const int u = ord[best_slot];
      const int v = ord[best_slot + 1];
      const int sign =
          height(best.positions[v]) > height(best.positions[u]) ? 1 : -1;
      emit(best_time, best_slot, sign);
      std::swap(ord[best_slot], ord[best_slot + 1]);
      t_a = best_time;
      z_a = std::move(best.positions);
    }
  }

  ExtractedWord run() {
    const std::vector<Complex> start = track.start_fiber();
    for (int k = 0; k + 1 < n; ++k) {
      const double gap = proj(start[k + 1]) - proj(start[k]);
      if (gap < 0.0)
        throw Error("track fiber is not ordered by the projection");
      if (gap < sep_tol)
        throw TangencyUnresolved(
            "start fiber projections closer than sep_tol");
    }
    for (std::size_t i = 0; i + 1 < track.times.size(); ++i)
      process_interval(track.times[i], column(i), track.times[i + 1],
                       column(i + 1));

    std::vector<int> letters;
    letters.reserve(events.size());
    for (const CrossingEvent& e : events)
      letters.push_back(e.sign * (e.position + 1));
    ExtractedWord out{BraidWord(n, std::move(letters)),
                      Permutation::identity(n), std::move(events)};
    out.permutation = permutation_of_word(out.word);
    if (!(out.permutation == end_permutation(track)))
      throw Error(
          "extracted word permutation disagrees with the tracked end "
          "permutation");
    return out;
  }
};

}  // namespace

double choose_projection_angle(const std::vector<Complex>& points,
                               std::uint64_t seed, int skip, double sep_tol) {
  if (points.size() < 2) return 0.0;
  const double diam = diameter(points);
  if (diam == 0.0)
    throw NoGenericAngle("all points coincide; no projection separates them");
  if (sep_tol <= 0.0) sep_tol = kSepFactor * diam;

  std::mt19937_64 rng(mix_seed(seed, 0xa7));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int remaining = skip;
  for (int i = 0; i < kAngleCandidates; ++i) {
    const double angle = i == 0 ? 0.0 : kTwoPi * unit(rng);
    if (!angle_is_generic(points, angle, sep_tol)) continue;
    if (remaining-- == 0) return angle;
  }
  throw NoGenericAngle("no candidate angle separates all projections");
}

ExtractedWord extract_word(const FiberTrack& track, double projection_angle,
                           double sep_tol) {
  Extractor extractor(track, projection_angle, sep_tol);
  return extractor.run();
}

BraidWord word_of_infinity(const FiberTrack& infinity_track,
                           double projection_angle, double sep_tol) {
  return extract_word(infinity_track, projection_angle, sep_tol).word;
}

}  // namespace braidmono
