#include "braidmono/loops.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace braidmono {

namespace {

constexpr double kThetaMin = 5.0 * kPi / 180.0;
constexpr int kCircleCandidates = 500;
constexpr int kInteriorCandidates = 500;

Complex from_polar(double radius, double angle) {
  return radius * Complex(std::cos(angle), std::sin(angle));
}

double diameter(const std::vector<Complex>& points) {
  double d = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      d = std::max(d, std::abs(points[i] - points[j]));
  return d;
}

double angle_of(Complex v) {
  double a = std::arg(v);
  if (a < 0.0) a += kTwoPi;
  return a;
}

double point_segment_distance(Complex p, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  double t = ((p - a) * std::conj(ab)).real() / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

}  // namespace

Complex piece_start(const PathPiece& piece) {
  if (const auto* seg = std::get_if<Segment>(&piece)) return seg->from;
  const auto& arc = std::get<ArcPiece>(piece);
  return arc.center + from_polar(arc.radius, arc.start_angle);
}

Complex piece_end(const PathPiece& piece) {
  if (const auto* seg = std::get_if<Segment>(&piece)) return seg->to;
  const auto& arc = std::get<ArcPiece>(piece);
  return arc.center + from_polar(arc.radius, arc.start_angle + arc.sweep);
}

double piece_length(const PathPiece& piece) {
  if (const auto* seg = std::get_if<Segment>(&piece))
    return std::abs(seg->to - seg->from);
  const auto& arc = std::get<ArcPiece>(piece);
  return arc.radius * std::abs(arc.sweep);
}

Complex piece_point(const PathPiece& piece, double s) {
  if (const auto* seg = std::get_if<Segment>(&piece))
    return seg->from + s * (seg->to - seg->from);
  const auto& arc = std::get<ArcPiece>(piece);
  return arc.center + from_polar(arc.radius, arc.start_angle + s * arc.sweep);
}

double Loop::total_length() const {
  double len = 0.0;
  for (const auto& piece : pieces) len += piece_length(piece);
  return len;
}

Complex Loop::sample(double t) const {
  if (pieces.empty()) return basepoint;
  if (t <= 0.0) return piece_start(pieces.front());
  if (t >= 1.0) return piece_end(pieces.back());
  const double total = total_length();
  if (total == 0.0) return basepoint;
  double s = t * total;
  for (const auto& piece : pieces) {
    const double len = piece_length(piece);
    if (s <= len || &piece == &pieces.back()) {
      if (len == 0.0) return piece_start(piece);
      return piece_point(piece, std::min(s / len, 1.0));
    }
    s -= len;
  }
  return piece_end(pieces.back());
}

bool Loop::is_closed(double tol) const {
  if (pieces.empty()) return true;
  if (std::abs(piece_start(pieces.front()) - basepoint) > tol) return false;
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i)
    if (std::abs(piece_end(pieces[i]) - piece_start(pieces[i + 1])) > tol)
      return false;
  return std::abs(piece_end(pieces.back()) - basepoint) <= tol;
}

Loop branch_loop(Complex basepoint, Complex target, double epsilon) {
  if (epsilon <= 0.0) throw Error("branch loop radius must be positive");
  const Complex toward = basepoint - target;
  if (std::abs(toward) <= epsilon)
    throw ClearanceViolation("basepoint inside the encircling disk");
  const double entry_angle = std::arg(toward);
  const Complex entry = target + from_polar(epsilon, entry_angle);
  Loop loop;
  loop.basepoint = basepoint;
  loop.target = target;
  loop.pieces = {Segment{basepoint, entry},
                 ArcPiece{target, epsilon, entry_angle, kTwoPi},
                 Segment{entry, basepoint}};
  return loop;
}

Loop reversed(const Loop& loop) {
  Loop out;
  out.basepoint = loop.basepoint;
  out.target = loop.target;
  for (auto it = loop.pieces.rbegin(); it != loop.pieces.rend(); ++it) {
    if (const auto* seg = std::get_if<Segment>(&*it)) {
      out.pieces.push_back(Segment{seg->to, seg->from});
    } else {
      const auto& arc = std::get<ArcPiece>(*it);
      out.pieces.push_back(ArcPiece{arc.center, arc.radius,
                                    arc.start_angle + arc.sweep, -arc.sweep});
    }
  }
  return out;
}

Loop concat_loops(const Loop& a, const Loop& b) {
  if (std::abs(a.basepoint - b.basepoint) > 1e-12)
    throw Error("cannot concatenate loops with different basepoints");
  Loop out;
  out.basepoint = a.basepoint;
  out.pieces = a.pieces;
  out.pieces.insert(out.pieces.end(), b.pieces.begin(), b.pieces.end());
  return out;
}

double epsilon_for(const std::vector<Complex>& branch_points, std::size_t j,
                   Complex w0) {
  double nearest = std::abs(w0 - branch_points[j]);
  for (std::size_t k = 0; k < branch_points.size(); ++k) {
    if (k == j) continue;
    nearest = std::min(nearest, std::abs(branch_points[j] - branch_points[k]));
  }
  return nearest / 3.0;
}

double cut_ray_angle(const std::vector<Complex>& branch_points, Complex w0) {
  std::vector<double> angles;
  angles.reserve(branch_points.size());
  for (const Complex w : branch_points) angles.push_back(angle_of(w - w0));
  std::sort(angles.begin(), angles.end());
  if (angles.size() == 1) return std::fmod(angles[0] + kPi, kTwoPi);
  double best_gap = -1.0;
  double best_angle = 0.0;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const double next =
        i + 1 < angles.size() ? angles[i + 1] : angles[0] + kTwoPi;
    const double gap = next - angles[i];
    if (gap > best_gap) {
      best_gap = gap;
      best_angle = std::fmod(angles[i] + gap / 2.0, kTwoPi);
    }
  }
  return best_angle;
}

bool basepoint_admissible(const std::vector<Complex>& branch_points,
                          Complex w0) {
  const double clearance = 0.05 * std::max(diameter(branch_points), 1.0);
  for (const Complex w : branch_points)
    if (std::abs(w0 - w) < clearance) return false;
  std::vector<double> angles;
  angles.reserve(branch_points.size());
  for (const Complex w : branch_points) angles.push_back(angle_of(w - w0));
  std::sort(angles.begin(), angles.end());
  for (std::size_t i = 0; i + 1 < angles.size(); ++i)
    if (angles[i + 1] - angles[i] < kThetaMin) return false;
  if (angles.size() >= 2 &&
      angles[0] + kTwoPi - angles.back() < kThetaMin)
    return false;
  // Every connecting segment must clear the other branch disks, or the loop
  // system built from this basepoint would be rejected anyway.
  std::vector<double> eps(branch_points.size());
  for (std::size_t j = 0; j < branch_points.size(); ++j)
    eps[j] = epsilon_for(branch_points, j, w0);
  for (std::size_t j = 0; j < branch_points.size(); ++j) {
    const Complex toward = w0 - branch_points[j];
    const Complex entry =
        branch_points[j] + from_polar(eps[j], std::arg(toward));
    for (std::size_t k = 0; k < branch_points.size(); ++k) {
      if (k == j) continue;
      if (point_segment_distance(branch_points[k], w0, entry) < eps[k])
        return false;
    }
  }
  return true;
}

Complex choose_basepoint(const std::vector<Complex>& branch_points,
                         std::uint64_t seed) {
  if (branch_points.empty())
    throw Error("cannot choose a basepoint without branch points");
  if (basepoint_admissible(branch_points, Complex(0.0))) return Complex(0.0);

  Complex centroid = 0.0;
  for (const Complex w : branch_points) centroid += w;
  centroid /= static_cast<double>(branch_points.size());
  const double radius = std::max(2.0 * diameter(branch_points), 1.0);

  std::mt19937_64 rng(mix_seed(seed, 0x5b));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < kCircleCandidates; ++i) {
    const Complex candidate =
        centroid + from_polar(radius, kTwoPi * unit(rng));
    if (basepoint_admissible(branch_points, candidate)) return candidate;
  }
  for (int i = 0; i < kInteriorCandidates; ++i) {
    const Complex candidate =
        centroid + from_polar(radius * std::sqrt(unit(rng)), kTwoPi * unit(rng));
    if (basepoint_admissible(branch_points, candidate)) return candidate;
  }
  throw BasepointSearchFailed(
      "no admissible basepoint in " +
      std::to_string(kCircleCandidates + kInteriorCandidates + 1) +
      " candidates");
}

LoopSystem geometric_basis(const std::vector<Complex>& branch_points,
                           Complex w0) {
  if (branch_points.empty())
    throw Error("cannot build a loop system without branch points");
  if (!basepoint_admissible(branch_points, w0))
    throw ClearanceViolation("basepoint violates clearance or angle spacing");

  const double cut = cut_ray_angle(branch_points, w0);
  std::vector<std::size_t> order(branch_points.size());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double ka = std::fmod(angle_of(branch_points[a] - w0) - cut + kTwoPi,
                                kTwoPi);
    const double kb = std::fmod(angle_of(branch_points[b] - w0) - cut + kTwoPi,
                                kTwoPi);
    return ka < kb;
  });

  std::vector<double> eps(branch_points.size());
  for (std::size_t j = 0; j < branch_points.size(); ++j)
    eps[j] = epsilon_for(branch_points, j, w0);

  LoopSystem system;
  system.basepoint = w0;
  for (const std::size_t j : order) {
    Loop loop = branch_loop(w0, branch_points[j], eps[j]);
    const Complex entry = piece_end(loop.pieces.front());
    for (std::size_t k = 0; k < branch_points.size(); ++k) {
      if (k == j) continue;
      if (point_segment_distance(branch_points[k], w0, entry) < eps[k])
        throw ClearanceViolation(
            "connecting segment enters the disk around branch point " +
            std::to_string(k + 1));
    }
    system.loops.push_back(std::move(loop));
  }
  system.infinity = infinity_loop(branch_points, w0);
  return system;
}

Loop infinity_loop(const std::vector<Complex>& branch_points, Complex w0) {
  double max_dist = 0.0;
  for (const Complex w : branch_points)
    max_dist = std::max(max_dist, std::abs(w - w0));
  const double radius = 2.0 * max_dist + 1.0;
  const double cut = cut_ray_angle(branch_points, w0);
  const Complex far = w0 + from_polar(radius, cut);
  Loop loop;
  loop.basepoint = w0;
  loop.pieces = {Segment{w0, far}, ArcPiece{w0, radius, cut, kTwoPi},
                 Segment{far, w0}};
  return loop;
}

}  // namespace braidmono
