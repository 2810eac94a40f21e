#include "braidmono/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace braidmono {

namespace {

constexpr int kAberthMaxIters = 200;
constexpr int kPolishSteps = 3;
// Fixed seed: root finding is part of deterministic operations.
constexpr std::uint64_t kRootSeed = 0x6b8b4567327b23c6ULL;

std::pair<Complex, Complex> horner(const std::vector<Complex>& coeffs, Complex z) {
  Complex p = coeffs.back();
  Complex dp = 0.0;
  for (int i = static_cast<int>(coeffs.size()) - 2; i >= 0; --i) {
    dp = dp * z + p;
    p = p * z + coeffs[i];
  }
  return {p, dp};
}

}  // namespace

Polynomial::Polynomial(std::vector<Complex> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back() == Complex(0.0))
    coeffs_.pop_back();
  if (coeffs_.size() < 3)
    throw Error("polynomial degree must be at least 2");
  const Complex lead = coeffs_.back();
  if (lead != Complex(1.0)) {
    for (auto& c : coeffs_) c /= lead;
    coeffs_.back() = Complex(1.0);
  }
}

std::pair<Complex, Complex> Polynomial::evaluate(Complex z) const {
  return horner(coeffs_, z);
}

std::vector<Complex> roots_of_coefficients(std::vector<Complex> coeffs,
                                           double tol) {
  while (coeffs.size() > 1 && coeffs.back() == Complex(0.0))
    coeffs.pop_back();
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (n < 1) throw Error("cannot take roots of a constant polynomial");
  const Complex lead = coeffs.back();
  for (auto& c : coeffs) c /= lead;
  coeffs.back() = Complex(1.0);
  if (n == 1) return {-coeffs[0]};

  double coeff_sum = 0.0;
  double coeff_max = 0.0;
  for (int i = 0; i <= n; ++i) {
    coeff_sum += std::abs(coeffs[i]);
    if (i < n) coeff_max = std::max(coeff_max, std::abs(coeffs[i]));
  }
  const double residual_bound = tol * (1.0 + coeff_sum);

  const double radius = 1.0 + coeff_max;
  std::mt19937_64 rng(kRootSeed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Complex> z(n);
  for (int k = 0; k < n; ++k) {
    const double angle = kTwoPi * (k + unit(rng)) / n;
    z[k] = radius * Complex(std::cos(angle), std::sin(angle));
  }

  std::vector<Complex> pz(n), dpz(n), znew(n);
  for (int iter = 0; iter < kAberthMaxIters; ++iter) {
    bool residual_ok = true;
    for (int k = 0; k < n; ++k) {
      std::tie(pz[k], dpz[k]) = horner(coeffs, z[k]);
      if (std::abs(pz[k]) > 0.01 * residual_bound) residual_ok = false;
    }
    if (residual_ok) break;

    double max_rel_step = 0.0;
    for (int k = 0; k < n; ++k) {
      if (std::abs(dpz[k]) < 1e-300) {
        // Sitting on a critical point; nudge deterministically and retry.
        znew[k] = z[k] + 1e-8 * (1.0 + std::abs(z[k]));
        max_rel_step = 1.0;
        continue;
      }
      const Complex newton = pz[k] / dpz[k];
      Complex repulsion = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        Complex diff = z[k] - z[j];
        if (std::abs(diff) < 1e-300) diff = Complex(1e-12);
        repulsion += 1.0 / diff;
      }
      const Complex denom = 1.0 - newton * repulsion;
      const Complex step =
          std::abs(denom) < 1e-300 ? newton : newton / denom;
      znew[k] = z[k] - step;
      max_rel_step =
          std::max(max_rel_step, std::abs(step) / (1.0 + std::abs(z[k])));
    }
    z.swap(znew);
    if (max_rel_step < 1e-14) break;
  }

  for (int k = 0; k < n; ++k) {
    for (int s = 0; s < kPolishSteps; ++s) {
      const auto [p, dp] = horner(coeffs, z[k]);
      if (std::abs(dp) < 1e-300) break;
      z[k] -= p / dp;
    }
  }

  for (int k = 0; k < n; ++k) {
    const double residual = std::abs(horner(coeffs, z[k]).first);
    if (!(residual <= residual_bound))
      throw NonConvergence("root residual " + std::to_string(residual) +
                           " exceeds bound " + std::to_string(residual_bound));
  }
  return z;
}

std::vector<Complex> all_roots(const Polynomial& p, double tol) {
  return roots_of_coefficients(p.coeffs(), tol);
}

std::vector<Complex> derivative_coefficients(const Polynomial& p) {
  std::vector<Complex> d(p.coeffs().size() - 1);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i)
    d[i - 1] = static_cast<double>(i) * p.coeffs()[i];
  return d;
}

std::vector<Complex> critical_points(const Polynomial& p) {
  return roots_of_coefficients(derivative_coefficients(p));
}

CriticalData branch_locus(const Polynomial& p, double cluster_tol) {
  CriticalData data;
  data.critical_points = critical_points(p);
  std::vector<Complex> values;
  values.reserve(data.critical_points.size());
  double max_mag = 0.0;
  for (const Complex c : data.critical_points) {
    values.push_back(p(c));
    max_mag = std::max(max_mag, std::abs(values.back()));
  }
  const double tol =
      cluster_tol > 0.0 ? cluster_tol : 1e-8 * (1.0 + max_mag);

  const int m = static_cast<int>(values.size());
  const double eps_window = 10.0 * std::numeric_limits<double>::epsilon() *
                            std::max(1.0, max_mag);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const double d = std::abs(values[i] - values[j]);
      if (std::abs(d - tol) < eps_window)
        throw AmbiguousClustering(
            "critical value spacing indistinguishable from cluster "
            "tolerance " +
            std::to_string(tol));
    }

  // Transitive merge of values within tol.
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (std::abs(values[i] - values[j]) <= tol) {
        const int a = find(i), b = find(j);
        if (a != b) parent[a] = b;
      }

  struct Cluster {
    Complex sum = 0.0;
    int count = 0;
  };
  std::vector<int> root_of(m);
  std::vector<int> cluster_index(m, -1);
  std::vector<Cluster> clusters;
  for (int i = 0; i < m; ++i) {
    root_of[i] = find(i);
    if (cluster_index[root_of[i]] < 0) {
      cluster_index[root_of[i]] = static_cast<int>(clusters.size());
      clusters.push_back({});
    }
    auto& cl = clusters[cluster_index[root_of[i]]];
    cl.sum += values[i];
    cl.count += 1;
  }

  std::vector<std::pair<Complex, int>> reps;
  reps.reserve(clusters.size());
  for (const auto& cl : clusters)
    reps.emplace_back(cl.sum / static_cast<double>(cl.count), cl.count);
  std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) {
    if (a.first.real() != b.first.real())
      return a.first.real() < b.first.real();
    return a.first.imag() < b.first.imag();
  });

  for (const auto& [rep, count] : reps) {
    data.branch_points.push_back(rep);
    data.multiplicities.push_back(count);
  }
  return data;
}

bool is_generic(const Polynomial& p, double cluster_tol) {
  return static_cast<int>(branch_locus(p, cluster_tol).branch_points.size()) ==
         p.degree() - 1;
}

std::pair<Polynomial, Complex> normalize(const Polynomial& p) {
  std::vector<Complex> coeffs = p.coeffs();
  const Complex offset = coeffs[0];
  coeffs[0] = Complex(0.0);
  return {Polynomial(std::move(coeffs)), offset};
}

}  // namespace braidmono
