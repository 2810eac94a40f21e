#pragma once

#include <utility>
#include <vector>

#include "braidmono/common.hpp"
#include "braidmono/errors.hpp"

namespace braidmono {

struct NonConvergence : Error {
  using Error::Error;
};
struct AmbiguousClustering : Error {
  using Error::Error;
};

// Monic polynomial over C, coefficients ascending, degree >= 2.
// Construction trims exact-zero leading coefficients and divides by the
// leading coefficient.
class Polynomial {
 public:
  explicit Polynomial(std::vector<Complex> ascending_coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  // P(z) and P'(z) in one synthetic-division pass.
  std::pair<Complex, Complex> evaluate(Complex z) const;
  Complex operator()(Complex z) const { return evaluate(z).first; }

  bool operator==(const Polynomial&) const = default;

 private:
  std::vector<Complex> coeffs_;
};

struct CriticalData {
  std::vector<Complex> critical_points;  // the n-1 roots of P', with multiplicity
  std::vector<Complex> branch_points;    // distinct critical values, sorted by (Re, Im)
  std::vector<int> multiplicities;       // critical points over each branch point
};

inline constexpr double kDefaultRootTol = 1e-12;

// Simultaneous (Aberth-Ehrlich) iteration with random-on-circle start and a
// short Newton polish. Works for any degree >= 1 with nonzero leading
// coefficient; multiple roots come back as clustered copies. The returned
// roots satisfy |P(r)| <= tol * (1 + sum |c_i|), else NonConvergence.
// Deterministic: the initial angles come from a fixed internal seed.
std::vector<Complex> roots_of_coefficients(std::vector<Complex> coeffs,
                                           double tol = kDefaultRootTol);

std::vector<Complex> all_roots(const Polynomial& p, double tol = kDefaultRootTol);

std::vector<Complex> derivative_coefficients(const Polynomial& p);
std::vector<Complex> critical_points(const Polynomial& p);

// Critical values clustered at cluster_tol; values within cluster_tol merge
// (transitively) into one branch point with summed multiplicity.
// cluster_tol <= 0 selects 1e-8 * (1 + max critical value magnitude).
// AmbiguousClustering signals a pairwise distance indistinguishable from the
// threshold at floating-point resolution.
CriticalData branch_locus(const Polynomial& p, double cluster_tol = 0.0);

// True iff the branch locus has exactly degree-1 distinct points, i.e. every
// critical point is simple with a distinct critical value.
bool is_generic(const Polynomial& p, double cluster_tol = 0.0);

// Strips the constant term; returns the shifted polynomial and the offset
// that was removed. Branch loci translate by exactly that offset.
std::pair<Polynomial, Complex> normalize(const Polynomial& p);

}  // namespace braidmono
