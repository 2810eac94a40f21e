#pragma once

// Deliberately naive reference implementations used to cross-check the
// production tracker and extractor on small examples. Uniform time grid,
// Newton from the previous sample, adjacent-order bubble pass per step.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "braidmono/common.hpp"
#include "braidmono/loops.hpp"
#include "braidmono/poly.hpp"

namespace oracle {

inline std::vector<int> grid_word(const braidmono::Polynomial& p,
                                  const braidmono::Loop& loop,
                                  std::vector<braidmono::Complex> z,
                                  double angle, int steps = 100000) {
  using braidmono::Complex;
  const int n = static_cast<int>(z.size());
  const Complex rot(std::cos(-angle), std::sin(-angle));
  auto proj = [&](Complex v) { return (v * rot).real(); };
  auto height = [&](Complex v) { return (v * rot).imag(); };

  std::vector<int> ord(n);
  for (int k = 0; k < n; ++k) ord[k] = k;
  std::vector<int> letters;

  for (int i = 1; i <= steps; ++i) {
    const double t = static_cast<double>(i) / steps;
    const Complex w = loop.sample(t);
    for (int k = 0; k < n; ++k) {
      Complex zi = z[k];
      bool ok = false;
      for (int it = 0; it < 60; ++it) {
        const auto [value, deriv] = p.evaluate(zi);
        const Complex residual = value - w;
        if (std::abs(residual) < 1e-11) {
          ok = true;
          break;
        }
        zi -= residual / deriv;
      }
      if (!ok) throw std::runtime_error("grid oracle: newton failed");
      z[k] = zi;
    }
    bool swapped = true;
    while (swapped) {
      swapped = false;
      for (int m = 0; m + 1 < n; ++m) {
        const int u = ord[m];
        const int v = ord[m + 1];
        if (proj(z[u]) > proj(z[v])) {
          letters.push_back((height(z[v]) > height(z[u]) ? 1 : -1) * (m + 1));
          std::swap(ord[m], ord[m + 1]);
          swapped = true;
        }
      }
    }
  }
  return letters;
}

}  // namespace oracle
