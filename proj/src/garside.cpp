#include "braidmono/garside.hpp"

#include <cstdlib>
#include <utility>

namespace braidmono {

namespace {

using Images = std::vector<int>;

bool is_identity(const Images& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

bool is_delta(const Images& p) {
  const int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i)
    if (p[i] != n - 1 - i) return false;
  return true;
}

int pos_of_value(const Images& p, int v) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] == v) return static_cast<int>(i);
  return -1;
}

// Conjugation by D: maps a_m to a_{n-m}; on permutation braids this is
// f(i) = delta(p(delta(i))).
Images flip(const Images& p) {
  const int n = static_cast<int>(p.size());
  Images f(n);
  for (int i = 0; i < n; ++i) f[i] = n - 1 - p[n - 1 - i];
  return f;
}

// True iff p * a_m is still a permutation braid, i.e. the strands ending at
// slots m, m+1 have not crossed yet (m is not in the finishing set of p).
bool can_append(const Images& p, int m) {
  return pos_of_value(p, m) < pos_of_value(p, m + 1);
}

// p <- p * a_m (positions m, m+1 crossed at the end of p).
void append_generator(Images& p, int m) {
  const int pa = pos_of_value(p, m);
  const int pb = pos_of_value(p, m + 1);
  p[pa] = m + 1;
  p[pb] = m;
}

// p <- a_m^{-1} * p (strip one crossing from the front; only valid when m is
// in the starting set of p).
void strip_front_generator(Images& p, int m) { std::swap(p[m], p[m + 1]); }

// Smallest m in S(B) \ F(A), or -1 when the pair (A, B) is left-weighted.
// S(B) = descents of B, F(A) = descents of A^{-1}.
int slide_index(const Images& a, const Images& b) {
  const int n = static_cast<int>(a.size());
  for (int m = 0; m + 1 < n; ++m)
    if (b[m] > b[m + 1] && can_append(a, m)) return m;
  return -1;
}

struct NFBuilder {
  int n;
  int power = 0;
  std::vector<Images> factors;

  explicit NFBuilder(int strand_count) : n(strand_count) {}

  void push_letter(int letter) {
    const int m = std::abs(letter) - 1;  // 0-based slot pair (m, m+1)
    if (letter > 0) {
      if (!factors.empty() && can_append(factors.back(), m)) {
        append_generator(factors.back(), m);
        return;
      }
      Images t(n);
      for (int i = 0; i < n; ++i) t[i] = i;
      std::swap(t[m], t[m + 1]);
      factors.push_back(std::move(t));
    } else {
      // a_m^{-1} = D^{-1} r with r = D a_m^{-1}; moving D^{-1} to the front
      // conjugates every stored factor by D.
      --power;
      for (auto& f : factors) f = flip(f);
      Images r(n);
      for (int i = 0; i < n; ++i) {
        const int v = n - 1 - i;
        r[i] = v == m ? m + 1 : (v == m + 1 ? m : v);
      }
      factors.push_back(std::move(r));
    }
  }

  void normalize() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < factors.size();) {
        if (is_identity(factors[i])) {
          factors.erase(factors.begin() + static_cast<long>(i));
          changed = true;
        } else if (is_delta(factors[i])) {
          for (std::size_t j = 0; j < i; ++j) factors[j] = flip(factors[j]);
          factors.erase(factors.begin() + static_cast<long>(i));
          ++power;
          changed = true;
          i = 0;
        } else {
          ++i;
        }
      }
      for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
        Images& a = factors[i];
        Images& b = factors[i + 1];
        int m;
        while (!is_identity(b) && (m = slide_index(a, b)) >= 0) {
          append_generator(a, m);
          strip_front_generator(b, m);
          changed = true;
        }
      }
    }
  }
};

}  // namespace

std::string GarsideNF::to_string() const {
  std::string s = "D^" + std::to_string(delta_power);
  for (const auto& f : factors) s += " | " + f.to_string();
  return s;
}

GarsideNF garside_nf(const BraidWord& w) {
  NFBuilder builder(w.strand_count());
  for (int letter : w.letters()) builder.push_letter(letter);
  builder.normalize();
  GarsideNF nf;
  nf.strand_count = w.strand_count();
  nf.delta_power = builder.power;
  nf.factors.reserve(builder.factors.size());
  for (auto& f : builder.factors) nf.factors.emplace_back(std::move(f));
  return nf;
}

bool equal(const BraidWord& a, const BraidWord& b) {
  if (a.strand_count() != b.strand_count())
    throw StrandCountMismatch("cannot compare words on " +
                              std::to_string(a.strand_count()) + " and " +
                              std::to_string(b.strand_count()) + " strands");
  return garside_nf(a) == garside_nf(b);
}

}  // namespace braidmono
