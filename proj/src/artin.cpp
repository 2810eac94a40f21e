#include "braidmono/artin.hpp"

#include <cstdlib>
#include <vector>

namespace braidmono {

namespace {

// Freely reduced word in F_n; symbol +g is x_g, -g its inverse (g is 1-based).
using FreeWord = std::vector<int>;

void append_symbol(FreeWord& w, int s) {
  if (!w.empty() && w.back() == -s)
    w.pop_back();
  else
    w.push_back(s);
}

void append_word(FreeWord& w, const FreeWord& v, bool invert) {
  if (!invert) {
    for (int s : v) append_symbol(w, s);
  } else {
    for (auto it = v.rbegin(); it != v.rend(); ++it) append_symbol(w, -*it);
  }
}

}  // namespace

bool artin_action_trivial(const BraidWord& w) {
  const int n = w.strand_count();
  std::vector<FreeWord> image(n);
  for (int i = 0; i < n; ++i) image[i] = {i + 1};

  for (int letter : w.letters()) {
    const int m = std::abs(letter);
    FreeWord xm, xm1;  // substitutions for x_m and x_{m+1}
    if (letter > 0) {
      xm = {m, m + 1, -m};
      xm1 = {m};
    } else {
      xm = {m + 1};
      xm1 = {-(m + 1), m, m + 1};
    }
    std::size_t total = 0;
    for (int i = 0; i < n; ++i) {
      FreeWord out;
      out.reserve(image[i].size() + 2);
      for (int s : image[i]) {
        const int g = std::abs(s);
        const bool inv = s < 0;
        if (g == m)
          append_word(out, xm, inv);
        else if (g == m + 1)
          append_word(out, xm1, inv);
        else
          append_symbol(out, s);
      }
      total += out.size();
      image[i] = std::move(out);
    }
    // Images grow at most geometrically; this guard is a resource limit, not
    // an expected path.
    if (total > (std::size_t{1} << 23))
      throw Error("free-group image exceeded size limit");
  }

  for (int i = 0; i < n; ++i)
    if (image[i].size() != 1 || image[i][0] != i + 1) return false;
  return true;
}

}  // namespace braidmono
