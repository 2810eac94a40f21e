#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidmono/errors.hpp"

namespace braidmono {

// Bijection on {1..n}. Stored 0-based internally, printed 1-based.
// Composition is left to right: (a.then(b))(i) = b(a(i)), matching the
// time-stacking order used for braid products.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);  // 0-based slots

  int size() const { return static_cast<int>(images_.size()); }
  int apply(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  bool is_transposition() const;
  int moved_count() const;

  Permutation then(const Permutation& second) const;
  Permutation inverse() const;

  // Unique integer key, valid for n <= 16; used by closure enumeration.
  std::uint64_t pack() const;

  std::vector<int> one_based() const;
  std::string to_string() const;  // "2 1 3"

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

}  // namespace braidmono
