#include "braidmono/permutation.hpp"

#include <utility>

namespace braidmono {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<char> seen(n, 0);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[v])
      throw Error("permutation images are not a bijection on {1..n}");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p = identity(n);
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

int Permutation::moved_count() const {
  int moved = 0;
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i) ++moved;
  return moved;
}

bool Permutation::is_transposition() const { return moved_count() == 2; }

Permutation Permutation::then(const Permutation& second) const {
  if (size() != second.size())
    throw Error("cannot compose permutations of different sizes");
  std::vector<int> im(size());
  for (int i = 0; i < size(); ++i) im[i] = second.images_[images_[i]];
  Permutation out;
  out.images_ = std::move(im);  // composition of bijections; skip revalidation
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(size());
  for (int i = 0; i < size(); ++i) im[images_[i]] = i;
  Permutation out;
  out.images_ = std::move(im);
  return out;
}

std::uint64_t Permutation::pack() const {
  if (size() > 16) throw Error("permutation too large to pack");
  std::uint64_t key = 0;
  for (int i = 0; i < size(); ++i)
    key |= static_cast<std::uint64_t>(images_[i]) << (4 * i);
  return key;
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out(size());
  for (int i = 0; i < size(); ++i) out[i] = images_[i] + 1;
  return out;
}

std::string Permutation::to_string() const {
  std::string s;
  for (int i = 0; i < size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(images_[i] + 1);
  }
  return s;
}

}  // namespace braidmono
