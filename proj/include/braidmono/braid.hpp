#pragma once

#include <string>
#include <vector>

#include "braidmono/errors.hpp"
#include "braidmono/permutation.hpp"

namespace braidmono {

struct StrandCountMismatch : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};

// Word in the standard generators of the braid group on strand_count strands.
// Letter +m is the generator a_m (1 <= m <= strand_count-1), -m its inverse.
// Words multiply left to right: concat(u, v) is u happening first in time.
class BraidWord {
 public:
  explicit BraidWord(int strand_count, std::vector<int> letters = {});

  int strand_count() const { return strand_count_; }
  const std::vector<int>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  bool operator==(const BraidWord&) const = default;

 private:
  int strand_count_;
  std::vector<int> letters_;
};

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& w);
BraidWord power(const BraidWord& w, int k);

// Cancels adjacent inverse pairs until none remain.
BraidWord free_reduce(const BraidWord& w);

// Underlying permutation: position of a strand at the start of the word
// maps to its position at the end.
Permutation permutation_of_word(const BraidWord& w);

// Sum of letter signs; a braid group invariant.
int exponent_sum(const BraidWord& w);

// Half-twist generators along the fan of straight chords joining a central
// puncture to each of the others, expressed in the chain generators:
//   fan_generator(n, 1) = a_1
//   fan_generator(n, j) = (a_{j-1} ... a_1)^{-1} a_j (a_{j-1} ... a_1)
BraidWord fan_generator(int strand_count, int j);

// Half twist on all strands: (a_1)(a_2 a_1)...(a_{n-1} ... a_1).
BraidWord delta(int strand_count);

// delta squared; generates the center for n >= 3.
BraidWord full_twist(int strand_count);

std::string to_string(const BraidWord& w);         // "-1 2 1"
std::string to_pretty_string(const BraidWord& w);  // "a1^-1 a2 a1"

// Accepts both text forms above; whitespace separated.
BraidWord parse_word(const std::string& text, int strand_count);

}  // namespace braidmono
