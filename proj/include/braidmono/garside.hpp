#pragma once

#include <string>
#include <vector>

#include "braidmono/braid.hpp"

namespace braidmono {

// Left-greedy normal form D^p s_1 ... s_k where D is the half twist and each
// s_i is a permutation braid (positive braid in which every pair of strands
// crosses at most once), stored as its permutation. Adjacent factors are
// left-weighted, no factor is trivial or D, so the form is canonical: two
// words are equal in the braid group iff their normal forms match.
struct GarsideNF {
  int strand_count = 2;
  int delta_power = 0;
  std::vector<Permutation> factors;

  bool operator==(const GarsideNF&) const = default;
  std::string to_string() const;  // "D^p | 2 1 3 | ..."
};

GarsideNF garside_nf(const BraidWord& w);

// Canonical equality test; raises StrandCountMismatch on different n.
bool equal(const BraidWord& a, const BraidWord& b);

}  // namespace braidmono
