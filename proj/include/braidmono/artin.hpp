#pragma once

#include "braidmono/braid.hpp"

namespace braidmono {

// Independent word-problem oracle via the faithful action on the free group
// F_n with basis x_1..x_n:
//   a_m: x_m -> x_m x_{m+1} x_m^{-1},  x_{m+1} -> x_m,  others fixed.
// Returns true iff the word acts as the identity automorphism, which holds
// iff the word is trivial in the braid group.
bool artin_action_trivial(const BraidWord& w);

}  // namespace braidmono
