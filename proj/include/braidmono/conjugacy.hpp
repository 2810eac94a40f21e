#pragma once

#include <optional>
#include <vector>

#include "braidmono/braid.hpp"

namespace braidmono {

// Deterministic breadth-first search for a word g with
//   g^{-1} words[i] g == targets[i]   for every i,
// over free-reduced words of length <= max_len in the letters
// +1, -1, +2, -2, ... Returns the first match in search order, or nullopt.
// Intended for small strand counts; the search space grows exponentially.
std::optional<BraidWord> simultaneous_conjugacy_search(
    const std::vector<BraidWord>& words, const std::vector<BraidWord>& targets,
    int max_len = 8);

}  // namespace braidmono
