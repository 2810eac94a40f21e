#pragma once

#include <vector>

#include "braidmono/errors.hpp"
#include "braidmono/permutation.hpp"

namespace braidmono {

struct CapExceeded : Error {
  using Error::Error;
};

struct PermGroupReport {
  long order = 0;
  bool is_full_symmetric = false;
  bool is_cyclic = false;      // some element generates the whole group
  bool is_transitive = false;  // single orbit on {1..n}
  long element_count_cap = 0;  // enumeration cap that was in force
};

// Dense enumeration of the group generated by the given permutations.
// Raises CapExceeded when the element count would pass cap.
PermGroupReport closure(const std::vector<Permutation>& generators,
                        long cap = 50000);

}  // namespace braidmono
