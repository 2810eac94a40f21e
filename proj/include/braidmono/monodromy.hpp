#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "braidmono/braid.hpp"
#include "braidmono/common.hpp"
#include "braidmono/loops.hpp"
#include "braidmono/perm_group.hpp"
#include "braidmono/permutation.hpp"
#include "braidmono/poly.hpp"
#include "braidmono/tracker.hpp"

namespace braidmono {

struct EngineOptions {
  double cluster_tol = 0.0;  // 0 selects the automatic scale
  double sep_tol = 0.0;      // projection separation; 0 selects the automatic scale
  TrackOptions track{};
  // NaN lets the engine pick a generic projection angle, retrying with the
  // next candidate when extraction reports a tangency. A finite value pins
  // the angle and disables retries.
  double projection_angle = std::numeric_limits<double>::quiet_NaN();
  bool parallel = false;
  int angle_retries = 8;
  long closure_cap = 50000;
  int fan_search_max_len = 8;
};

struct MonodromyEntry {
  Complex branch_point;  // in the shifted w-plane (constant term removed)
  int multiplicity;      // critical points over this branch point
  Loop loop;
  BraidWord word;
  Permutation permutation;
};

struct MonodromyResult {
  Polynomial polynomial;  // monic, constant term stripped
  Complex offset;         // stripped constant term; add it back to w-plane data
  Complex basepoint;
  std::vector<Complex> fiber;  // ordered by the projection
  double projection_angle;
  std::vector<MonodromyEntry> entries;  // loop-system order
  BraidWord infinity_word;
  PermGroupReport group_report;
};

enum class Verdict { kConsistent, kNotGeneric, kCheckFailed };

const char* verdict_name(Verdict v);

struct BraidCheck {
  int exponent_sum;
  bool is_transposition;
};

// Necessary conditions for the monodromy braids to generate the full braid
// group: one braid per branch point, each a half-twist candidate (exponent
// sum +1, transposition image), their ordered product equal to the braid of
// the loop around infinity, and permutation closure equal to S_n. The fan
// conjugator search is exploratory and never affects the verdict.
struct FullMonodromyReport {
  bool generic_branch_locus;
  std::vector<BraidCheck> per_braid;
  bool composite_identity;
  bool group_full_symmetric;
  bool fan_search_attempted;
  std::optional<BraidWord> fan_conjugator;
  Verdict verdict;
  MonodromyResult result;
};

// Full pipeline: strip the constant term, cluster the critical values, pick
// a basepoint and a loop per branch point, lift the fiber along each loop
// and along the loop around infinity, and read off braid words with one
// shared projection angle. Errors from a lift carry the loop index.
MonodromyResult braid_monodromy(const Polynomial& p, std::uint64_t seed,
                                const EngineOptions& opts = {});

FullMonodromyReport verify_full_monodromy(const Polynomial& p,
                                          std::uint64_t seed,
                                          const EngineOptions& opts = {});

// Permutation-level pipeline: end permutations only, no word extraction.
PermGroupReport monodromy_group(const Polynomial& p, std::uint64_t seed,
                                const EngineOptions& opts = {});

}  // namespace braidmono
