#include "braidmono/monodromy.hpp"

#include <cmath>
#include <future>
#include <string>
#include <utility>

#include "braidmono/conjugacy.hpp"
#include "braidmono/extract.hpp"
#include "braidmono/garside.hpp"

namespace braidmono {

namespace {

constexpr double kFanMatchTol = 1e-9;

// z^n - n z after monic scaling and constant stripping.
bool is_fan_polynomial(const Polynomial& p) {
  const auto& c = p.coeffs();
  const int n = p.degree();
  if (n < 2) return false;
  if (std::abs(c[0]) > kFanMatchTol) return false;
  if (std::abs(c[1] + static_cast<double>(n)) > kFanMatchTol) return false;
  for (int k = 2; k < n; ++k)
    if (std::abs(c[k]) > kFanMatchTol) return false;
  return true;
}

std::size_t branch_index_of(const CriticalData& locus, Complex value) {
  std::size_t best = 0;
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < locus.branch_points.size(); ++j) {
    const double d = std::abs(locus.branch_points[j] - value);
    if (d < best_dist) {
      best_dist = d;
      best = j;
    }
  }
  if (!(best_dist <= 1e-9 * (1.0 + std::abs(value))))
    throw Error("loop target does not match any branch point");
  return best;
}

std::string loop_label(std::size_t index, std::size_t loop_count) {
  return index == loop_count ? std::string("infinity loop")
                             : "loop " + std::to_string(index + 1);
}

MonodromyResult run_with_angle(const Polynomial& np, Complex offset,
                               const CriticalData& locus,
                               const LoopSystem& system, double angle,
                               const EngineOptions& opts) {
  const std::vector<Complex> fiber0 =
      fiber(np, system.basepoint, angle, opts.track.collision_tol);
  const std::size_t loop_count = system.loops.size();

  // index loop_count is the loop around infinity
  auto lift = [&](std::size_t index) -> ExtractedWord {
    try {
      const Loop& loop =
          index == loop_count ? system.infinity : system.loops[index];
      FiberTrack track = track_fiber(np, loop, fiber0, opts.track);
      return extract_word(track, angle, opts.sep_tol);
    } catch (Error& e) {
      e.add_context(loop_label(index, loop_count));
      throw;
    }
  };

  std::vector<ExtractedWord> lifted;
  lifted.reserve(loop_count + 1);
  if (opts.parallel) {
    std::vector<std::future<ExtractedWord>> futures;
    futures.reserve(loop_count + 1);
    for (std::size_t i = 0; i <= loop_count; ++i)
      futures.push_back(std::async(std::launch::async, lift, i));
    for (auto& f : futures) lifted.push_back(f.get());
  } else {
    for (std::size_t i = 0; i <= loop_count; ++i) lifted.push_back(lift(i));
  }

  std::vector<MonodromyEntry> entries;
  entries.reserve(loop_count);
  std::vector<Permutation> generators;
  generators.reserve(loop_count);
  for (std::size_t i = 0; i < loop_count; ++i) {
    const Loop& loop = system.loops[i];
    if (!loop.target.has_value())
      throw Error("basis loop is missing its branch point target");
    const std::size_t j = branch_index_of(locus, *loop.target);
    entries.push_back({*loop.target, locus.multiplicities[j], loop,
                       lifted[i].word, lifted[i].permutation});
    generators.push_back(lifted[i].permutation);
  }
  PermGroupReport group = closure(generators, opts.closure_cap);

  return MonodromyResult{np,
                         offset,
                         system.basepoint,
                         fiber0,
                         angle,
                         std::move(entries),
                         lifted[loop_count].word,
                         group};
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kConsistent:
      return "consistent";
    case Verdict::kNotGeneric:
      return "not-generic";
    case Verdict::kCheckFailed:
      return "check-failed";
  }
  return "unknown";
}

MonodromyResult braid_monodromy(const Polynomial& p, std::uint64_t seed,
                                const EngineOptions& opts) {
  auto [np, offset] = normalize(p);
  const CriticalData locus = branch_locus(np, opts.cluster_tol);
  const Complex w0 = choose_basepoint(locus.branch_points, mix_seed(seed, 1));
  const LoopSystem system = geometric_basis(locus.branch_points, w0);

  std::vector<Complex> shifted = np.coeffs();
  shifted[0] -= w0;
  const std::vector<Complex> raw_fiber = roots_of_coefficients(shifted);

  const bool pinned = !std::isnan(opts.projection_angle);
  const int attempts = pinned ? 1 : std::max(1, opts.angle_retries);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    const double angle =
        pinned ? opts.projection_angle
               : choose_projection_angle(raw_fiber, mix_seed(seed, 2), attempt,
                                         opts.sep_tol);
    try {
      return run_with_angle(np, offset, locus, system, angle, opts);
    } catch (const TangencyUnresolved&) {
      if (pinned || attempt + 1 == attempts) throw;
    }
  }
  throw Error("projection angle retries exhausted");
}

FullMonodromyReport verify_full_monodromy(const Polynomial& p,
                                          std::uint64_t seed,
                                          const EngineOptions& opts) {
  MonodromyResult result = braid_monodromy(p, seed, opts);
  const int n = result.polynomial.degree();
  const bool generic = static_cast<int>(result.entries.size()) == n - 1;

  std::vector<BraidCheck> per_braid;
  per_braid.reserve(result.entries.size());
  bool braids_ok = true;
  for (const MonodromyEntry& entry : result.entries) {
    const BraidCheck check{exponent_sum(entry.word),
                           entry.permutation.is_transposition()};
    braids_ok = braids_ok && check.exponent_sum == 1 && check.is_transposition;
    per_braid.push_back(check);
  }

  BraidWord composite(n, {});
  for (const MonodromyEntry& entry : result.entries)
    composite = concat(composite, entry.word);
  const bool composite_ok = equal(composite, result.infinity_word);

  const bool full = result.group_report.is_full_symmetric;

  bool fan_attempted = false;
  std::optional<BraidWord> fan_conjugator;
  if (generic && n <= 4 && is_fan_polynomial(result.polynomial)) {
    fan_attempted = true;
    std::vector<BraidWord> words;
    std::vector<BraidWord> targets;
    for (const MonodromyEntry& entry : result.entries)
      words.push_back(entry.word);
    for (int j = 1; j < n; ++j) targets.push_back(fan_generator(n, j));
    fan_conjugator =
        simultaneous_conjugacy_search(words, targets, opts.fan_search_max_len);
  }

  Verdict verdict = Verdict::kCheckFailed;
  if (!generic)
    verdict = Verdict::kNotGeneric;
  else if (braids_ok && composite_ok && full)
    verdict = Verdict::kConsistent;

  return FullMonodromyReport{generic,
                             std::move(per_braid),
                             composite_ok,
                             full,
                             fan_attempted,
                             std::move(fan_conjugator),
                             verdict,
                             std::move(result)};
}

PermGroupReport monodromy_group(const Polynomial& p, std::uint64_t seed,
                                const EngineOptions& opts) {
  auto [np, offset] = normalize(p);
  (void)offset;
  const CriticalData locus = branch_locus(np, opts.cluster_tol);
  const Complex w0 = choose_basepoint(locus.branch_points, mix_seed(seed, 1));
  const LoopSystem system = geometric_basis(locus.branch_points, w0);
  const std::vector<Complex> fiber0 =
      fiber(np, w0, 0.0, opts.track.collision_tol);

  std::vector<Permutation> generators;
  generators.reserve(system.loops.size());
  for (std::size_t i = 0; i < system.loops.size(); ++i) {
    try {
      FiberTrack track = track_fiber(np, system.loops[i], fiber0, opts.track);
      generators.push_back(end_permutation(track));
    } catch (Error& e) {
      e.add_context(loop_label(i, system.loops.size()));
      throw;
    }
  }
  return closure(generators, opts.closure_cap);
}

}  // namespace braidmono
