// Acceptance suite: one line per criterion with wall time; a criterion also
// fails when it runs past its pinned time limit. Exit code is the number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "braidmono/artin.hpp"
#include "braidmono/conjugacy.hpp"
#include "braidmono/extract.hpp"
#include "braidmono/garside.hpp"
#include "braidmono/monodromy.hpp"
#include "braidmono/serialize.hpp"
#include "support/oracles.hpp"

using namespace braidmono;

namespace {

using Clock = std::chrono::steady_clock;

Polynomial central_family(int n) {  // z^n - n z
  std::vector<Complex> coeffs(n + 1, Complex(0.0));
  coeffs[1] = Complex(-static_cast<double>(n));
  coeffs[n] = Complex(1.0);
  return Polynomial(coeffs);
}

Polynomial pure_power(int n) {
  std::vector<Complex> coeffs(n + 1, Complex(0.0));
  coeffs[n] = Complex(1.0);
  return Polynomial(coeffs);
}

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

bool sets_match(const std::vector<Complex>& got,
                const std::vector<Complex>& expected, double tol,
                std::string& detail) {
  if (got.size() != expected.size()) {
    detail = "size " + std::to_string(got.size()) + " vs " +
             std::to_string(expected.size());
    return false;
  }
  std::vector<char> used(expected.size(), 0);
  for (Complex g : got) {
    bool placed = false;
    for (std::size_t j = 0; j < expected.size(); ++j) {
      if (!used[j] && std::abs(g - expected[j]) <= tol) {
        used[j] = 1;
        placed = true;
        break;
      }
    }
    if (!placed) {
      detail = "unmatched value " + format_complex(g);
      return false;
    }
  }
  return true;
}

int failures = 0;

void run(const char* name, const char* description, double time_limit,
         const std::function<bool(std::string&)>& body) {
  const auto t0 = Clock::now();
  bool ok = false;
  std::string detail;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(Clock::now() - t0).count();
  if (ok && secs > time_limit) {
    ok = false;
    detail = "runtime " + std::to_string(secs) + "s exceeded limit of " +
             std::to_string(time_limit) + "s";
  }
  std::printf("[%s] %s %s (%.2fs)\n", ok ? "PASS" : "FAIL", name, description,
              secs);
  if (!ok && !detail.empty()) std::printf("       %s\n", detail.c_str());
  if (!ok) ++failures;
}

bool a1_branch_locus_closed_form(std::string& detail) {
  for (int n = 3; n <= 8; ++n) {
    const Polynomial p = central_family(n);
    const CriticalData locus = branch_locus(p);
    std::vector<Complex> expected_branch;
    for (int j = 1; j <= n - 1; ++j)
      expected_branch.push_back(std::polar(static_cast<double>(n - 1),
                                           kTwoPi * (j - 1) / (n - 1)) *
                                Complex(-1.0));
    if (!sets_match(locus.branch_points, expected_branch, 1e-9, detail)) {
      detail = "branch points, n=" + std::to_string(n) + ": " + detail;
      return false;
    }

    std::vector<Complex> expected_fiber{Complex(0.0)};
    const double radius = std::pow(static_cast<double>(n), 1.0 / (n - 1));
    for (int j = 2; j <= n; ++j)
      expected_fiber.push_back(std::polar(radius, kTwoPi * (j - 2) / (n - 1)));
    if (!sets_match(all_roots(p), expected_fiber, 1e-9, detail)) {
      detail = "fiber over 0, n=" + std::to_string(n) + ": " + detail;
      return false;
    }
  }
  return true;
}

bool a2_half_twist_unit(std::string& detail) {
  const Polynomial p({Complex(0.0), Complex(-2.0), Complex(1.0)});  // z^2 - 2z
  const CriticalData locus = branch_locus(p);
  if (locus.branch_points.size() != 1 ||
      std::abs(locus.branch_points[0] - Complex(-1.0)) > 1e-9) {
    detail = "branch locus is not {-1}";
    return false;
  }
  const LoopSystem system = geometric_basis(locus.branch_points, Complex(0.0));
  const auto fiber0 = fiber(p, Complex(0.0), 0.0);
  const FiberTrack track = track_fiber(p, system.loops[0], fiber0);
  const HalfTwistCount twist = half_twist_count(track, 0, 1);
  if (twist.count != 1) {
    detail = "half twist count " + std::to_string(twist.count);
    return false;
  }
  if (!(twist.residual < 0.01)) {
    detail = "unwrap residual " + std::to_string(twist.residual);
    return false;
  }
  const ExtractedWord word = extract_word(track, 0.0);
  if (word.word.letters() != std::vector<int>{1}) {
    detail = "extracted word " + to_string(word.word);
    return false;
  }
  return true;
}

bool a3_cubic_words(std::string& detail) {
  const Polynomial p = central_family(3);
  const MonodromyResult result = braid_monodromy(p, 0);
  if (result.entries.size() != 2) {
    detail = "expected 2 entries";
    return false;
  }
  if (!equal(result.entries[0].word, BraidWord(3, {2})) ||
      !equal(result.entries[1].word, BraidWord(3, {1}))) {
    detail = "words " + to_string(result.entries[0].word) + " / " +
             to_string(result.entries[1].word);
    return false;
  }
  BraidWord composite(3, {});
  for (const MonodromyEntry& e : result.entries)
    composite = concat(composite, e.word);
  if (!equal(composite, result.infinity_word)) {
    detail = "composite != infinity word";
    return false;
  }
  if (result.group_report.order != 6) {
    detail = "group order " + std::to_string(result.group_report.order);
    return false;
  }
  // independent fixed-grid lift at 1e5 uniform steps
  const LoopSystem system = geometric_basis({Complex(-2.0), Complex(2.0)},
                                            Complex(0.0));
  const auto fiber0 = fiber(p, Complex(0.0), 0.0);
  for (std::size_t j = 0; j < system.loops.size(); ++j) {
    const auto reference =
        oracle::grid_word(p, system.loops[j], fiber0, 0.0, 100000);
    if (result.entries[j].word.letters() != reference) {
      detail = "grid oracle disagrees on loop " + std::to_string(j + 1);
      return false;
    }
  }
  return true;
}

bool a4_necessary_conditions(std::string& detail) {
  for (int n = 4; n <= 6; ++n) {
    const FullMonodromyReport report =
        verify_full_monodromy(central_family(n), 0);
    if (report.verdict != Verdict::kConsistent) {
      detail = "n=" + std::to_string(n) + " verdict " +
               verdict_name(report.verdict);
      return false;
    }
    for (const BraidCheck& c : report.per_braid) {
      if (c.exponent_sum != 1 || !c.is_transposition) {
        detail = "n=" + std::to_string(n) + " braid check failed";
        return false;
      }
    }
    if (!report.composite_identity) {
      detail = "n=" + std::to_string(n) + " composite identity failed";
      return false;
    }
    if (report.result.group_report.order != factorial(n)) {
      detail = "n=" + std::to_string(n) + " group order " +
               std::to_string(report.result.group_report.order);
      return false;
    }
  }
  return true;
}

bool a5_frame_alignment(std::string& detail) {
  const MonodromyResult result = braid_monodromy(central_family(3), 0);
  std::vector<BraidWord> words;
  for (const MonodromyEntry& e : result.entries) words.push_back(e.word);
  const std::vector<BraidWord> targets = {fan_generator(3, 1),
                                          fan_generator(3, 2)};
  const auto g = simultaneous_conjugacy_search(words, targets, 8);
  // frozen fixture: the search finds exactly a1^-1 a2^-1
  if (!g.has_value()) {
    detail = "no conjugator found";
    return false;
  }
  if (g->letters() != std::vector<int>{-1, -2}) {
    detail = "conjugator " + to_string(*g);
    return false;
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (!equal(concat(concat(inverse(*g), words[i]), *g), targets[i])) {
      detail = "conjugation identity failed";
      return false;
    }
  }
  return true;
}

bool a6_degenerate_groups(std::string& detail) {
  for (int n = 3; n <= 6; ++n) {
    const PermGroupReport group = monodromy_group(pure_power(n), 0);
    if (group.order != n || !group.is_cyclic) {
      detail = "z^" + std::to_string(n) + ": order " +
               std::to_string(group.order);
      return false;
    }
  }
  const Polynomial degenerate({Complex(0.0), Complex(0.0), Complex(-1.0),
                               Complex(0.0), Complex(1.0)});
  const PermGroupReport group = monodromy_group(degenerate, 0);
  if (group.order != 8 || !group.is_transitive || group.is_full_symmetric) {
    detail = "z^4 - z^2: order " + std::to_string(group.order);
    return false;
  }
  return true;
}

bool a7_rotation_full_twist(std::string& detail) {
  for (int n = 3; n <= 5; ++n) {
    const MonodromyResult result = braid_monodromy(pure_power(n), 0);
    if (result.entries.size() != 1) {
      detail = "z^" + std::to_string(n) + " entry count";
      return false;
    }
    if (!equal(power(result.entries[0].word, n), full_twist(n))) {
      detail = "z^" + std::to_string(n) + " word^n != full twist";
      return false;
    }
  }
  return true;
}

bool a8_word_problem_cross_validation(std::string& detail) {
  std::mt19937_64 rng(0xA8);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);  // 2..6
    std::uniform_int_distribution<int> length(0, 30);
    std::uniform_int_distribution<int> index(1, n - 1);
    auto draw = [&]() {
      std::vector<int> letters;
      const int len = length(rng);
      for (int i = 0; i < len; ++i)
        letters.push_back((rng() % 2 ? 1 : -1) * index(rng));
      return BraidWord(n, letters);
    };
    const BraidWord u = draw();
    const BraidWord v = draw();
    const bool garside = equal(u, v);
    const bool artin = artin_action_trivial(concat(u, inverse(v)));
    if (garside != artin) {
      detail = "disagreement at trial " + std::to_string(trial) + " (n=" +
               std::to_string(n) + ")";
      return false;
    }
  }
  for (int n = 2; n <= 8; ++n) {
    for (int i = 1; i < n; ++i) {
      for (int j = i + 2; j < n; ++j) {
        if (!equal(BraidWord(n, {i, j}), BraidWord(n, {j, i}))) {
          detail = "commutation failed at n=" + std::to_string(n);
          return false;
        }
      }
      if (i + 1 < n &&
          !equal(BraidWord(n, {i, i + 1, i}), BraidWord(n, {i + 1, i, i + 1}))) {
        detail = "braid relation failed at n=" + std::to_string(n);
        return false;
      }
    }
  }
  return true;
}

bool a9_random_generic_determinism(std::string& detail) {
  std::mt19937_64 rng(0xA9);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 4 + trial % 2;
    Polynomial p({Complex(0.0), Complex(0.0), Complex(1.0)});
    bool found = false;
    for (int attempt = 0; attempt < 100 && !found; ++attempt) {
      std::vector<Complex> coeffs;
      for (int k = 0; k < n; ++k)
        coeffs.push_back(Complex(coeff(rng), coeff(rng)));
      coeffs.push_back(Complex(1.0));
      const Polynomial candidate(coeffs);
      if (is_generic(candidate)) {
        p = candidate;
        found = true;
      }
    }
    if (!found) {
      detail = "no generic draw at trial " + std::to_string(trial);
      return false;
    }
    const std::uint64_t seed = 1000 + trial;
    const MonodromyResult result = braid_monodromy(p, seed);
    if (static_cast<int>(result.entries.size()) != n - 1) {
      detail = "trial " + std::to_string(trial) + ": entry count";
      return false;
    }
    if (result.group_report.order != factorial(n) ||
        !result.group_report.is_full_symmetric) {
      detail = "trial " + std::to_string(trial) + ": group order " +
               std::to_string(result.group_report.order);
      return false;
    }
    BraidWord composite(n, {});
    for (const MonodromyEntry& e : result.entries)
      composite = concat(composite, e.word);
    if (!equal(composite, result.infinity_word)) {
      detail = "trial " + std::to_string(trial) + ": composite identity";
      return false;
    }
    const MonodromyResult rerun = braid_monodromy(p, seed);
    if (to_json_text(result) != to_json_text(rerun)) {
      detail = "trial " + std::to_string(trial) + ": rerun differs";
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  run("A1", "branch locus and fiber closed forms for z^n - nz, n=3..8", 1.0,
      a1_branch_locus_closed_form);
  run("A2", "single positive half twist for z^2 - 2z", 1.0, a2_half_twist_unit);
  run("A3", "cubic words [2],[1], composite identity, group order 6 "
      "(grid-oracle checked)", 5.0, a3_cubic_words);
  run("A4", "half-twist conditions, composite identity, order n! for "
      "z^n - nz, n=4..6", 60.0, a4_necessary_conditions);
  run("A5", "frame alignment conjugator for the cubic is a1^-1 a2^-1", 120.0,
      a5_frame_alignment);
  run("A6", "cyclic groups for z^n and the order-8 group for z^4 - z^2", 5.0,
      a6_degenerate_groups);
  run("A7", "rotation word of z^n powers to the full twist, n=3..5", 10.0,
      a7_rotation_full_twist);
  run("A8", "Garside vs Artin agreement on 1000 random pairs plus both "
      "relation families", 30.0, a8_word_problem_cross_validation);
  run("A9", "20 random generic quartics/quintics: S_n closure, composite "
      "identity, bit-identical reruns", 300.0, a9_random_generic_determinism);

  std::printf("%d of 9 criteria failed\n", failures);
  return failures;
}
