#include <cmath>

#include "doctest.h"

#include "braidmono/garside.hpp"
#include "braidmono/monodromy.hpp"
#include "braidmono/serialize.hpp"

using namespace braidmono;

namespace {

Polynomial central_family(int n) {  // z^n - n z
  std::vector<Complex> coeffs(n + 1, Complex(0.0));
  coeffs[1] = Complex(-static_cast<double>(n));
  coeffs[n] = Complex(1.0);
  return Polynomial(coeffs);
}

Polynomial pure_power(int n) {  // z^n
  std::vector<Complex> coeffs(n + 1, Complex(0.0));
  coeffs[n] = Complex(1.0);
  return Polynomial(coeffs);
}

const Polynomial kQuarticDegenerate({Complex(0.0), Complex(0.0), Complex(-1.0),
                                     Complex(0.0), Complex(1.0)});  // z^4 - z^2

}  // namespace

TEST_CASE("cubic monodromy in the projection frame") {
  const MonodromyResult result = braid_monodromy(central_family(3), 0);
  REQUIRE(result.entries.size() == 2);
  CHECK(equal(result.entries[0].word, BraidWord(3, {2})));
  CHECK(equal(result.entries[1].word, BraidWord(3, {1})));
  CHECK(result.entries[0].multiplicity == 1);
  CHECK(result.group_report.order == 6);
  CHECK(result.group_report.is_full_symmetric);

  BraidWord composite(3, {});
  for (const MonodromyEntry& e : result.entries)
    composite = concat(composite, e.word);
  CHECK(equal(composite, result.infinity_word));

  for (const MonodromyEntry& e : result.entries)
    CHECK(permutation_of_word(e.word) == e.permutation);
}

TEST_CASE("degenerate quartic splits exponent sums by multiplicity") {
  const MonodromyResult result = braid_monodromy(kQuarticDegenerate, 0);
  REQUIRE(result.entries.size() == 2);
  int sum_over_double = 0;
  int sum_over_simple = 0;
  for (const MonodromyEntry& e : result.entries) {
    if (std::abs(e.branch_point - Complex(-0.25)) < 1e-9) {
      CHECK(e.multiplicity == 2);
      sum_over_double = exponent_sum(e.word);
    } else {
      CHECK(std::abs(e.branch_point) < 1e-9);
      CHECK(e.multiplicity == 1);
      sum_over_simple = exponent_sum(e.word);
    }
  }
  CHECK(sum_over_double == 2);
  CHECK(sum_over_simple == 1);
  CHECK(result.group_report.order == 8);
}

TEST_CASE("pure powers give the rotation braid") {
  for (int n = 3; n <= 5; ++n) {
    const MonodromyResult result = braid_monodromy(pure_power(n), 0);
    REQUIRE(result.entries.size() == 1);
    const BraidWord& w = result.entries[0].word;
    CHECK(exponent_sum(w) == n - 1);
    CHECK(equal(power(w, n), full_twist(n)));
    CHECK(result.group_report.is_cyclic);
    CHECK(result.group_report.order == n);
  }
}

TEST_CASE("exponent sums add up to the infinity word") {
  for (int n = 3; n <= 5; ++n) {
    const MonodromyResult result = braid_monodromy(central_family(n), 0);
    int total = 0;
    for (const MonodromyEntry& e : result.entries)
      total += exponent_sum(e.word);
    CHECK(total == exponent_sum(result.infinity_word));
    CHECK(total == n - 1);
  }
}

TEST_CASE("verification verdicts") {
  const FullMonodromyReport good = verify_full_monodromy(central_family(4), 0);
  CHECK(good.verdict == Verdict::kConsistent);
  CHECK(good.generic_branch_locus);
  CHECK(good.composite_identity);
  CHECK(good.group_full_symmetric);
  for (const BraidCheck& c : good.per_braid) {
    CHECK(c.exponent_sum == 1);
    CHECK(c.is_transposition);
  }

  CHECK(verify_full_monodromy(kQuarticDegenerate, 0).verdict ==
        Verdict::kNotGeneric);
  CHECK(verify_full_monodromy(pure_power(6), 0).verdict ==
        Verdict::kNotGeneric);
}

TEST_CASE("fan alignment fixture for the cubic") {
  const FullMonodromyReport report = verify_full_monodromy(central_family(3), 0);
  CHECK(report.fan_search_attempted);
  REQUIRE(report.fan_conjugator.has_value());
  CHECK(report.fan_conjugator->letters() == std::vector<int>{-1, -2});
}

TEST_CASE("constant shifts do not change the braids") {
  const Polynomial shifted({Complex(5.0, 1.0), Complex(-3.0), Complex(0.0),
                            Complex(1.0)});
  const MonodromyResult base = braid_monodromy(central_family(3), 0);
  const MonodromyResult moved = braid_monodromy(shifted, 0);
  CHECK(moved.offset == Complex(5.0, 1.0));
  REQUIRE(moved.entries.size() == base.entries.size());
  for (std::size_t j = 0; j < base.entries.size(); ++j) {
    CHECK(equal(moved.entries[j].word, base.entries[j].word));
    CHECK(std::abs(moved.entries[j].branch_point -
                   base.entries[j].branch_point) < 1e-9);
  }
}

TEST_CASE("parallel lifting matches the serial result") {
  EngineOptions opts;
  opts.parallel = true;
  const MonodromyResult serial = braid_monodromy(central_family(5), 3);
  const MonodromyResult parallel = braid_monodromy(central_family(5), 3, opts);
  CHECK(to_json_text(serial) == to_json_text(parallel));
}

TEST_CASE("results are bit-identical across reruns") {
  const std::string a = to_json_text(braid_monodromy(central_family(4), 11));
  const std::string b = to_json_text(braid_monodromy(central_family(4), 11));
  CHECK(a == b);
}

TEST_CASE("monodromy_group skips extraction but agrees") {
  const PermGroupReport group = monodromy_group(kQuarticDegenerate, 0);
  CHECK(group.order == 8);
  CHECK(group.is_transitive);
  CHECK_FALSE(group.is_full_symmetric);
  for (int n = 3; n <= 6; ++n) {
    const PermGroupReport cyc = monodromy_group(pure_power(n), 0);
    CHECK(cyc.order == n);
    CHECK(cyc.is_cyclic);
  }
}

TEST_CASE("seed changes keep the verdict stable") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    const FullMonodromyReport report =
        verify_full_monodromy(central_family(3), seed);
    CHECK(report.verdict == Verdict::kConsistent);
    CHECK(report.result.group_report.order == 6);
  }
}
