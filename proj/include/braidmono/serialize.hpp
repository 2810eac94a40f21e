#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "braidmono/monodromy.hpp"

namespace braidmono {

// "re", "imi", "re+imi" with optional signs and exponents: "2", "-0.5",
// "i", "-i", "2i", "1e-3+2.5e-2i".
Complex parse_complex(const std::string& text);

// Whitespace-separated coefficients, ascending degree.
// InputParseError unless the (trimmed, monic) degree is at least 2.
Polynomial parse_poly(const std::string& text);

// Inverse of parse_complex for finite values: "2", "-0.5i", "1+2i".
std::string format_complex(Complex z);

// Plain mirror of the JSON result document, for round-trip checks.
struct ResultJson {
  struct Entry {
    Complex branch;
    std::vector<int> word;
    std::vector<int> perm;  // one-based images
    bool operator==(const Entry&) const = default;
  };
  std::vector<Complex> branch_points;
  std::vector<Complex> fiber;
  std::vector<Entry> entries;
  std::vector<int> infinity_word;
  long group_order = 0;
  bool group_full = false;
  bool operator==(const ResultJson&) const = default;
};

// Branch values are reported in the caller's w-plane (offset added back);
// order follows the loop system.
nlohmann::ordered_json to_json(const MonodromyResult& result);
nlohmann::ordered_json to_json(const ResultJson& result);
std::string to_json_text(const MonodromyResult& result);
std::string to_json_text(const ResultJson& result);
ResultJson parse_result_json(const std::string& text);

std::string to_text(const MonodromyResult& result);
std::string to_text(const FullMonodromyReport& report);
std::string group_text(const PermGroupReport& group);

}  // namespace braidmono
