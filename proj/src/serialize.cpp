#include "braidmono/serialize.hpp"

#include <cctype>
#include <iomanip>
#include <sstream>
#include <string>

namespace braidmono {

namespace {

double parse_real_strict(const std::string& text, const std::string& whole) {
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &consumed);
  } catch (const std::exception&) {
    throw InputParseError("cannot parse number in '" + whole + "'");
  }
  if (consumed != text.size())
    throw InputParseError("trailing characters in number '" + whole + "'");
  return value;
}

// "2i" -> 2, "i" -> 1, "-i" -> -1; text must end with 'i'.
double parse_imag_body(const std::string& text, const std::string& whole) {
  const std::string body = text.substr(0, text.size() - 1);
  if (body.empty() || body == "+") return 1.0;
  if (body == "-") return -1.0;
  return parse_real_strict(body, whole);
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

nlohmann::ordered_json complex_json(Complex z) {
  return nlohmann::ordered_json::array({z.real(), z.imag()});
}

Complex complex_of_json(const nlohmann::ordered_json& v) {
  return Complex(v.at(0).get<double>(), v.at(1).get<double>());
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string word_text(const BraidWord& w) { return "[" + to_string(w) + "]"; }

}  // namespace

Complex parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw InputParseError("empty complex literal");

  std::size_t sep = std::string::npos;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      sep = k;
      break;
    }
  }

  if (sep == std::string::npos) {
    if (s.back() == 'i') return Complex(0.0, parse_imag_body(s, text));
    return Complex(parse_real_strict(s, text), 0.0);
  }
  const std::string re = s.substr(0, sep);
  const std::string im = s.substr(sep);
  if (im.back() != 'i')
    throw InputParseError("expected trailing 'i' in '" + text + "'");
  if (im.size() >= 2 && (im[1] == '+' || im[1] == '-'))
    throw InputParseError("doubled sign in '" + text + "'");
  return Complex(parse_real_strict(re, text), parse_imag_body(im, text));
}

Polynomial parse_poly(const std::string& text) {
  std::istringstream in(text);
  std::vector<Complex> coeffs;
  std::string token;
  while (in >> token) coeffs.push_back(parse_complex(token));
  if (coeffs.empty()) throw InputParseError("no coefficients given");
  try {
    return Polynomial(std::move(coeffs));
  } catch (const Error& e) {
    throw InputParseError(e.what());
  }
}

std::string format_complex(Complex z) {
  const double re = z.real();
  const double im = z.imag();
  if (im == 0.0) return format_double(re);
  if (re == 0.0) return format_double(im) + "i";
  std::string out = format_double(re);
  if (im > 0.0) out += "+";
  return out + format_double(im) + "i";
}

nlohmann::ordered_json to_json(const MonodromyResult& result) {
  nlohmann::ordered_json j;
  auto branch_points = nlohmann::ordered_json::array();
  for (const MonodromyEntry& e : result.entries)
    branch_points.push_back(complex_json(e.branch_point + result.offset));
  j["branch_points"] = std::move(branch_points);

  auto fiber = nlohmann::ordered_json::array();
  for (Complex z : result.fiber) fiber.push_back(complex_json(z));
  j["fiber"] = std::move(fiber);

  auto entries = nlohmann::ordered_json::array();
  for (const MonodromyEntry& e : result.entries) {
    nlohmann::ordered_json entry;
    entry["branch"] = complex_json(e.branch_point + result.offset);
    entry["word"] = e.word.letters();
    entry["perm"] = e.permutation.one_based();
    entries.push_back(std::move(entry));
  }
  j["entries"] = std::move(entries);

  j["infinity_word"] = result.infinity_word.letters();
  j["group"] = {{"order", result.group_report.order},
                {"full", result.group_report.is_full_symmetric}};
  return j;
}

nlohmann::ordered_json to_json(const ResultJson& result) {
  nlohmann::ordered_json j;
  auto branch_points = nlohmann::ordered_json::array();
  for (Complex z : result.branch_points) branch_points.push_back(complex_json(z));
  j["branch_points"] = std::move(branch_points);

  auto fiber = nlohmann::ordered_json::array();
  for (Complex z : result.fiber) fiber.push_back(complex_json(z));
  j["fiber"] = std::move(fiber);

  auto entries = nlohmann::ordered_json::array();
  for (const ResultJson::Entry& e : result.entries) {
    nlohmann::ordered_json entry;
    entry["branch"] = complex_json(e.branch);
    entry["word"] = e.word;
    entry["perm"] = e.perm;
    entries.push_back(std::move(entry));
  }
  j["entries"] = std::move(entries);

  j["infinity_word"] = result.infinity_word;
  j["group"] = {{"order", result.group_order}, {"full", result.group_full}};
  return j;
}

std::string to_json_text(const MonodromyResult& result) {
  return to_json(result).dump(2) + "\n";
}

std::string to_json_text(const ResultJson& result) {
  return to_json(result).dump(2) + "\n";
}

ResultJson parse_result_json(const std::string& text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    ResultJson out;
    for (const auto& v : j.at("branch_points"))
      out.branch_points.push_back(complex_of_json(v));
    for (const auto& v : j.at("fiber")) out.fiber.push_back(complex_of_json(v));
    for (const auto& e : j.at("entries")) {
      ResultJson::Entry entry;
      entry.branch = complex_of_json(e.at("branch"));
      entry.word = e.at("word").get<std::vector<int>>();
      entry.perm = e.at("perm").get<std::vector<int>>();
      out.entries.push_back(std::move(entry));
    }
    out.infinity_word = j.at("infinity_word").get<std::vector<int>>();
    out.group_order = j.at("group").at("order").get<long>();
    out.group_full = j.at("group").at("full").get<bool>();
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw InputParseError(std::string("result document malformed: ") + e.what());
  }
}

std::string to_text(const MonodromyResult& result) {
  std::ostringstream os;
  os << "degree: " << result.polynomial.degree() << "\n";
  os << "basepoint: " << format_complex(result.basepoint + result.offset)
     << "\n";
  os << "projection angle: " << format_double(result.projection_angle) << "\n";
  os << "fiber:";
  for (Complex z : result.fiber) os << " " << format_complex(z);
  os << "\n";
  int index = 1;
  for (const MonodromyEntry& e : result.entries) {
    os << "entry " << index++ << ": branch="
       << format_complex(e.branch_point + result.offset)
       << " multiplicity=" << e.multiplicity << " word=" << word_text(e.word)
       << " perm=[" << e.permutation.to_string() << "]\n";
  }
  os << "infinity word: " << word_text(result.infinity_word) << "\n";
  os << "group: " << group_text(result.group_report) << "\n";
  return os.str();
}

std::string to_text(const FullMonodromyReport& report) {
  std::ostringstream os;
  os << "verdict: " << verdict_name(report.verdict) << "\n";
  os << "generic branch locus: " << bool_text(report.generic_branch_locus)
     << "\n";
  int index = 1;
  for (const BraidCheck& c : report.per_braid) {
    os << "braid " << index++ << ": exponent-sum=" << c.exponent_sum
       << " transposition=" << bool_text(c.is_transposition) << "\n";
  }
  os << "composite identity: " << bool_text(report.composite_identity) << "\n";
  os << "group full symmetric: " << bool_text(report.group_full_symmetric)
     << "\n";
  if (report.fan_search_attempted) {
    if (report.fan_conjugator.has_value())
      os << "fan conjugator: " << word_text(*report.fan_conjugator) << "\n";
    else
      os << "fan conjugator: none found within the search bound\n";
  }
  os << "\n" << to_text(report.result);
  return os.str();
}

std::string group_text(const PermGroupReport& group) {
  std::ostringstream os;
  os << "order=" << group.order << " full=" << bool_text(group.is_full_symmetric)
     << " cyclic=" << bool_text(group.is_cyclic)
     << " transitive=" << bool_text(group.is_transitive);
  return os.str();
}

}  // namespace braidmono
