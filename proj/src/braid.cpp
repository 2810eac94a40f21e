#include "braidmono/braid.hpp"

#include <cstdlib>
#include <sstream>

namespace braidmono {

BraidWord::BraidWord(int strand_count, std::vector<int> letters)
    : strand_count_(strand_count), letters_(std::move(letters)) {
  if (strand_count_ < 2) throw Error("braid words need at least 2 strands");
  for (int l : letters_) {
    const int m = std::abs(l);
    if (m < 1 || m > strand_count_ - 1)
      throw IndexOutOfRange("letter " + std::to_string(l) + " out of range for " +
                            std::to_string(strand_count_) + " strands");
  }
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strand_count() != b.strand_count())
    throw StrandCountMismatch("cannot concatenate words on " +
                              std::to_string(a.strand_count()) + " and " +
                              std::to_string(b.strand_count()) + " strands");
  std::vector<int> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strand_count(), std::move(letters));
}

BraidWord inverse(const BraidWord& w) {
  std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
  for (int& l : letters) l = -l;
  return BraidWord(w.strand_count(), std::move(letters));
}

BraidWord power(const BraidWord& w, int k) {
  const BraidWord base = k < 0 ? inverse(w) : w;
  std::vector<int> letters;
  const int reps = std::abs(k);
  letters.reserve(static_cast<std::size_t>(reps) * base.letters().size());
  for (int i = 0; i < reps; ++i)
    letters.insert(letters.end(), base.letters().begin(), base.letters().end());
  return BraidWord(w.strand_count(), std::move(letters));
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> out;
  out.reserve(w.letters().size());
  for (int l : w.letters()) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return BraidWord(w.strand_count(), std::move(out));
}

Permutation permutation_of_word(const BraidWord& w) {
  Permutation p = Permutation::identity(w.strand_count());
  for (int l : w.letters()) {
    const int m = std::abs(l) - 1;
    p = p.then(Permutation::transposition(w.strand_count(), m, m + 1));
  }
  return p;
}

int exponent_sum(const BraidWord& w) {
  int sum = 0;
  for (int l : w.letters()) sum += l > 0 ? 1 : -1;
  return sum;
}

BraidWord fan_generator(int strand_count, int j) {
  if (j < 1 || j > strand_count - 1)
    throw IndexOutOfRange("fan generator index " + std::to_string(j) +
                          " out of range for " + std::to_string(strand_count) +
                          " strands");
  std::vector<int> letters;
  for (int m = 1; m <= j - 1; ++m) letters.push_back(-m);  // (a_{j-1}...a_1)^-1
  letters.push_back(j);
  for (int m = j - 1; m >= 1; --m) letters.push_back(m);  // a_{j-1}...a_1
  return BraidWord(strand_count, std::move(letters));
}

BraidWord delta(int strand_count) {
  std::vector<int> letters;
  for (int k = 1; k <= strand_count - 1; ++k)
    for (int m = k; m >= 1; --m) letters.push_back(m);
  return BraidWord(strand_count, std::move(letters));
}

BraidWord full_twist(int strand_count) {
  const BraidWord d = delta(strand_count);
  return concat(d, d);
}

std::string to_string(const BraidWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.letters().size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w.letters()[i]);
  }
  return s;
}

std::string to_pretty_string(const BraidWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.letters().size(); ++i) {
    const int l = w.letters()[i];
    if (i) s += ' ';
    s += 'a' + std::to_string(std::abs(l));
    if (l < 0) s += "^-1";
  }
  return s;
}

BraidWord parse_word(const std::string& text, int strand_count) {
  std::istringstream in(text);
  std::vector<int> letters;
  std::string tok;
  while (in >> tok) {
    int sign = 1;
    std::string body = tok;
    if (!body.empty() && body[0] == 'a') {
      body = body.substr(1);
      const auto caret = body.find("^-1");
      if (caret != std::string::npos) {
        if (caret + 3 != body.size())
          throw InputParseError("bad braid letter '" + tok + "'");
        sign = -1;
        body = body.substr(0, caret);
      }
    }
    char* end = nullptr;
    const long v = std::strtol(body.c_str(), &end, 10);
    if (end == body.c_str() || *end != '\0' || v == 0)
      throw InputParseError("bad braid letter '" + tok + "'");
    letters.push_back(sign * static_cast<int>(v));
  }
  try {
    return BraidWord(strand_count, std::move(letters));
  } catch (const IndexOutOfRange& e) {
    throw InputParseError(e.what());
  }
}

}  // namespace braidmono
