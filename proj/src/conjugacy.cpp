#include "braidmono/conjugacy.hpp"

#include <deque>

#include "braidmono/garside.hpp"

namespace braidmono {

std::optional<BraidWord> simultaneous_conjugacy_search(
    const std::vector<BraidWord>& words, const std::vector<BraidWord>& targets,
    int max_len) {
  if (words.empty() || words.size() != targets.size())
    throw Error("conjugacy search needs matching nonempty word/target lists");
  const int n = words[0].strand_count();
  for (const auto& w : words)
    if (w.strand_count() != n)
      throw StrandCountMismatch("conjugacy search words mix strand counts");
  for (const auto& t : targets)
    if (t.strand_count() != n)
      throw StrandCountMismatch("conjugacy search targets mix strand counts");

  // Conjugation preserves exponent sums; refuse impossible instances early.
  for (std::size_t i = 0; i < words.size(); ++i)
    if (exponent_sum(words[i]) != exponent_sum(targets[i])) return std::nullopt;

  std::vector<GarsideNF> target_nf;
  std::vector<Permutation> word_perm, target_perm;
  for (std::size_t i = 0; i < words.size(); ++i) {
    target_nf.push_back(garside_nf(targets[i]));
    word_perm.push_back(permutation_of_word(words[i]));
    target_perm.push_back(permutation_of_word(targets[i]));
  }

  const auto matches = [&](const std::vector<int>& letters) {
    const BraidWord g(n, letters);
    const Permutation gp = permutation_of_word(g);
    const Permutation gp_inv = gp.inverse();
    for (std::size_t i = 0; i < words.size(); ++i)
      if (!(gp_inv.then(word_perm[i]).then(gp) == target_perm[i])) return false;
    const BraidWord g_inv = inverse(g);
    for (std::size_t i = 0; i < words.size(); ++i) {
      const BraidWord conj = concat(concat(g_inv, words[i]), g);
      if (!(garside_nf(conj) == target_nf[i])) return false;
    }
    return true;
  };

  std::vector<int> letter_order;
  for (int m = 1; m <= n - 1; ++m) {
    letter_order.push_back(m);
    letter_order.push_back(-m);
  }

  std::deque<std::vector<int>> queue;
  queue.push_back({});
  if (matches({})) return BraidWord(n);
  while (!queue.empty()) {
    std::vector<int> cur = std::move(queue.front());
    queue.pop_front();
    if (static_cast<int>(cur.size()) >= max_len) continue;
    for (int l : letter_order) {
      if (!cur.empty() && cur.back() == -l) continue;  // stay freely reduced
      std::vector<int> next = cur;
      next.push_back(l);
      if (matches(next)) return BraidWord(n, std::move(next));
      queue.push_back(std::move(next));
    }
  }
  return std::nullopt;
}

}  // namespace braidmono
