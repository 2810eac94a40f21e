#include "braidmono/perm_group.hpp"

#include <unordered_set>

namespace braidmono {

namespace {

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long element_order(const Permutation& p) {
  Permutation q = p;
  long k = 1;
  while (!q.is_identity()) {
    q = q.then(p);
    ++k;
  }
  return k;
}

}  // namespace

PermGroupReport closure(const std::vector<Permutation>& generators, long cap) {
  if (generators.empty())
    throw Error("closure needs at least one generator");
  const int n = generators[0].size();
  for (const auto& g : generators)
    if (g.size() != n) throw Error("closure generators mix degrees");

  std::vector<Permutation> elements{Permutation::identity(n)};
  std::unordered_set<std::uint64_t> seen{elements[0].pack()};
  for (std::size_t next = 0; next < elements.size(); ++next) {
    for (const auto& g : generators) {
      Permutation prod = elements[next].then(g);
      const std::uint64_t key = prod.pack();
      if (seen.insert(key).second) {
        if (static_cast<long>(elements.size()) + 1 > cap)
          throw CapExceeded("group closure exceeded cap of " +
                            std::to_string(cap) + " elements");
        elements.push_back(std::move(prod));
      }
    }
  }

  PermGroupReport report;
  report.order = static_cast<long>(elements.size());
  report.element_count_cap = cap;
  report.is_full_symmetric = report.order == factorial(n);

  // Orbit of point 0 under the generators.
  std::vector<char> in_orbit(n, 0);
  in_orbit[0] = 1;
  std::vector<int> frontier{0};
  int orbit_size = 1;
  while (!frontier.empty()) {
    const int p = frontier.back();
    frontier.pop_back();
    for (const auto& g : generators) {
      const int q = g.apply(p);
      if (!in_orbit[q]) {
        in_orbit[q] = 1;
        ++orbit_size;
        frontier.push_back(q);
      }
    }
  }
  report.is_transitive = orbit_size == n;

  report.is_cyclic = false;
  for (const auto& e : elements) {
    if (element_order(e) == report.order) {
      report.is_cyclic = true;
      break;
    }
  }
  return report;
}

}  // namespace braidmono
