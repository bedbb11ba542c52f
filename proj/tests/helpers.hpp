#ifndef FINCOV_TESTS_HELPERS_HPP
#define FINCOV_TESTS_HELPERS_HPP

#include <random>

#include "fincov/convergence.hpp"

namespace fincov::test {

inline Subset sub(std::initializer_list<int> pts) {
  Subset s;
  for (int p : pts) s = s.with(p);
  return s;
}

/// Deterministic random finitely deep convergence on n points.
inline FiniteConvergence random_fd(int n, std::mt19937& rng) {
  std::vector<Subset> rows;
  std::uniform_int_distribution<Mask> dist(0, subset_count(n) - 1);
  for (int x = 0; x < n; ++x) rows.push_back(Subset(dist(rng)).with(x));
  return FiniteConvergence::finite_depth(make_points(n), rows);
}

/// Deterministic random full table on n points: start from each subset's
/// smallest legal limit and enlarge randomly while keeping the table valid.
inline FiniteConvergence random_full(int n, std::mt19937& rng) {
  std::vector<Mask> order;
  for (Mask m = 1; m < subset_count(n); ++m) order.push_back(m);
  std::stable_sort(order.begin(), order.end(),
                   [](Mask a, Mask b) { return std::popcount(a) > std::popcount(b); });
  std::vector<Subset> limits(subset_count(n));
  std::uniform_int_distribution<Mask> dist(0, subset_count(n) - 1);
  for (Mask m : order) {
    Subset floor;
    for (int x = 0; x < n; ++x) {
      const Mask sup = m | (Mask(1) << x);
      if (sup != m) floor = floor | limits[sup];
    }
    if (std::popcount(m) == 1) floor = floor | Subset(m);
    limits[m] = floor | (Subset(dist(rng)) & full_set(n));
  }
  return FiniteConvergence::build(make_points(n), limits);
}

}  // namespace fincov::test

#endif
