// Seeded generators shared by the property tests.

#ifndef RAMSEY_TESTS_TEST_UTIL_H_
#define RAMSEY_TESTS_TEST_UTIL_H_

#include <random>

#include "ramsey/coloring.h"

namespace ramsey::testing {

// Circulant spec of the given order, each length blue with probability 1/2.
inline ColoringSpec random_circulant(int order, std::mt19937_64& rng) {
  ColoringSpec spec;
  spec.order = order;
  for (int len = 1; len <= order / 2; ++len) {
    if (rng() & 1) spec.blue_lengths.insert(len);
  }
  return spec;
}

// Circulant base plus random flips and occasional deletions.
inline ColoringSpec random_spec(int order, std::mt19937_64& rng) {
  ColoringSpec spec = random_circulant(order, rng);
  std::uniform_int_distribution<int> pick(0, order - 1);
  const int flips = static_cast<int>(rng() % (order + 1));
  std::set<Edge> seen;
  for (int i = 0; i < flips; ++i) {
    int a = pick(rng), b = pick(rng);
    if (a == b || !seen.insert(Edge(a, b)).second) continue;
    spec.flips.emplace_back(a, b);
  }
  if (rng() % 3 == 0) spec.deletions.insert(pick(rng));
  return spec;
}

}  // namespace ramsey::testing

#endif  // RAMSEY_TESTS_TEST_UTIL_H_
