#pragma once

// Seeded random instance generators shared across the test suites. All
// suites use fixed seeds so every run is identical.

#include <random>
#include <vector>

#include "commonpair/graph.hpp"
#include "commonpair/kernel.hpp"

namespace testutil {

using commonpair::Graph;
using commonpair::Rational;
using commonpair::StepKernel;

using Rng = std::mt19937_64;

inline int random_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Uniform k/d with 0 <= k <= d.
inline Rational random_unit_rational(Rng& rng, int max_den = 8) {
  const int den = random_int(rng, 1, max_den);
  return Rational(random_int(rng, 0, den), den);
}

// Strictly inside (0, 1).
inline Rational random_probability(Rng& rng, int max_den = 16) {
  const int den = random_int(rng, 2, max_den);
  return Rational(random_int(rng, 1, den - 1), den);
}

inline StepKernel random_graphon(Rng& rng, int max_blocks = 3, int max_den = 8) {
  const int m = random_int(rng, 1, max_blocks);
  std::vector<Rational> masses(m);
  int total = 0;
  std::vector<int> parts(m);
  for (int& part : parts) {
    part = random_int(rng, 1, 4);
    total += part;
  }
  for (int i = 0; i < m; ++i) masses[i] = Rational(parts[i], total);
  std::vector<std::vector<Rational>> values(m, std::vector<Rational>(m));
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      values[i][j] = values[j][i] = random_unit_rational(rng, max_den);
    }
  return commonpair::make_step_kernel(std::move(masses), std::move(values),
                                      std::pair{Rational(0), Rational(1)});
}

// Values in [lo, hi].
inline StepKernel random_kernel(Rng& rng, const Rational& lo, const Rational& hi,
                                int max_blocks = 3, int max_den = 8) {
  StepKernel base = random_graphon(rng, max_blocks, max_den);
  for (auto& row : base.values)
    for (Rational& v : row) v = lo + v * (hi - lo);
  base.bounds = std::pair{lo, hi};
  return base;
}

inline Graph random_graph(Rng& rng, int min_n, int max_n) {
  const int n = random_int(rng, min_n, max_n);
  const int bits = n * (n - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> dist(
      0, bits == 0 ? 0 : (1ull << bits) - 1);
  return Graph{n, dist(rng)};
}

inline Graph random_nonempty_graph(Rng& rng, int min_n, int max_n) {
  for (;;) {
    Graph g = random_graph(rng, std::max(min_n, 2), max_n);
    if (g.edge_count() >= 1) return g;
  }
}

}  // namespace testutil
