#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "commonpair/graph.hpp"
#include "commonpair/rational.hpp"

namespace commonpair {

// Symmetric step function on [0,1]^2: block i x block j carries the constant
// values[i][j], block i has measure masses[i]. Masses are nonnegative and
// sum to exactly 1. `bounds` is declared metadata checked at construction;
// a graphon is a step kernel whose values lie in [0,1].
struct StepKernel {
  std::vector<Rational> masses;
  std::vector<std::vector<Rational>> values;
  std::optional<std::pair<Rational, Rational>> bounds;

  int block_count() const { return static_cast<int>(masses.size()); }
  const Rational& value(int i, int j) const { return values[i][j]; }
  bool is_graphon() const;  // every value in [0,1]
  bool operator==(const StepKernel& other) const {
    return masses == other.masses && values == other.values;
  }
};

StepKernel make_step_kernel(
    std::vector<Rational> masses, std::vector<std::vector<Rational>> values,
    std::optional<std::pair<Rational, Rational>> bounds = std::nullopt);

StepKernel constant_kernel(const Rational& c);

// Two half blocks, -1 on the diagonal blocks, +1 off; t(C_l, .) = (-1)^l.
StepKernel kernel_B();

// Four quarter blocks, +1 on the diagonal blocks, -1 off; t(K4, .) = -1/2.
StepKernel kernel_K();

// Two half blocks, 1 on the diagonal blocks, 0 off.
StepKernel two_block_identity_graphon();

// Homomorphism density t(h, u): sum over block assignments of the edge-value
// product weighted by block masses. Exact. The assignment space (counting
// positive-mass blocks only) is capped at 1e9 per call.
Rational density(const Graph& h, const StepKernel& u);

// Serial recursive evaluation with zero-product pruning; kept as the
// reference implementation for the parallel kernel.
Rational density_reference(const Graph& h, const StepKernel& u);

// Induced density: edges contribute W, non-edges 1-W. Requires a graphon.
Rational t_ind(const Graph& j, const StepKernel& w);
Rational t_ind_reference(const Graph& j, const StepKernel& w);

// (v(j)!/aut(j)) * t_ind(j, w): probability that a w-random graph on v(j)
// vertices is isomorphic to j.
Rational d_density(const Graph& j, const StepKernel& w);

StepKernel complement_graphon(const StepKernel& w);
StepKernel affine_shift(const StepKernel& u, const Rational& p);
StepKernel scale_values(const StepKernel& u, const Rational& c);

// One extra zero-valued block of mass 1-delta; original masses scale by
// delta. delta = 1 returns u unchanged.
StepKernel scale_down(const StepKernel& u, const Rational& delta);

// Block Kronecker product; the product of block counts is capped at 4096.
StepKernel tensor(const StepKernel& u1, const StepKernel& u2);

// density(h, u)^power without materializing the tensor power.
Rational tensor_power_density(const Graph& h, const StepKernel& u, int power);

// The common weighted row sum over positive-mass blocks, if one exists.
std::optional<Rational> is_d_regular(const StepKernel& u);

// Rewrites both kernels on the product partition so they share one block
// structure. Densities are unchanged.
std::pair<StepKernel, StepKernel> refine_to_common_blocks(const StepKernel& u1,
                                                          const StepKernel& u2);
std::vector<StepKernel> align_blocks(const std::vector<StepKernel>& kernels);

}  // namespace commonpair
