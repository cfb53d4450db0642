#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "commonpair/graph.hpp"
#include "commonpair/kernel.hpp"

namespace commonpair {

// One colour of a k-colour system: a non-empty target graph, its colour
// probability, and the graphon carrying that colour's edge density.
struct ColourEntry {
  Graph h;
  Rational p;
  StepKernel w;
};

// All kernels share one block structure after construction, the p_i sum to
// 1, and the W_i sum to the constant-1 graphon blockwise.
struct ColourSystem {
  std::vector<ColourEntry> entries;
};

ColourSystem make_colour_system(std::vector<ColourEntry> entries);

// sum_i t(H_i, W_i) / (e_i p_i^(e_i - 1))  -  sum_i p_i / e_i.
// The system is good on this instance iff the gap is >= 0.
Rational commonality_gap(const ColourSystem& sys);

// The two-sum functional over edge subsets with |E| >= 2, evaluated at a
// kernel u with values in [-p1, 1-p1]. Equals commonality_gap of the
// shifted pair (W1 = p1 + u, W2 = p2 - u). Subset enumeration caps the
// edge counts at 12.
Rational expansion_functional(const Graph& h1, const Graph& h2,
                              const Rational& p1, const StepKernel& u);

// Returns (density(h, p + u), sum over E of p^(e-|E|) density(h[E], u));
// the two are always equal. e(h) <= 12.
std::pair<Rational, Rational> expansion_identity_check(const Graph& h,
                                                       const Rational& p,
                                                       const StepKernel& u);

// The unique admissible p for a pair of odd-girth graphs, from
// p = 1/(alpha + 1) with alpha^(k-1) = c_k(h2) e(h1) / (c_k(h1) e(h2)).
// alpha_power is exact; p_exact is present only when alpha is rational.
// nullopt when the girths differ.
struct CandidateP {
  int girth = 0;
  Rational alpha_power;
  double p_float = 0.0;
  std::optional<Rational> p_exact;
};
std::optional<CandidateP> candidate_p(const Graph& h1, const Graph& h2);

struct GridPoint {
  Rational delta;
  int tensor_k = -1;  // -1 when the sweep has no tensor-power axis
  Rational value;
};

struct WitnessReport {
  std::string kind;  // "girth" | "k4" | "multicolour"
  Rational scale;    // the p multiplying the base kernel
  std::optional<Rational> delta;
  std::optional<int> tensor_k;
  Rational value;    // first negative hit, else minimum over the sweep
  bool negative = false;
  int lead_colour = 0;  // multicolour only: input index given the 2p kernel
  std::map<std::string, long long> tallies;
  std::vector<GridPoint> sweep;
};

std::vector<Rational> default_delta_grid();        // 2^-1 .. 2^-10
std::vector<int> default_tensor_power_grid();      // 1 .. 6

// Sweeps u = p * B^delta with p = min(p1, p2). Requires odd k = g(h1),
// g(h2) >= k, and the strict cycle-ratio inequality
// c_k(h1)/(e1 p1^(k-1)) > c_k(h2)/(e2 p2^(k-1)).
WitnessReport girth_witness(const Graph& h1, const Graph& h2,
                            const Rational& p1,
                            const std::vector<Rational>& deltas =
                                default_delta_grid());

// Sweeps u = p * (K tensor-power (2k+1)) scaled down by delta, evaluated
// through the closed form p^|E| delta^(v-i) t(H[E],K)^(2k+1) — the tensor
// power is never materialized. Requires a K4 in h1 or h2.
WitnessReport k4_witness(const Graph& h1, const Graph& h2, const Rational& p1,
                         const std::vector<Rational>& deltas =
                             default_delta_grid(),
                         const std::vector<int>& tensor_ks =
                             default_tensor_power_grid());

// Three-colour sweep with U = 2p * B^delta on the colour maximizing
// c_k/(e p^(k-1)) and -p * B^delta on the other two, p = min(p_i)/2.
// Requires the minimum girth to be odd.
WitnessReport multicolour_girth_witness(const Graph& h1, const Graph& h2,
                                        const Graph& h3, const Rational& p1,
                                        const Rational& p2, const Rational& p3,
                                        const std::vector<Rational>& deltas =
                                            default_delta_grid());

// Adds colour k+1 with probability q_next: existing probabilities and
// graphons scale by (1 - q_next), the new colour gets the constant graphon
// q_next. The gap scales by exactly (1 - q_next).
ColourSystem extend_witness_colour(const ColourSystem& sys, const Graph& h_next,
                                   const Rational& q_next);

}  // namespace commonpair
