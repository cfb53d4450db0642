#include "commonpair/expansion.hpp"

#include <algorithm>
#include <cmath>

namespace commonpair {

namespace {

constexpr int kSubsetEdgeCap = 12;

void check_probability(const Rational& p, const char* what) {
  if (p <= 0 || p >= 1) {
    throw DomainError(std::string(what) + " must lie strictly between 0 and 1");
  }
}

// Single-bit masks of the edges of g, in bit order. Subsets of E(g) are
// then submasks over this list.
std::vector<std::uint64_t> edge_bits(const Graph& g) {
  std::vector<std::uint64_t> bits;
  for (auto [u, v] : g.edge_list()) {
    bits.push_back(1ull << Graph::pair_index(u, v));
  }
  return bits;
}

struct SubsetTerm {
  int size = 0;          // |E|
  Graph subgraph;        // same vertex set, edges = the subset
  int non_isolated = 0;  // v(F) - i(F)
};

std::vector<SubsetTerm> edge_subsets(const Graph& g, int min_size) {
  if (g.edge_count() > kSubsetEdgeCap) {
    throw DomainError("edge-subset enumeration supports at most 12 edges");
  }
  const auto bits = edge_bits(g);
  const int e = static_cast<int>(bits.size());
  std::vector<SubsetTerm> out;
  for (std::uint32_t sub = 0; sub < (1u << e); ++sub) {
    int size = std::popcount(sub);
    if (size < min_size) continue;
    std::uint64_t mask = 0;
    for (int i = 0; i < e; ++i) {
      if ((sub >> i) & 1) mask |= bits[i];
    }
    SubsetTerm term;
    term.size = size;
    term.subgraph = Graph{g.n, mask};
    term.non_isolated = g.n - term.subgraph.isolated_count();
    out.push_back(term);
  }
  return out;
}

Rational cycle_ratio(const Graph& h, const Rational& p, int k) {
  return Rational(cycle_count(h, k)) /
         (Rational(h.edge_count()) * rational_pow(p, k - 1));
}

std::optional<BigInt> perfect_nth_root(const BigInt& x, int n) {
  if (x < 0) return std::nullopt;
  if (x == 0 || x == 1) return x;
  BigInt lo = 1, hi = x;
  while (lo <= hi) {
    BigInt mid = (lo + hi) / 2;
    BigInt power = 1;
    for (int i = 0; i < n && power <= x; ++i) power *= mid;
    if (power == x) return mid;
    if (power < x) lo = mid + 1; else hi = mid - 1;
  }
  return std::nullopt;
}

// Shared sweep driver: evaluates every grid point (order-independent,
// results are exact), then reports the first negative in grid order.
WitnessReport sweep_report(std::string kind, const Rational& scale,
                           std::vector<GridPoint> points) {
  WitnessReport report;
  report.kind = std::move(kind);
  report.scale = scale;
  report.sweep = std::move(points);
  const GridPoint* first_negative = nullptr;
  const GridPoint* minimum = nullptr;
  for (const GridPoint& pt : report.sweep) {
    if (!minimum || pt.value < minimum->value) minimum = &pt;
    if (!first_negative && pt.value < 0) first_negative = &pt;
  }
  const GridPoint* chosen = first_negative ? first_negative : minimum;
  report.negative = first_negative != nullptr;
  report.value = chosen->value;
  report.delta = chosen->delta;
  if (chosen->tensor_k >= 0) report.tensor_k = chosen->tensor_k;
  return report;
}

}  // namespace

ColourSystem make_colour_system(std::vector<ColourEntry> entries) {
  if (entries.empty()) throw DomainError("colour system needs at least one colour");
  Rational p_total = 0;
  std::vector<StepKernel> kernels;
  for (const ColourEntry& entry : entries) {
    if (entry.h.edge_count() < 1) {
      throw DomainError("colour system graphs must have at least one edge");
    }
    check_probability(entry.p, "colour probability");
    p_total += entry.p;
    kernels.push_back(entry.w);
  }
  if (p_total != 1) throw DomainError("colour probabilities must sum to 1");
  kernels = align_blocks(kernels);
  const int m = kernels.front().block_count();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Rational sum = 0;
      for (const StepKernel& w : kernels) sum += w.values[i][j];
      if (sum != 1) {
        throw DomainError("colour graphons must sum to the constant 1");
      }
    }
  for (const StepKernel& w : kernels) {
    if (!w.is_graphon()) throw DomainError("colour kernels must be graphons");
  }
  ColourSystem sys;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    sys.entries.push_back({entries[i].h, entries[i].p, kernels[i]});
  }
  return sys;
}

Rational commonality_gap(const ColourSystem& sys) {
  Rational gap = 0;
  for (const ColourEntry& entry : sys.entries) {
    const int e = entry.h.edge_count();
    gap += density(entry.h, entry.w) /
           (Rational(e) * rational_pow(entry.p, e - 1));
    gap -= entry.p / e;
  }
  return gap;
}

Rational expansion_functional(const Graph& h1, const Graph& h2,
                              const Rational& p1, const StepKernel& u) {
  check_probability(p1, "p1");
  if (h1.edge_count() < 1 || h2.edge_count() < 1) {
    throw DomainError("expansion functional needs non-empty graphs");
  }
  const Rational p2 = Rational(1) - p1;
  for (const auto& row : u.values)
    for (const Rational& v : row) {
      if (v < -p1 || v > p2) {
        throw DomainError("kernel is not admissible: values must lie in [-p1, p2]");
      }
    }
  Rational total = 0;
  for (const SubsetTerm& term : edge_subsets(h1, 2)) {
    total += density(term.subgraph, u) /
             (Rational(h1.edge_count()) * rational_pow(p1, term.size - 1));
  }
  for (const SubsetTerm& term : edge_subsets(h2, 2)) {
    Rational contribution = density(term.subgraph, u) /
        (Rational(h2.edge_count()) * rational_pow(p2, term.size - 1));
    total += (term.size % 2 == 0) ? contribution : -contribution;
  }
  return total;
}

std::pair<Rational, Rational> expansion_identity_check(const Graph& h,
                                                       const Rational& p,
                                                       const StepKernel& u) {
  const Rational direct = density(h, affine_shift(u, p));
  Rational subset_sum = 0;
  for (const SubsetTerm& term : edge_subsets(h, 0)) {
    subset_sum += rational_pow(p, h.edge_count() - term.size) *
                  density(term.subgraph, u);
  }
  return {direct, subset_sum};
}

std::optional<CandidateP> candidate_p(const Graph& h1, const Graph& h2) {
  const auto g1 = girth(h1);
  const auto g2 = girth(h2);
  if (!g1 || !g2 || *g1 % 2 == 0 || *g2 % 2 == 0) {
    throw DomainError("candidate_p requires both graphs to have finite odd girth");
  }
  if (*g1 != *g2) return std::nullopt;
  const int k = *g1;
  CandidateP out;
  out.girth = k;
  out.alpha_power =
      Rational(BigInt(cycle_count(h2, k)) * h1.edge_count(),
               BigInt(cycle_count(h1, k)) * h2.edge_count());
  const double alpha =
      std::pow(out.alpha_power.convert_to<double>(), 1.0 / (k - 1));
  out.p_float = 1.0 / (alpha + 1.0);
  const auto root_num = perfect_nth_root(numerator(out.alpha_power), k - 1);
  const auto root_den = perfect_nth_root(denominator(out.alpha_power), k - 1);
  if (root_num && root_den) {
    out.p_exact = Rational(*root_den, *root_num + *root_den);
  }
  return out;
}

std::vector<Rational> default_delta_grid() {
  std::vector<Rational> grid;
  for (int i = 1; i <= 10; ++i) grid.push_back(Rational(1, 1ll << i));
  return grid;
}

std::vector<int> default_tensor_power_grid() { return {1, 2, 3, 4, 5, 6}; }

WitnessReport girth_witness(const Graph& h1, const Graph& h2,
                            const Rational& p1,
                            const std::vector<Rational>& deltas) {
  check_probability(p1, "p1");
  if (deltas.empty()) throw DomainError("empty delta grid");
  const Rational p2 = Rational(1) - p1;
  const auto g1 = girth(h1);
  if (!g1 || *g1 % 2 == 0) {
    throw DomainError("girth witness requires g(h1) to be finite and odd");
  }
  const int k = *g1;
  const auto g2 = girth(h2);
  if (g2 && *g2 < k) {
    throw DomainError("girth witness requires g(h1) <= g(h2)");
  }
  if (!(cycle_ratio(h1, p1, k) > cycle_ratio(h2, p2, k))) {
    throw DomainError(
        "girth witness precondition fails: c_k(h1)/(e1 p1^(k-1)) must "
        "strictly exceed c_k(h2)/(e2 p2^(k-1))");
  }
  const Rational p = std::min(p1, p2);
  const StepKernel base = kernel_B();
  std::vector<GridPoint> points(deltas.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    const StepKernel u = scale_values(scale_down(base, deltas[i]), p);
    points[i] = GridPoint{deltas[i], -1, expansion_functional(h1, h2, p1, u)};
  }
  WitnessReport report = sweep_report("girth", p, std::move(points));
  auto count_big = [k](const Graph& h) {
    long long b = 0;
    for (const SubsetTerm& term : edge_subsets(h, 1)) {
      if (term.non_isolated >= k + 1) ++b;
    }
    return b;
  };
  report.tallies["b1"] = count_big(h1);
  report.tallies["b2"] = count_big(h2);
  return report;
}

WitnessReport k4_witness(const Graph& h1, const Graph& h2, const Rational& p1,
                         const std::vector<Rational>& deltas,
                         const std::vector<int>& tensor_ks) {
  check_probability(p1, "p1");
  if (deltas.empty() || tensor_ks.empty()) throw DomainError("empty grid");
  if (!contains_k4(h1) && !contains_k4(h2)) {
    throw DomainError("k4 witness requires a K4 subgraph in h1 or h2");
  }
  const Rational p2 = Rational(1) - p1;
  const Rational p = std::min(p1, p2);
  const StepKernel k_kernel = kernel_K();

  struct Precomputed {
    int size;
    int non_isolated;
    Rational base_density;  // t(H[E], K)
  };
  auto precompute = [&](const Graph& h) {
    std::vector<Precomputed> out;
    for (const SubsetTerm& term : edge_subsets(h, 2)) {
      out.push_back({term.size, term.non_isolated,
                     density(term.subgraph, k_kernel)});
    }
    return out;
  };
  const auto subs1 = precompute(h1);
  const auto subs2 = precompute(h2);
  const Rational e1(h1.edge_count());
  const Rational e2(h2.edge_count());

  // t(H[E], U) = p^|E| delta^(v-i) t(H[E], K)^(2k+1), per the scale-down and
  // tensor-power identities.
  auto evaluate = [&](const Rational& delta, int tk) {
    const int power = 2 * tk + 1;
    Rational total = 0;
    for (const Precomputed& s : subs1) {
      total += rational_pow(p, s.size) * rational_pow(delta, s.non_isolated) *
               rational_pow(s.base_density, power) /
               (e1 * rational_pow(p1, s.size - 1));
    }
    for (const Precomputed& s : subs2) {
      Rational contribution =
          rational_pow(p, s.size) * rational_pow(delta, s.non_isolated) *
          rational_pow(s.base_density, power) /
          (e2 * rational_pow(p2, s.size - 1));
      total += (s.size % 2 == 0) ? contribution : -contribution;
    }
    return total;
  };

  const std::size_t grid = deltas.size() * tensor_ks.size();
  std::vector<GridPoint> points(grid);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t idx = 0; idx < grid; ++idx) {
    const Rational& delta = deltas[idx / tensor_ks.size()];
    const int tk = tensor_ks[idx % tensor_ks.size()];
    points[idx] = GridPoint{delta, tk, evaluate(delta, tk)};
  }
  WitnessReport report = sweep_report("k4", p, std::move(points));

  const Graph k2 = complete_graph(2);
  const Graph k4 = complete_graph(4);
  auto tally = [&](const Graph& h, const char* b, const char* s, const char* n1) {
    long long big = 0, small = 0, k4s = 0;
    for (const SubsetTerm& term : edge_subsets(h, 1)) {
      const Graph core = canonical_form(strip_isolated(term.subgraph));
      if (term.non_isolated >= 5) {
        ++big;
      } else if (core == k2 || core == canonical_form(k4)) {
        k4s += (core.n == 4) ? 1 : 0;
      } else {
        ++small;
      }
    }
    report.tallies[b] = big;
    report.tallies[s] = small;
    report.tallies[n1] = k4s;
  };
  tally(h1, "b1", "s1", "n1");
  tally(h2, "b2", "s2", "n2");
  return report;
}

WitnessReport multicolour_girth_witness(const Graph& h1, const Graph& h2,
                                        const Graph& h3, const Rational& p1,
                                        const Rational& p2, const Rational& p3,
                                        const std::vector<Rational>& deltas) {
  if (deltas.empty()) throw DomainError("empty delta grid");
  struct Colour {
    const Graph* h;
    Rational p;
    int input_index;
  };
  std::vector<Colour> colours{{&h1, p1, 0}, {&h2, p2, 1}, {&h3, p3, 2}};
  Rational p_total = 0;
  for (const Colour& c : colours) {
    if (c.h->edge_count() < 1) {
      throw DomainError("multicolour witness graphs must be non-empty");
    }
    check_probability(c.p, "colour probability");
    p_total += c.p;
  }
  if (p_total != 1) throw DomainError("colour probabilities must sum to 1");

  std::optional<int> k;
  for (const Colour& c : colours) {
    const auto g = girth(*c.h);
    if (g && (!k || *g < *k)) k = *g;
  }
  if (!k || *k % 2 == 0) {
    throw DomainError("multicolour girth witness requires odd minimum girth");
  }
  // The colour with the largest c_k/(e p^(k-1)) carries the 2p kernel.
  std::stable_sort(colours.begin(), colours.end(),
                   [&](const Colour& a, const Colour& b) {
                     return cycle_ratio(*a.h, a.p, *k) >
                            cycle_ratio(*b.h, b.p, *k);
                   });
  const Rational p =
      std::min({colours[0].p, colours[1].p, colours[2].p}) / 2;
  const StepKernel base = kernel_B();

  std::vector<GridPoint> points(deltas.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    const StepKernel shrunk = scale_down(base, deltas[i]);
    const StepKernel kernels[3] = {scale_values(shrunk, 2 * p),
                                   scale_values(shrunk, -p),
                                   scale_values(shrunk, -p)};
    Rational total = 0;
    for (int c = 0; c < 3; ++c) {
      const Graph& h = *colours[c].h;
      const Rational& pc = colours[c].p;
      for (const SubsetTerm& term : edge_subsets(h, 1)) {
        total += density(term.subgraph, kernels[c]) /
                 (Rational(h.edge_count()) * rational_pow(pc, term.size - 1));
      }
    }
    points[i] = GridPoint{deltas[i], -1, total};
  }
  WitnessReport report = sweep_report("multicolour", p, std::move(points));
  report.lead_colour = colours[0].input_index;
  const char* names[3] = {"b1", "b2", "b3"};
  const Graph* inputs[3] = {&h1, &h2, &h3};
  for (int i = 0; i < 3; ++i) {
    long long b = 0;
    for (const SubsetTerm& term : edge_subsets(*inputs[i], 1)) {
      if (term.non_isolated >= *k + 1) ++b;
    }
    report.tallies[names[i]] = b;
  }
  return report;
}

ColourSystem extend_witness_colour(const ColourSystem& sys, const Graph& h_next,
                                   const Rational& q_next) {
  check_probability(q_next, "q_next");
  const Rational keep = Rational(1) - q_next;
  std::vector<ColourEntry> entries;
  for (const ColourEntry& entry : sys.entries) {
    entries.push_back({entry.h, entry.p * keep, scale_values(entry.w, keep)});
  }
  entries.push_back({h_next, q_next, constant_kernel(q_next)});
  return make_colour_system(std::move(entries));
}

}  // namespace commonpair
