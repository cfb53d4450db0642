#include "commonpair/kernel.hpp"

#include <algorithm>

namespace commonpair {

namespace {

constexpr long long kAssignmentCap = 1'000'000'000;

void validate_kernel(const StepKernel& u) {
  const int m = u.block_count();
  if (m == 0) throw DomainError("step kernel needs at least one block");
  Rational total = 0;
  for (const Rational& mass : u.masses) {
    if (mass < 0) throw DomainError("block masses must be nonnegative");
    total += mass;
  }
  if (total != 1) throw DomainError("block masses must sum to exactly 1");
  if (static_cast<int>(u.values.size()) != m) {
    throw DomainError("value matrix does not match block count");
  }
  for (const auto& row : u.values) {
    if (static_cast<int>(row.size()) != m) {
      throw DomainError("value matrix is not square");
    }
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (u.values[i][j] != u.values[j][i]) {
        throw DomainError("value matrix must be symmetric");
      }
    }
  if (u.bounds) {
    const auto& [lo, hi] = *u.bounds;
    if (lo > hi) throw DomainError("kernel bounds must satisfy lo <= hi");
    for (const auto& row : u.values)
      for (const Rational& v : row) {
        if (v < lo || v > hi) {
          throw DomainError("kernel value outside declared bounds");
        }
      }
  }
}

// Blocks of zero mass contribute nothing to any assignment sum.
std::vector<int> positive_blocks(const StepKernel& u) {
  std::vector<int> out;
  for (int i = 0; i < u.block_count(); ++i) {
    if (u.masses[i] > 0) out.push_back(i);
  }
  return out;
}

long long assignment_space(int blocks, int vertices) {
  long long space = 1;
  for (int i = 0; i < vertices; ++i) {
    if (space > kAssignmentCap / blocks) {
      throw DomainError("density assignment space exceeds 1e9 blocks^vertices");
    }
    space *= blocks;
  }
  return space;
}

void sum_assignments_rec(const Graph& h, const StepKernel& u,
                         const std::vector<int>& blocks, bool induced, int v,
                         int* assign, const Rational& acc, Rational& total) {
  if (acc == 0) return;
  if (v == h.n) {
    total += acc;
    return;
  }
  for (int b : blocks) {
    Rational term = acc * u.masses[b];
    for (int w = 0; w < v && term != 0; ++w) {
      if (h.has_edge(w, v)) {
        term *= u.value(assign[w], b);
      } else if (induced) {
        term *= Rational(1) - u.value(assign[w], b);
      }
    }
    assign[v] = b;
    sum_assignments_rec(h, u, blocks, induced, v + 1, assign, term, total);
  }
}

Rational sum_assignments_serial(const Graph& h, const StepKernel& u,
                                bool induced) {
  const std::vector<int> blocks = positive_blocks(u);
  assignment_space(static_cast<int>(blocks.size()), h.n);
  int assign[Graph::kMaxVertices];
  Rational total = 0;
  sum_assignments_rec(h, u, blocks, induced, 0, assign, Rational(1), total);
  return total;
}

Rational sum_assignments_parallel(const Graph& h, const StepKernel& u,
                                  bool induced) {
  const std::vector<int> blocks = positive_blocks(u);
  const int base = static_cast<int>(blocks.size());
  const long long space = assignment_space(base, h.n);
  const auto pairs = h.edge_list();
  Rational total = 0;
#pragma omp parallel
  {
    Rational local = 0;
    int assign[Graph::kMaxVertices];
#pragma omp for schedule(static) nowait
    for (long long idx = 0; idx < space; ++idx) {
      long long rest = idx;
      for (int v = 0; v < h.n; ++v) {
        assign[v] = blocks[rest % base];
        rest /= base;
      }
      Rational term = 1;
      for (int v = 0; v < h.n && term != 0; ++v) term *= u.masses[assign[v]];
      if (induced) {
        for (int a = 0; a < h.n && term != 0; ++a)
          for (int b = a + 1; b < h.n && term != 0; ++b) {
            if (h.has_edge(a, b)) {
              term *= u.value(assign[a], assign[b]);
            } else {
              term *= Rational(1) - u.value(assign[a], assign[b]);
            }
          }
      } else {
        for (const auto& [a, b] : pairs) {
          term *= u.value(assign[a], assign[b]);
          if (term == 0) break;
        }
      }
      local += term;
    }
#pragma omp critical
    total += local;
  }
  return total;
}

// Small instances are cheaper serially; the cutoff just needs to keep the
// parallel path on the big sums.
constexpr long long kParallelCutoff = 1 << 15;

Rational sum_assignments(const Graph& h, const StepKernel& u, bool induced) {
  const long long space =
      assignment_space(static_cast<int>(positive_blocks(u).size()), h.n);
  if (space < kParallelCutoff) return sum_assignments_serial(h, u, induced);
  return sum_assignments_parallel(h, u, induced);
}

}  // namespace

bool StepKernel::is_graphon() const {
  for (const auto& row : values)
    for (const Rational& v : row) {
      if (v < 0 || v > 1) return false;
    }
  return true;
}

StepKernel make_step_kernel(std::vector<Rational> masses,
                            std::vector<std::vector<Rational>> values,
                            std::optional<std::pair<Rational, Rational>> bounds) {
  StepKernel u{std::move(masses), std::move(values), std::move(bounds)};
  validate_kernel(u);
  return u;
}

StepKernel constant_kernel(const Rational& c) {
  return make_step_kernel({Rational(1)}, {{c}}, std::pair{c, c});
}

StepKernel kernel_B() {
  const Rational half(1, 2);
  return make_step_kernel({half, half},
                          {{Rational(-1), Rational(1)},
                           {Rational(1), Rational(-1)}},
                          std::pair{Rational(-1), Rational(1)});
}

StepKernel kernel_K() {
  const Rational quarter(1, 4);
  std::vector<std::vector<Rational>> values(4, std::vector<Rational>(4, -1));
  for (int i = 0; i < 4; ++i) values[i][i] = 1;
  return make_step_kernel({quarter, quarter, quarter, quarter}, values,
                          std::pair{Rational(-1), Rational(1)});
}

StepKernel two_block_identity_graphon() {
  const Rational half(1, 2);
  return make_step_kernel({half, half},
                          {{Rational(1), Rational(0)},
                           {Rational(0), Rational(1)}},
                          std::pair{Rational(0), Rational(1)});
}

Rational density(const Graph& h, const StepKernel& u) {
  return sum_assignments(h, u, false);
}

Rational density_reference(const Graph& h, const StepKernel& u) {
  return sum_assignments_serial(h, u, false);
}

Rational t_ind(const Graph& j, const StepKernel& w) {
  if (!w.is_graphon()) throw DomainError("t_ind requires a graphon");
  return sum_assignments(j, w, true);
}

Rational t_ind_reference(const Graph& j, const StepKernel& w) {
  if (!w.is_graphon()) throw DomainError("t_ind requires a graphon");
  return sum_assignments_serial(j, w, true);
}

Rational d_density(const Graph& j, const StepKernel& w) {
  return Rational(factorial(j.n), BigInt(aut_count(j))) * t_ind(j, w);
}

StepKernel complement_graphon(const StepKernel& w) {
  if (!w.is_graphon()) {
    throw DomainError("complement_graphon requires a graphon");
  }
  StepKernel out = w;
  for (auto& row : out.values)
    for (Rational& v : row) v = Rational(1) - v;
  out.bounds = std::pair{Rational(0), Rational(1)};
  return out;
}

StepKernel affine_shift(const StepKernel& u, const Rational& p) {
  StepKernel out = u;
  for (auto& row : out.values)
    for (Rational& v : row) v += p;
  if (out.bounds) {
    out.bounds->first += p;
    out.bounds->second += p;
  }
  return out;
}

StepKernel scale_values(const StepKernel& u, const Rational& c) {
  StepKernel out = u;
  for (auto& row : out.values)
    for (Rational& v : row) v *= c;
  if (out.bounds) {
    Rational lo = out.bounds->first * c;
    Rational hi = out.bounds->second * c;
    if (lo > hi) std::swap(lo, hi);
    out.bounds = std::pair{lo, hi};
  }
  return out;
}

StepKernel scale_down(const StepKernel& u, const Rational& delta) {
  if (delta <= 0 || delta > 1) {
    throw DomainError("scale_down requires 0 < delta <= 1");
  }
  if (delta == 1) return u;
  const int m = u.block_count();
  StepKernel out;
  out.masses.reserve(m + 1);
  for (const Rational& mass : u.masses) out.masses.push_back(mass * delta);
  out.masses.push_back(Rational(1) - delta);
  out.values.assign(m + 1, std::vector<Rational>(m + 1, Rational(0)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out.values[i][j] = u.values[i][j];
  if (u.bounds) {
    out.bounds = std::pair{std::min(u.bounds->first, Rational(0)),
                           std::max(u.bounds->second, Rational(0))};
  }
  return out;
}

StepKernel tensor(const StepKernel& u1, const StepKernel& u2) {
  const int m1 = u1.block_count();
  const int m2 = u2.block_count();
  if (static_cast<long long>(m1) * m2 > 4096) {
    throw DomainError("tensor product would exceed 4096 blocks");
  }
  const int m = m1 * m2;
  StepKernel out;
  out.masses.reserve(m);
  for (int i = 0; i < m1; ++i)
    for (int j = 0; j < m2; ++j) out.masses.push_back(u1.masses[i] * u2.masses[j]);
  out.values.assign(m, std::vector<Rational>(m));
  for (int i = 0; i < m1; ++i)
    for (int j = 0; j < m2; ++j)
      for (int k = 0; k < m1; ++k)
        for (int l = 0; l < m2; ++l) {
          out.values[i * m2 + j][k * m2 + l] = u1.values[i][k] * u2.values[j][l];
        }
  if (u1.bounds && u2.bounds) {
    const Rational candidates[4] = {
        u1.bounds->first * u2.bounds->first,
        u1.bounds->first * u2.bounds->second,
        u1.bounds->second * u2.bounds->first,
        u1.bounds->second * u2.bounds->second};
    out.bounds = std::pair{*std::min_element(candidates, candidates + 4),
                           *std::max_element(candidates, candidates + 4)};
  }
  return out;
}

Rational tensor_power_density(const Graph& h, const StepKernel& u, int power) {
  if (power < 0) throw DomainError("tensor power must be nonnegative");
  return rational_pow(density(h, u), power);
}

std::optional<Rational> is_d_regular(const StepKernel& u) {
  std::optional<Rational> d;
  for (int i = 0; i < u.block_count(); ++i) {
    if (u.masses[i] == 0) continue;
    Rational row = 0;
    for (int j = 0; j < u.block_count(); ++j) row += u.masses[j] * u.value(i, j);
    if (!d) {
      d = row;
    } else if (*d != row) {
      return std::nullopt;
    }
  }
  return d;
}

std::vector<StepKernel> align_blocks(const std::vector<StepKernel>& kernels) {
  if (kernels.empty()) return {};
  bool aligned = true;
  for (const StepKernel& u : kernels) {
    if (u.masses != kernels.front().masses) aligned = false;
  }
  if (aligned) return kernels;

  long long blocks = 1;
  for (const StepKernel& u : kernels) {
    blocks *= u.block_count();
    if (blocks > 4096) {
      throw DomainError("common block refinement would exceed 4096 blocks");
    }
  }
  const int k = static_cast<int>(kernels.size());
  const int m = static_cast<int>(blocks);
  // Product partition: block = tuple of one block index per kernel, mass =
  // product of the component masses; kernel i reads only component i.
  std::vector<std::vector<int>> tuple(m, std::vector<int>(k));
  for (int b = 0; b < m; ++b) {
    int rest = b;
    for (int i = k - 1; i >= 0; --i) {
      tuple[b][i] = rest % kernels[i].block_count();
      rest /= kernels[i].block_count();
    }
  }
  std::vector<StepKernel> out(k);
  for (int i = 0; i < k; ++i) {
    out[i].bounds = kernels[i].bounds;
    out[i].masses.resize(m);
    out[i].values.assign(m, std::vector<Rational>(m));
  }
  for (int b = 0; b < m; ++b) {
    Rational mass = 1;
    for (int i = 0; i < k; ++i) mass *= kernels[i].masses[tuple[b][i]];
    for (int i = 0; i < k; ++i) out[i].masses[b] = mass;
  }
  for (int b = 0; b < m; ++b)
    for (int c = 0; c < m; ++c)
      for (int i = 0; i < k; ++i) {
        out[i].values[b][c] = kernels[i].values[tuple[b][i]][tuple[c][i]];
      }
  return out;
}

std::pair<StepKernel, StepKernel> refine_to_common_blocks(const StepKernel& u1,
                                                          const StepKernel& u2) {
  auto refined = align_blocks({u1, u2});
  return {refined[0], refined[1]};
}

}  // namespace commonpair
