#include "commonpair/certificate.hpp"

#include <algorithm>
#include <numeric>

namespace commonpair {

namespace {

void check_symmetric_8x8(const RatMatrix& m) {
  if (m.size() != 8) throw DomainError("certificate matrices must be 8x8");
  for (const auto& row : m) {
    if (row.size() != 8) throw DomainError("certificate matrices must be 8x8");
  }
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      if (m[i][j] != m[j][i]) {
        throw DomainError("certificate matrices must be symmetric");
      }
    }
}

Rational edge_term(const Graph& h, const Rational& p, const Graph& j) {
  const int e = h.edge_count();
  return t_inj(h, j) / (Rational(e) * rational_pow(p, e - 1));
}

}  // namespace

Certificate make_certificate(Rational p1, Graph h1, Graph h2,
                             std::array<RatMatrix, 4> matrices) {
  if (p1 <= 0 || p1 >= 1) throw DomainError("p1 must lie strictly in (0,1)");
  for (const Graph* h : {&h1, &h2}) {
    if (h->n < 1 || h->n > 5) {
      throw DomainError("certificate graphs must have 1..5 vertices");
    }
    if (h->edge_count() < 1) {
      throw DomainError("certificate graphs must be non-empty");
    }
  }
  for (const RatMatrix& m : matrices) check_symmetric_8x8(m);
  return Certificate{std::move(p1), h1, h2, std::move(matrices)};
}

PsdResult psd_check(const RatMatrix& m) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != n) {
      throw DomainError("psd_check needs a square matrix");
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (m[i][j] != m[j][i]) {
        throw DomainError("psd_check needs a symmetric matrix");
      }
    }

  RatMatrix a = m;
  RatMatrix mult(n, std::vector<Rational>(n, 0));  // unit lower multipliers
  for (int i = 0; i < n; ++i) mult[i][i] = 1;

  // Turns a direction y in the current Schur coordinates into z with
  // z^T m z = y^T S y, by back-substituting through the multipliers.
  auto back_substitute = [&](std::vector<Rational> y) {
    for (int i = n - 1; i >= 0; --i) {
      for (int r = i + 1; r < n; ++r) y[i] -= mult[r][i] * y[r];
    }
    return y;
  };

  for (int k = 0; k < n; ++k) {
    const Rational pivot = a[k][k];
    if (pivot > 0) {
      for (int i = k + 1; i < n; ++i) mult[i][k] = a[i][k] / pivot;
      for (int i = k + 1; i < n; ++i)
        for (int j = k + 1; j < n; ++j) a[i][j] -= mult[i][k] * a[k][j];
      continue;
    }
    if (pivot == 0) {
      int bad = -1;
      for (int j = k + 1; j < n; ++j) {
        if (a[k][j] != 0) {
          bad = j;
          break;
        }
      }
      if (bad < 0) continue;  // zero pivot with zero row: still PSD so far
      // [[0, c], [c, d]] is indefinite; pick t with 2tc + d = -1.
      std::vector<Rational> y(n, 0);
      y[bad] = 1;
      y[k] = -(a[bad][bad] + 1) / (2 * a[k][bad]);
      return PsdResult{false, back_substitute(std::move(y))};
    }
    std::vector<Rational> y(n, 0);
    y[k] = 1;
    return PsdResult{false, back_substitute(std::move(y))};
  }
  return PsdResult{true, {}};
}

Rational slack(const Certificate& cert, const Graph& j) {
  if (j.n != 5) throw DomainError("slack is defined on 5-vertex graphs");
  const Rational p2 = Rational(1) - cert.p1;
  const std::uint64_t canon = canonical_mask(5, j.edges);
  Rational lhs = edge_term(cert.h1, cert.p1, j) +
                 edge_term(cert.h2, p2, complement(j));
  const GluingTable& table = gluing_table();
  Rational contraction = 0;
  for (int row = 1; row <= 4; ++row)
    for (int a = 1; a <= 8; ++a)
      for (int b = 1; b <= 8; ++b) {
        const Rational c = table.coefficient(row, a, b, canon);
        if (c != 0) contraction += cert.matrices[row - 1][a - 1][b - 1] * c;
      }
  const Rational rhs = cert.p1 / cert.h1.edge_count() + p2 / cert.h2.edge_count();
  return lhs - contraction - rhs;
}

VerificationReport verify(const Certificate& cert) {
  VerificationReport report;
  for (int i = 0; i < 4; ++i) report.psd[i] = psd_check(cert.matrices[i]);

  const GraphClassTable& table = five_vertex_classes();
  const int classes = static_cast<int>(table.classes.size());
  std::vector<Rational> values(classes);
#pragma omp parallel for schedule(dynamic)
  for (int s = 0; s < classes; ++s) {
    values[s] = slack(cert, table.classes[s].rep);
  }
  report.min_slack = values[0];
  for (int s = 0; s < classes; ++s) {
    report.slacks.emplace_back(table.classes[s].rep.edges, values[s]);
    if (values[s] < report.min_slack) report.min_slack = values[s];
    if (values[s] == 0) ++report.equality_count;
  }

  report.certified = true;
  for (int i = 0; i < 4; ++i) {
    if (!report.psd[i].psd) {
      report.certified = false;
      report.reason = "matrix M" + std::to_string(i + 1) +
                      " is not positive semidefinite";
      return report;
    }
  }
  if (report.min_slack < 0) {
    report.certified = false;
    report.reason = "negative slack " + format_rational(report.min_slack);
  }
  return report;
}

FloatCertificate to_float(const Certificate& cert) {
  FloatCertificate fc;
  fc.p1 = cert.p1;
  fc.h1 = cert.h1;
  fc.h2 = cert.h2;
  for (int i = 0; i < 4; ++i)
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) {
        fc.matrices[i][a][b] = cert.matrices[i][a][b].convert_to<double>();
      }
  const Rational p2 = Rational(1) - cert.p1;
  const Rational rhs = cert.p1 / cert.h1.edge_count() + p2 / cert.h2.edge_count();
  const VerificationReport report = verify(cert);
  fc.objective = (report.min_slack + rhs).convert_to<double>();
  fc.converged = true;
  return fc;
}

Certificate round_certificate(const FloatCertificate& fc,
                              long long denominator) {
  if (denominator < 1) throw DomainError("denominator must be at least 1");
  std::array<RatMatrix, 4> matrices;
  for (int i = 0; i < 4; ++i) {
    matrices[i].assign(8, std::vector<Rational>(8, 0));
    for (int a = 0; a < 8; ++a)
      for (int b = a; b < 8; ++b) {
        const double sym = (fc.matrices[i][a][b] + fc.matrices[i][b][a]) / 2.0;
        const long long scaled = std::llround(sym * static_cast<double>(denominator));
        matrices[i][a][b] = matrices[i][b][a] = Rational(scaled, denominator);
      }
  }
  return make_certificate(fc.p1, fc.h1, fc.h2, std::move(matrices));
}

bool FlagOrder::identity() const {
  for (const auto& row : perm)
    for (int a = 0; a < 8; ++a) {
      if (row[a] != a + 1) return false;
    }
  return true;
}

namespace {

using RowPerm = std::array<int, 8>;  // perm[a-1] = position 1..8

// Candidates respect the root-symmetry orbits of each row's apex subsets:
// rows 1 and 4 permute the singleton slots 2..4 and the pair slots 5..7
// independently (36), rows 2 and 3 may swap each of their two 2-orbits (4).
// The identity is always listed first.
std::vector<RowPerm> row_candidates(int row) {
  std::vector<RowPerm> out;
  const RowPerm id = {1, 2, 3, 4, 5, 6, 7, 8};
  if (row == 1 || row == 4) {
    // next_permutation from sorted order puts the identity first.
    int singles[3] = {0, 1, 2};
    do {
      int pairs[3] = {0, 1, 2};
      do {
        RowPerm p = id;
        for (int i = 0; i < 3; ++i) p[1 + i] = 2 + singles[i];
        for (int i = 0; i < 3; ++i) p[4 + i] = 5 + pairs[i];
        out.push_back(p);
      } while (std::next_permutation(pairs, pairs + 3));
    } while (std::next_permutation(singles, singles + 3));
    return out;
  }
  const std::pair<int, int> orbit_a = row == 2 ? std::pair{2, 3} : std::pair{3, 4};
  const std::pair<int, int> orbit_b = row == 2 ? std::pair{6, 7} : std::pair{5, 6};
  for (int swap_a = 0; swap_a < 2; ++swap_a)
    for (int swap_b = 0; swap_b < 2; ++swap_b) {
      RowPerm p = id;
      if (swap_a) std::swap(p[orbit_a.first - 1], p[orbit_a.second - 1]);
      if (swap_b) std::swap(p[orbit_b.first - 1], p[orbit_b.second - 1]);
      out.push_back(p);
    }
  return out;
}

}  // namespace

FlagOrder ordering_recovery(const std::vector<Certificate>& certs) {
  if (certs.empty()) throw DomainError("ordering_recovery needs a certificate");
  const GraphClassTable& table = five_vertex_classes();
  const GluingTable& gluing = gluing_table();
  const int classes = static_cast<int>(table.classes.size());

  const std::array<std::vector<RowPerm>, 4> candidates = {
      row_candidates(1), row_candidates(2), row_candidates(3),
      row_candidates(4)};

  // Target per certificate: slack + contraction, so a candidate matches
  // when its contraction vector reproduces the target exactly.
  std::vector<std::vector<Rational>> target(certs.size());
  // contrib[c][row-1][candidate][s]
  std::vector<std::array<std::vector<std::vector<Rational>>, 4>> contrib(
      certs.size());

  for (std::size_t c = 0; c < certs.size(); ++c) {
    const Certificate& cert = certs[c];
    const Rational p2 = Rational(1) - cert.p1;
    const Rational rhs =
        cert.p1 / cert.h1.edge_count() + p2 / cert.h2.edge_count();
    target[c].resize(classes);
    for (int s = 0; s < classes; ++s) {
      const Graph& j = table.classes[s].rep;
      target[c][s] = edge_term(cert.h1, cert.p1, j) +
                     edge_term(cert.h2, p2, complement(j)) - rhs;
    }
    for (int row = 1; row <= 4; ++row) {
      auto& rows = contrib[c][row - 1];
      rows.resize(candidates[row - 1].size());
      for (std::size_t cand = 0; cand < candidates[row - 1].size(); ++cand) {
        const RowPerm& perm = candidates[row - 1][cand];
        std::vector<Rational> vec(classes, 0);
        for (int a = 1; a <= 8; ++a)
          for (int b = 1; b <= 8; ++b) {
            const Rational& weight = cert.matrices[row - 1][a - 1][b - 1];
            if (weight == 0) continue;
            const GluingTable::Cell& cell =
                gluing.cell(row, perm[a - 1], perm[b - 1]);
            vec[table.index.at(cell.canon_p)] += weight * cell.coeff_p;
            vec[table.index.at(cell.canon_q)] += weight * cell.coeff_q;
          }
        rows[cand] = std::move(vec);
      }
    }
  }

  for (std::size_t i1 = 0; i1 < candidates[0].size(); ++i1)
    for (std::size_t i2 = 0; i2 < candidates[1].size(); ++i2)
      for (std::size_t i3 = 0; i3 < candidates[2].size(); ++i3)
        for (std::size_t i4 = 0; i4 < candidates[3].size(); ++i4) {
          const std::size_t pick[4] = {i1, i2, i3, i4};
          bool ok = true;
          for (std::size_t c = 0; c < certs.size() && ok; ++c) {
            const bool need_exact = c == 0;
            for (int s = 0; s < classes && ok; ++s) {
              Rational value = target[c][s];
              for (int row = 0; row < 4; ++row) {
                value -= contrib[c][row][pick[row]][s];
              }
              if (need_exact ? (value != 0) : (value < 0)) ok = false;
            }
          }
          if (ok) {
            FlagOrder order;
            for (int row = 0; row < 4; ++row) {
              order.perm[row] = candidates[row][pick[row]];
            }
            return order;
          }
        }
  throw DomainError(
      "ordering_recovery: no orbit-respecting flag order reproduces the "
      "certificate; data is corrupt");
}

}  // namespace commonpair
