#include <Eigen/Dense>

#include <cmath>
#include <random>
#include <vector>

#include "commonpair/certificate.hpp"

namespace commonpair {

namespace {

using Mat8 = Eigen::Matrix<double, 8, 8>;

Mat8 project_psd(const Mat8& m) {
  const Mat8 sym = (m + m.transpose()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Mat8> eig(sym);
  Eigen::Matrix<double, 8, 1> clipped = eig.eigenvalues().cwiseMax(0.0);
  return eig.eigenvectors() * clipped.asDiagonal() *
         eig.eigenvectors().transpose();
}

}  // namespace

FloatCertificate search(const Graph& h1, const Graph& h2, const Rational& p1,
                        int iterations, unsigned seed) {
  if (p1 <= 0 || p1 >= 1) throw DomainError("p1 must lie strictly in (0,1)");
  if (iterations < 0) throw DomainError("iterations must be nonnegative");
  for (const Graph* h : {&h1, &h2}) {
    if (h->n < 1 || h->n > 5 || h->edge_count() < 1) {
      throw DomainError("search needs non-empty graphs on at most 5 vertices");
    }
  }
  const Rational p2 = Rational(1) - p1;
  const GraphClassTable& table = five_vertex_classes();
  const GluingTable& gluing = gluing_table();
  const int classes = static_cast<int>(table.classes.size());

  // Constraint data: g_s(M) = base[s] - sum_i <M_i, C[i][s]>.
  std::vector<double> base(classes);
  std::vector<std::array<Mat8, 4>> coeff(classes);
  for (int s = 0; s < classes; ++s) {
    const Graph& j = table.classes[s].rep;
    const Rational lhs =
        t_inj(h1, j) / (Rational(h1.edge_count()) *
                        rational_pow(p1, h1.edge_count() - 1)) +
        t_inj(h2, complement(j)) / (Rational(h2.edge_count()) *
                                    rational_pow(p2, h2.edge_count() - 1));
    base[s] = lhs.convert_to<double>();
    for (int row = 1; row <= 4; ++row) {
      Mat8 c = Mat8::Zero();
      for (int a = 1; a <= 8; ++a)
        for (int b = 1; b <= 8; ++b) {
          c(a - 1, b - 1) =
              gluing.coefficient(row, a, b, j.edges).convert_to<double>();
        }
      coeff[s][row - 1] = c;
    }
  }

  std::array<Mat8, 4> m;
  for (auto& mi : m) mi = Mat8::Zero();
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(-1e-6, 1e-6);
    for (auto& mi : m) {
      Mat8 r;
      for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) r(a, b) = jitter(rng);
      mi = project_psd(r);
    }
  }

  auto margins = [&](const std::array<Mat8, 4>& mm, std::vector<double>& g) {
    double worst = std::numeric_limits<double>::infinity();
    for (int s = 0; s < classes; ++s) {
      double v = base[s];
      for (int i = 0; i < 4; ++i) {
        v -= (mm[i].array() * coeff[s][i].array()).sum();
      }
      g[s] = v;
      worst = std::min(worst, v);
    }
    return worst;
  };

  std::vector<double> g(classes);
  double best_objective = margins(m, g);
  std::array<Mat8, 4> best = m;
  double tail_improvement = 0.0;

  for (int it = 0; it < iterations; ++it) {
    const double t = iterations > 1 ? double(it) / (iterations - 1) : 0.0;
    // Softmin temperature and step size anneal together.
    const double mu = 0.05 * std::pow(2e-4 / 0.05, t);
    const double eta = 2.0 * mu;

    margins(m, g);
    double min_g = *std::min_element(g.begin(), g.end());
    double weight_sum = 0.0;
    std::vector<double> w(classes);
    for (int s = 0; s < classes; ++s) {
      w[s] = std::exp(-(g[s] - min_g) / mu);
      weight_sum += w[s];
    }
    for (int s = 0; s < classes; ++s) w[s] /= weight_sum;

    for (int i = 0; i < 4; ++i) {
      Mat8 grad = Mat8::Zero();
      for (int s = 0; s < classes; ++s) grad += w[s] * coeff[s][i];
      m[i] = project_psd(m[i] - eta * grad);
    }

    const double objective = margins(m, g);
    if (objective > best_objective) {
      if (it >= iterations * 9 / 10) {
        tail_improvement += objective - best_objective;
      }
      best_objective = objective;
      best = m;
    }
  }

  FloatCertificate fc;
  fc.p1 = p1;
  fc.h1 = h1;
  fc.h2 = h2;
  fc.iterations = iterations;
  fc.converged = iterations > 0 && tail_improvement < 1e-7;
  fc.objective = margins(best, g);
  for (int i = 0; i < 4; ++i)
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) fc.matrices[i][a][b] = best[i](a, b);
  return fc;
}

}  // namespace commonpair
