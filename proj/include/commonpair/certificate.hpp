#pragma once

#include <array>
#include <string>
#include <vector>

#include "commonpair/flags.hpp"
#include "commonpair/graph.hpp"

namespace commonpair {

using RatMatrix = std::vector<std::vector<Rational>>;

// Data proving a pair (h1, h2) is (p1, 1-p1)-good: four 8x8 symmetric
// rational matrices keyed to the flag basis. Verification is exact.
struct Certificate {
  Rational p1;
  Graph h1;
  Graph h2;
  std::array<RatMatrix, 4> matrices;

  bool operator==(const Certificate&) const = default;
};

Certificate make_certificate(Rational p1, Graph h1, Graph h2,
                             std::array<RatMatrix, 4> matrices);

// Exact LDL^T positive-semidefiniteness test. No eigenvalues are ever
// computed. On rejection, `witness` holds z with z^T m z < 0.
struct PsdResult {
  bool psd = false;
  std::vector<Rational> witness;
};
PsdResult psd_check(const RatMatrix& m);

// Per-graph margin of the certificate inequality at a 5-vertex graph j:
//   t_inj(h1,j)/(e1 p1^(e1-1)) + t_inj(h2,~j)/(e2 p2^(e2-1))
//     - sum M_i(a,b) c(F_{i,a},F_{i,b},j) - (p1/e1 + p2/e2).
Rational slack(const Certificate& cert, const Graph& j);

struct VerificationReport {
  std::array<PsdResult, 4> psd;
  // Keyed by canonical bitmask, ascending; one entry per 5-vertex class.
  std::vector<std::pair<std::uint64_t, Rational>> slacks;
  Rational min_slack;
  int equality_count = 0;
  bool certified = false;
  std::string reason;  // empty when certified
};

// Four PSD checks plus all 34 slacks; certified iff everything passes.
VerificationReport verify(const Certificate& cert);

Certificate load_certificate(const std::string& path);
void save_certificate(const Certificate& cert, const std::string& path);

// Untrusted floating-point certificate, as produced by `search` or read
// back for rounding. Only `round_certificate` + `verify` makes it a proof.
struct FloatCertificate {
  Rational p1;
  Graph h1;
  Graph h2;
  std::array<std::array<std::array<double, 8>, 8>, 4> matrices{};
  double objective = 0.0;
  int iterations = 0;
  bool converged = false;
};

FloatCertificate to_float(const Certificate& cert);

// Best-effort numerical maximization of the minimum slack margin over the
// PSD cone (projected softmin ascent). No optimality guarantee; the
// reported objective from a PSD iterate is still a sound lower bound.
FloatCertificate search(const Graph& h1, const Graph& h2, const Rational& p1,
                        int iterations, unsigned seed = 1);

// Nearest multiples of 1/denominator, symmetrized first. The result is
// only trusted after it passes verify.
Certificate round_certificate(const FloatCertificate& fc,
                              long long denominator);

FloatCertificate load_float_certificate(const std::string& path);
void save_float_certificate(const FloatCertificate& fc,
                            const std::string& path);

// Guard for the fixed flag ordering: searches the orbit-respecting
// within-row permutations of the basis (36 x 4 x 4 x 36 candidates) for one
// under which the first certificate's 34 slacks all vanish and no listed
// certificate goes negative. Returns the identity when the shipped order
// is already right; throws when no candidate works.
struct FlagOrder {
  std::array<std::array<int, 8>, 4> perm;  // perm[row-1][a-1] = position 1..8
  bool identity() const;
};
FlagOrder ordering_recovery(const std::vector<Certificate>& certs);

}  // namespace commonpair
