#pragma once

#include <ostream>
#include <utility>
#include <vector>

#include "json.hpp"
#include "trirec/classification.hpp"
#include "trirec/family.hpp"

namespace trirec {

// Validated inequality parameters certifying the divergence lower bound:
// for every n in [N, scan_limit] the growth-side normalized modulus exceeds
// 1 - h/n (and 1 - eps), and the decay side exceeds 1/(n + h0). Margins are
// the exact minima of the differences over the scanned range.
struct WitnessParams {
  long N = 0;
  long h = 0;
  long h0 = 0;
  long m = 0;  // validity threshold for the Pochhammer tail bound
  Rational eps;
  Rational K;
  long scan_limit = 0;
  ProofSubcase subcase = ProofSubcase::NotApplicable;
  RecurrenceKind kind = RecurrenceKind::Unsupported;
  Rational margin_growth;  // min_n (|growth_bar(n)| - (1 - h/n))
  Rational margin_decay;   // min_n (|decay_bar(n)| - 1/(n + h0))
  long margin_growth_at = 0;
  long margin_decay_at = 0;
};

// Finds the smallest h for the sub-case (Case1: smallest integer exceeding
// the sub-leading difference; Case2: by scan), raised to 2 when smaller so
// the convergent sum_k k^-h factor stays finite, then the smallest N with
// N - h > 0 and h/N < eps making the growth inequality hold through
// scan_limit, then the smallest valid h0. Throws WitnessNotFound with the
// violating index when the range cannot be validated.
WitnessParams find_witness(const CoefficientFamily& f, const Rational& eps,
                           long scan_limit, const Rational& K = Rational(1, 2));

// Re-checks the two witness inequalities over [N, scan_limit] in exact
// arithmetic; returns true and refreshes the margins on success.
bool check_witness(const CoefficientFamily& f, WitnessParams& w);

// sum_{j=m}^{M} 1/(offset + j), exact (binary-split accumulation).
Rational harmonic_partial(long m, long M, long offset);

// sum_{k=m}^{M} k^-h, exact.
Rational power_sum_partial(long m, long M, long h);

// Partial sum of 3F2(a1,a2,a3; b1,b2; x) with exact Pochhammer-product
// terms; 0 <= x < 1, b1 and b2 not nonpositive integers.
Rational pfq_3f2_partial(const Rational& a1, const Rational& a2,
                         const Rational& a3, const Rational& b1,
                         const Rational& b2, const Rational& x, long terms);

// Truncated final display of the divergence lower bound:
//   (1-K)(1-eps)^m / 2 * sum_{p=1}^{p_max} Gamma(N+m+2p+2) /
//     ((N+m+2p+1+h0) Gamma(N+m+2p+2-h)) * eta^{p+1}
//     * prod_{l<p} sum_{j=m}^{M} 1/(N+2l+1+j+h0) * sum_{k=m}^{M} k^-h
// (the 3F2 factor is dropped as in the paper's last inequality; every
// remaining term is nonnegative, so the value is monotone in M and p_max).
Rational lower_bound_witness(const WitnessParams& w, const Rational& eta,
                             int p_max, long M);

enum class BoundarySide { ThmOneBoundary, ThmTwoBoundary };

struct GrowthScan {
  double x_abs = 0.0;
  std::vector<std::pair<long, double>> checkpoints;  // (M, S_M)
  double alpha = 0.0;  // fit S_M ~ alpha log M + beta over the top decade
  double beta = 0.0;
};

// Partial sums S_M = sum_{n<=M} |d_n| x_abs^n at x_abs = radius_fraction
// times the disc radius (1/|A| or 1/sqrt|B|), sampled at the checkpoints;
// scaled-float arithmetic throughout so boundary runs to M ~ 1e5 are safe.
GrowthScan boundary_scan(const CoefficientFamily& f, BoundarySide side,
                         const std::vector<long>& checkpoints,
                         const Rational& radius_fraction = Rational(1));

// Least-squares fit of v ~ alpha * log M + beta over the given points.
std::pair<double, double> fit_log_slope(
    const std::vector<std::pair<long, double>>& points);

nlohmann::ordered_json to_json(const WitnessParams& w);
nlohmann::ordered_json to_json(const GrowthScan& scan);
void write_scan_csv(std::ostream& out, const GrowthScan& scan);

}  // namespace trirec
