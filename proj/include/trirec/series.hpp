#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <ostream>
#include <vector>

#include "trirec/classification.hpp"
#include "trirec/family.hpp"
#include "trirec/scaled_float.hpp"

namespace trirec::series {

// Exact generator for d_{n+1} = A_n d_n + B_n d_{n-1}, d_1 = A_0 d_0.
// Internally d_n = d0 * e_n / prod_{k<n} D(k) with D(k) = a_den(k) b_den(k)
// after clearing the coefficient denominators, so the e_n are Gaussian
// integers and no per-step gcd is taken. Exact scans to n ~ 10^4 stay cheap.
class ExactGenerator {
 public:
  explicit ExactGenerator(const CoefficientFamily& f,
                          GRational d0 = GRational(1));

  void extend(long n);  // ensure d_0..d_n exist; throws PoleAtIndex
  long generated() const { return static_cast<long>(e_.size()) - 1; }

  GRational d(long n);           // exact d_n (materializes the division)
  Rational abs2_d(long n);       // |d_n|^2 exact
  // |d_{n+step}/d_n|^2 exact; throws DomainError when d_n = 0.
  Rational ratio_abs2(long n, int step = 1);

 private:
  const GRational& e(long n) const { return e_[static_cast<std::size_t>(n)]; }
  GRational ladder_denominator(long n) const;  // prod_{k<n} D(k)

  GRational d0_;
  PolyN a_num_, a_den_, b_num_, b_den_;  // integer-cleared
  std::vector<GRational> e_;
  std::vector<GRational> dvals_;  // D(k) cache, dvals_[k] = D(k)
};

std::vector<GRational> generate_exact(const CoefficientFamily& f, GRational d0,
                                      long M);

// S_k = sum_{n<=k} |d_n| x_abs^n for k = 0..M, exact. Real family, x_abs >= 0.
std::vector<Rational> abs_partial_sums(const CoefficientFamily& f, GRational d0,
                                       const Rational& x_abs, long M);

// Scaled-float d_n (coefficients evaluated in double; values carried with a
// base-2 exponent so |d_n| far outside double range stays representable).
std::vector<ScaledComplex> generate_scaled(const CoefficientFamily& f,
                                           std::complex<double> d0, long M);

// Term engine: t_n = d_n x^n via t_{n+1} = (A_n x) t_n + (B_n x^2) t_{n-1}.
// At the boundary |A x| = 1 the terms stay O(poly), so no overflow. Calls
// `on_term(n, |t_n|, running_sum_of_abs)` for every n.
void scan_abs_terms(const CoefficientFamily& f, std::complex<double> d0,
                    double x_abs, long M,
                    const std::function<void(long, double, double)>& on_term);

struct EvalResult {
  std::complex<double> value;  // sum_{n<=terms} d_n x^{n+lambda}
  double error_bound = 0.0;    // sound bound on the dropped tail
  bool converged = false;
  long terms = 0;
};

// Evaluates the series at x strictly inside the disc; throws NotInDisc when
// |x| >= radius and NoConvergenceWithinBudget when the tail criterion is not
// reached by m_max terms. The tail bound dominates the recurrence tail by a
// two-term comparison sequence with ratio lam = (al + sqrt(al^2+4*be))/2,
// al >= sup_{n>=M}|A_n x|, be >= sup_{n>=M}|B_n x^2|; once lam < 1 the tail
// is at most max(|t_M|,|t_{M-1}|) * lam/(1-lam).
EvalResult eval_series(const CoefficientFamily& f, const GRational& lambda,
                       const GRational& x, double tol, long m_max,
                       GRational d0 = GRational(1));

// Sound upper bounds (sup_{n>=M}|A_n|, sup_{n>=M}|B_n|) from the coefficient
// envelope of the rational functions; nullopt while the denominator lower
// bound is not yet positive at this M.
std::optional<std::pair<Rational, Rational>> tail_sup_bounds(
    const CoefficientFamily& f, long M);

// Majorant sequences of the proof: |cbar_0| = 1, |cbar_1| = |A_N|,
// |cbar_{k+1}| = |A_{N+k}| |cbar_k| + |B_{N+k}| |cbar_{k-1}|, and chat the
// same with every index shifted to N+1. Exact; requires a real family.
struct MajorantRun {
  long N = 0;
  std::vector<Rational> cbar;
  std::vector<Rational> chat;
};
MajorantRun majorant_sequences(const CoefficientFamily& f, long N, long M);

// One evaluated run, exportable as CSV with columns
// n, Re(d_n), Im(d_n), scale_exponent, S_n.
struct SeriesRun {
  GRational lambda;
  GRational x;
  std::vector<ScaledComplex> d;
  std::vector<std::complex<double>> partial_sums;
  std::optional<double> truncation_error_bound;
  bool converged = false;
};

SeriesRun make_series_run(const CoefficientFamily& f, const GRational& lambda,
                          const GRational& x, long M);
void write_series_csv(std::ostream& out, const SeriesRun& run);

}  // namespace trirec::series
