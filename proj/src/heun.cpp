#include "trirec/heun.hpp"

#include <cmath>

#include "trirec/errors.hpp"

namespace trirec {

HeunParams make_heun_params(GRational alpha, GRational beta, GRational gamma,
                            GRational delta, GRational q, IndicialRoot root) {
  HeunParams p;
  p.alpha = std::move(alpha);
  p.beta = std::move(beta);
  p.delta = std::move(delta);
  p.q = std::move(q);
  p.lambda = root == IndicialRoot::Zero ? GRational(0) : GRational(1) - gamma;
  p.gamma = std::move(gamma);
  return p;
}

namespace {

// The value -r, when it is a nonnegative integer (a root of (n + r)).
std::optional<long> nonneg_integer_root(const GRational& r) {
  if (!r.is_real()) return std::nullopt;
  Rational root = -r.re;
  if (sgn(root) < 0 || root.get_den() != 1) return std::nullopt;
  if (!root.get_num().fits_slong_p()) return std::nullopt;
  return root.get_num().get_si();
}

}  // namespace

CoefficientFamily heun_family(const HeunParams& p) {
  const GRational& l = p.lambda;
  const GRational s = l - p.beta + p.gamma + p.delta - GRational(1);

  CoefficientFamily f;
  // linear coefficient 2l - beta + gamma + delta - 1 = l + s
  f.a_num = PolyN{l * s - p.q, l + s, GRational(1)};
  f.a_den = PolyN{(l + GRational(1)) * (l + p.gamma),
                  GRational(2) * l + GRational(1) + p.gamma, GRational(1)};
  f.b_num = PolyN{p.beta * (l + p.alpha - GRational(1)), p.beta};
  f.b_den = f.a_den;
  f.n_min = 1;

  // Denominator roots are -(l+1) and -(l+gamma); either landing on a
  // nonnegative integer makes the Frobenius series ill-defined.
  if (auto n = nonneg_integer_root(l + GRational(1)))
    throw PoleAtIndex(*n, "a_den root (lambda + 1 branch)");
  if (auto n = nonneg_integer_root(l + p.gamma))
    throw PoleAtIndex(*n, "a_den root (lambda + gamma branch)");
  return f;
}

std::pair<std::complex<double>, std::complex<double>>
HypergeometricReduction::roots_approx() const {
  const std::complex<double> s = to_complex(a_plus_b);
  const std::complex<double> prod = to_complex(ab);
  const std::complex<double> disc = s * s - 4.0 * prod;
  const std::complex<double> rt = std::sqrt(disc);
  return {(s + rt) / 2.0, (s - rt) / 2.0};
}

HypergeometricReduction hypergeometric_reduction(const HeunParams& p) {
  if (!p.beta.is_zero())
    throw make_error(ErrorKind::DomainError,
                     "hypergeometric reduction needs beta = 0");
  HypergeometricReduction red;
  red.c = p.gamma;
  red.a_plus_b = p.gamma + p.delta - GRational(1);
  red.ab = -p.q;
  GRational disc = red.a_plus_b * red.a_plus_b - GRational(4) * red.ab;
  if (disc.is_real() && sgn(disc.re) >= 0) {
    if (auto rt = exact_root(disc.re, 2)) {
      GRational a = (red.a_plus_b + GRational(*rt)) / GRational(2);
      GRational b = (red.a_plus_b - GRational(*rt)) / GRational(2);
      red.exact_roots = std::make_pair(a, b);
    }
  }
  return red;
}

GaussVerdict gauss_boundary_test(const GRational& a, const GRational& b,
                                 const GRational& c) {
  return c.re > a.re + b.re ? GaussVerdict::AbsolutelyConvergent
                            : GaussVerdict::Divergent;
}

GaussVerdict gauss_boundary_test(const HypergeometricReduction& red) {
  return red.c.re > red.a_plus_b.re ? GaussVerdict::AbsolutelyConvergent
                                    : GaussVerdict::Divergent;
}

Rational gauss_2f1_partial(const GRational& a_plus_b, const GRational& ab,
                           const GRational& c, const Rational& x, long terms) {
  if (!a_plus_b.is_real() || !ab.is_real() || !c.is_real())
    throw make_error(ErrorKind::NonRealFamily,
                     "exact 2F1 partial sums need real symmetric functions");
  Rational sum = 0;
  Rational term = 1;
  for (long n = 0; n < terms; ++n) {
    sum += term;
    Rational num = Rational(n) * n + a_plus_b.re * n + ab.re;  // (a+n)(b+n)
    Rational den = (c.re + n) * (n + 1);
    if (sgn(den) == 0)
      throw make_error(ErrorKind::ZeroDenominator,
                       "2F1 term denominator vanishes at n = " + std::to_string(n));
    term *= num * x / den;
  }
  return sum;
}

double gauss_2f1_partial(double a, double b, double c, double x, long terms) {
  double sum = 0.0;
  double term = 1.0;
  for (long n = 0; n < terms; ++n) {
    sum += term;
    const double dn = static_cast<double>(n);
    term *= (a + dn) * (b + dn) * x / ((c + dn) * (dn + 1.0));
  }
  return sum;
}

}  // namespace trirec
