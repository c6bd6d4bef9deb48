#pragma once

#include <optional>
#include <utility>

#include "trirec/family.hpp"

namespace trirec {

// Parameters of the confluent Heun equation
//   y'' + (beta + gamma/x + delta/(x-1)) y' + (alpha beta x - q)/(x(x-1)) y = 0
// together with the chosen indicial exponent lambda in {0, 1-gamma}.
struct HeunParams {
  GRational alpha, beta, gamma, delta, q;
  GRational lambda;
};

enum class IndicialRoot { Zero, OneMinusGamma };

HeunParams make_heun_params(GRational alpha, GRational beta, GRational gamma,
                            GRational delta, GRational q,
                            IndicialRoot root = IndicialRoot::Zero);

// Frobenius recurrence of the confluent Heun series around x = 0:
//   a_num = n^2 + (2l - beta + gamma + delta - 1) n + l(l - beta + gamma + delta - 1) - q
//   a_den = b_den = n^2 + (2l + 1 + gamma) n + (l + 1)(l + gamma)
//   b_num = beta (n + l + alpha - 1)
// Throws PoleAtIndex when the denominator has a nonnegative-integer root
// (the chosen indicial root yields an ill-defined Frobenius series).
CoefficientFamily heun_family(const HeunParams& p);

// beta = 0 reduction to the hypergeometric equation
//   x(1-x) y'' + (c - (a+b+1) x) y' - a b y = 0
// with c = gamma and {a, b} the roots of z^2 - (gamma+delta-1) z - q = 0.
// The symmetric functions a+b and ab are always exact; the individual roots
// are exact only when the discriminant is a perfect rational square.
struct HypergeometricReduction {
  GRational c;
  GRational a_plus_b;
  GRational ab;
  std::optional<std::pair<GRational, GRational>> exact_roots;
  std::pair<std::complex<double>, std::complex<double>> roots_approx() const;
};

HypergeometricReduction hypergeometric_reduction(const HeunParams& p);

// Gauss's test for a 2F1 series at |x| = 1: absolutely convergent iff
// Re(c) > Re(a + b).
enum class GaussVerdict { AbsolutelyConvergent, Divergent };
GaussVerdict gauss_boundary_test(const GRational& a, const GRational& b,
                                 const GRational& c);
GaussVerdict gauss_boundary_test(const HypergeometricReduction& red);

// Partial sum of 2F1(a,b;c;x) up to `terms` terms, with the term products
// (a)_n (b)_n carried through the exact symmetric functions a+b and ab so
// complex-conjugate root pairs stay in rational arithmetic.
Rational gauss_2f1_partial(const GRational& a_plus_b, const GRational& ab,
                           const GRational& c, const Rational& x, long terms);

// Double-precision partial-sum scan of 2F1 at real parameters (boundary
// growth studies up to n ~ 10^5).
double gauss_2f1_partial(double a, double b, double c, double x, long terms);

}  // namespace trirec
