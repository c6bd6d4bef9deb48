#pragma once

#include "trirec/gaussian.hpp"
#include "trirec/rational.hpp"

namespace trirec {

// (a)_n = a (a+1) ... (a+n-1), exact.
Rational pochhammer(const Rational& a, long n);
GRational pochhammer(const GRational& a, long n);

// (a)_n / (b)_n by paired factor products; throws ZeroDenominator when a
// factor of (b)_n vanishes.
Rational pochhammer_ratio(const Rational& a, const Rational& b, long n);

// Gamma(top)/Gamma(bottom) for positive integer arguments, exact.
// Throws DomainError at gamma poles (arguments <= 0).
Rational gamma_ratio(long top, long bottom);

// The Pochhammer-ratio lower bound used against nested tail sums:
//   LHS(i) = (N + 2(r+1) - h + i2r)_i / (N + 2(r+1) + i2r)_i
//   RHS(i) = Gamma(N + 2(r+1) + i2r) / (2 Gamma(N + 2(r+1) - h + i2r)) * i^-h
// with positive integers N, h, N - h > 0, r >= 1; the bound holds for all
// i >= some threshold m (the asymptotic prefactor is halved, which buys
// validity only for large i).
Rational pochhammer_tail_lhs(long N, long h, long r, long i2r, long i_next);
Rational pochhammer_tail_bound(long N, long h, long r, long i2r, long i_next);

// LHS(i_next) >= RHS(i_next), decided in exact arithmetic.
bool verify_eq16(long N, long h, long r, long i2r, long i_next);

// Smallest m >= 1 with LHS(i) >= RHS(i) for every i >= m. The ratio
// LHS/RHS = 2 i^h / prod_{j<h}(N + 2(r+1) - h + i2r + i + j) is increasing
// in i, so the crossing is unique; scans up to i_cap and throws
// WitnessNotFound past it.
long eq16_threshold(long N, long h, long r, long i2r, long i_cap = 100000000L);

}  // namespace trirec
