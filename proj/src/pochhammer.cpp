#include "trirec/pochhammer.hpp"

#include "trirec/errors.hpp"

namespace trirec {

Rational pochhammer(const Rational& a, long n) {
  if (n < 0)
    throw make_error(ErrorKind::DomainError, "pochhammer needs n >= 0");
  Rational prod = 1;
  Rational factor = a;
  for (long k = 0; k < n; ++k) {
    prod *= factor;
    factor += 1;
  }
  return prod;
}

GRational pochhammer(const GRational& a, long n) {
  if (n < 0)
    throw make_error(ErrorKind::DomainError, "pochhammer needs n >= 0");
  GRational prod(1);
  GRational factor = a;
  for (long k = 0; k < n; ++k) {
    prod *= factor;
    factor += GRational(1);
  }
  return prod;
}

Rational pochhammer_ratio(const Rational& a, const Rational& b, long n) {
  Rational prod = 1;
  for (long k = 0; k < n; ++k) {
    Rational den = b + k;
    if (sgn(den) == 0)
      throw make_error(ErrorKind::ZeroDenominator,
                       "(b)_n has a zero factor at k = " + std::to_string(k));
    prod *= (a + k) / den;
  }
  return prod;
}

Rational gamma_ratio(long top, long bottom) {
  if (top <= 0 || bottom <= 0)
    throw make_error(ErrorKind::DomainError,
                     "gamma ratio at a nonpositive integer");
  Rational prod = 1;
  if (top >= bottom) {
    for (long k = bottom; k < top; ++k) prod *= k;
  } else {
    for (long k = top; k < bottom; ++k) prod /= k;
  }
  return prod;
}

namespace {

void check_eq16_args(long N, long h, long r, long i2r, long i_next) {
  if (N <= 0 || h < 0 || r < 1 || i2r < 0 || i_next < 0)
    throw make_error(ErrorKind::DomainError, "bad tail-bound arguments");
  if (N - h <= 0)
    throw make_error(ErrorKind::DomainError, "tail bound needs N - h > 0");
}

}  // namespace

Rational pochhammer_tail_lhs(long N, long h, long r, long i2r, long i_next) {
  check_eq16_args(N, h, r, i2r, i_next);
  const long base = N + 2 * (r + 1) + i2r;
  return pochhammer_ratio(Rational(base - h), Rational(base), i_next);
}

Rational pochhammer_tail_bound(long N, long h, long r, long i2r, long i_next) {
  check_eq16_args(N, h, r, i2r, i_next);
  if (i_next == 0)
    throw make_error(ErrorKind::DomainError, "tail bound needs i_next >= 1");
  const long base = N + 2 * (r + 1) + i2r;
  Rational g = gamma_ratio(base, base - h);
  return g / 2 / pow_rational(Rational(i_next), h);
}

bool verify_eq16(long N, long h, long r, long i2r, long i_next) {
  return pochhammer_tail_lhs(N, h, r, i2r, i_next) >=
         pochhammer_tail_bound(N, h, r, i2r, i_next);
}

long eq16_threshold(long N, long h, long r, long i2r, long i_cap) {
  check_eq16_args(N, h, r, i2r, 0);
  if (h == 0) return 1;
  const long base = N + 2 * (r + 1) + i2r;
  // LHS/RHS = 2 i^h / prod_{j<h}(base - h + i + j), increasing in i.
  auto holds = [&](long i) {
    Integer lhs = 2;
    Integer ii(i);
    Integer ipow;
    mpz_pow_ui(ipow.get_mpz_t(), ii.get_mpz_t(), static_cast<unsigned long>(h));
    lhs *= ipow;
    Integer rhs = 1;
    for (long j = 0; j < h; ++j) rhs *= Integer(base - h + i + j);
    return lhs >= rhs;
  };
  if (!holds(i_cap))
    throw WitnessNotFound(i_cap, "eq16 threshold beyond scan cap");
  long lo = 1, hi = i_cap;  // invariant: holds(hi), first true in (lo-1, hi]
  if (holds(lo)) return lo;
  while (hi - lo > 1) {
    long mid = lo + (hi - lo) / 2;
    if (holds(mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

}  // namespace trirec
