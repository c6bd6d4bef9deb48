#include "trirec/scaled_float.hpp"

#include <algorithm>
#include <limits>

namespace trirec {

namespace {
// Beyond this exponent gap the smaller addend is below one ulp of the larger.
constexpr std::int64_t kAlignCutoff = 64;
}  // namespace

ScaledReal ScaledReal::from_parts(double mantissa, std::int64_t exp2) {
  ScaledReal r;
  if (mantissa == 0.0) return r;
  int shift = 0;
  r.m_ = std::frexp(mantissa, &shift);
  r.e_ = exp2 + shift;
  return r;
}

ScaledReal ScaledReal::from_double(double v) { return from_parts(v, 0); }

ScaledReal ScaledReal::from_rational(const Rational& v) {
  if (sgn(v) == 0) return {};
  long ne = 0, de = 0;
  double nm = mpz_get_d_2exp(&ne, v.get_num().get_mpz_t());
  double dm = mpz_get_d_2exp(&de, v.get_den().get_mpz_t());
  return from_parts(nm / dm, static_cast<std::int64_t>(ne) - de);
}

double ScaledReal::to_double() const {
  if (is_zero()) return 0.0;
  if (e_ > 1100) return m_ > 0 ? std::numeric_limits<double>::infinity()
                               : -std::numeric_limits<double>::infinity();
  if (e_ < -1100) return 0.0;
  return std::ldexp(m_, static_cast<int>(e_));
}

double ScaledReal::log10_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  return static_cast<double>(e_) * 0.30102999566398119521 +
         std::log10(std::fabs(m_));
}

std::pair<double, std::int64_t> ScaledReal::decimal_parts() const {
  if (is_zero()) return {0.0, 0};
  double l10 = log10_abs();
  std::int64_t d = static_cast<std::int64_t>(std::floor(l10));
  double mant = std::pow(10.0, l10 - static_cast<double>(d));
  if (mant >= 10.0) {
    mant /= 10.0;
    ++d;
  }
  if (mant < 1.0) {
    mant *= 10.0;
    --d;
  }
  return {sign() < 0 ? -mant : mant, d};
}

ScaledReal operator*(const ScaledReal& a, const ScaledReal& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return ScaledReal::from_parts(a.m_ * b.m_, a.e_ + b.e_);
}

ScaledReal operator+(const ScaledReal& a, const ScaledReal& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.e_ - b.e_ > kAlignCutoff) return a;
  if (b.e_ - a.e_ > kAlignCutoff) return b;
  std::int64_t e = std::max(a.e_, b.e_);
  double m = std::ldexp(a.m_, static_cast<int>(a.e_ - e)) +
             std::ldexp(b.m_, static_cast<int>(b.e_ - e));
  return ScaledReal::from_parts(m, e);
}

ScaledReal operator-(const ScaledReal& a, const ScaledReal& b) {
  return a + (-b);
}

bool abs_less(const ScaledReal& a, const ScaledReal& b) {
  if (a.is_zero()) return !b.is_zero();
  if (b.is_zero()) return false;
  if (a.e_ != b.e_) return a.e_ < b.e_;
  return std::fabs(a.m_) < std::fabs(b.m_);
}

ScaledComplex ScaledComplex::from_parts(std::complex<double> m, std::int64_t e) {
  ScaledComplex r;
  double mag = std::max(std::fabs(m.real()), std::fabs(m.imag()));
  if (mag == 0.0) return r;
  int shift = 0;
  std::frexp(mag, &shift);
  r.m_ = {std::ldexp(m.real(), -shift), std::ldexp(m.imag(), -shift)};
  r.e_ = e + shift;
  return r;
}

ScaledComplex ScaledComplex::from_complex(std::complex<double> v) {
  return from_parts(v, 0);
}

ScaledComplex ScaledComplex::from_grational(const GRational& v) {
  ScaledReal re = ScaledReal::from_rational(v.re);
  ScaledReal im = ScaledReal::from_rational(v.im);
  if (re.is_zero() && im.is_zero()) return {};
  std::int64_t e = std::max(re.is_zero() ? std::numeric_limits<std::int64_t>::min() : re.exponent2(),
                            im.is_zero() ? std::numeric_limits<std::int64_t>::min() : im.exponent2());
  auto part = [&](const ScaledReal& s) -> double {
    if (s.is_zero()) return 0.0;
    std::int64_t gap = e - s.exponent2();
    if (gap > kAlignCutoff) return 0.0;
    return std::ldexp(s.mantissa(), -static_cast<int>(gap));
  };
  return from_parts({part(re), part(im)}, e);
}

std::complex<double> ScaledComplex::to_complex() const {
  if (is_zero()) return {0.0, 0.0};
  if (e_ > 1100 || e_ < -1100) {
    double s = e_ > 0 ? std::numeric_limits<double>::infinity() : 0.0;
    return {m_.real() == 0.0 ? 0.0 : (m_.real() > 0 ? s : -s),
            m_.imag() == 0.0 ? 0.0 : (m_.imag() > 0 ? s : -s)};
  }
  int e = static_cast<int>(e_);
  return {std::ldexp(m_.real(), e), std::ldexp(m_.imag(), e)};
}

ScaledReal ScaledComplex::abs() const {
  if (is_zero()) return {};
  return ScaledReal::from_parts(std::abs(m_), e_);
}

ScaledComplex operator*(const ScaledComplex& a, const ScaledComplex& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return ScaledComplex::from_parts(a.m_ * b.m_, a.e_ + b.e_);
}

ScaledComplex operator+(const ScaledComplex& a, const ScaledComplex& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.e_ - b.e_ > kAlignCutoff) return a;
  if (b.e_ - a.e_ > kAlignCutoff) return b;
  std::int64_t e = std::max(a.e_, b.e_);
  int sa = static_cast<int>(a.e_ - e);
  int sb = static_cast<int>(b.e_ - e);
  std::complex<double> m = {
      std::ldexp(a.m_.real(), sa) + std::ldexp(b.m_.real(), sb),
      std::ldexp(a.m_.imag(), sa) + std::ldexp(b.m_.imag(), sb)};
  return ScaledComplex::from_parts(m, e);
}

}  // namespace trirec
