#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>

#include "trirec/gaussian.hpp"
#include "trirec/rational.hpp"

namespace trirec {

// Floating value m * 2^e with |m| in [0.5, 1) (m = 0 for zero). The exponent
// lives in an int64, so boundary scans that leave double range keep full
// relative precision; renormalization is by powers of two and thus lossless.
class ScaledReal {
 public:
  ScaledReal() : m_(0.0), e_(0) {}

  static ScaledReal from_double(double v);
  static ScaledReal from_rational(const Rational& v);
  static ScaledReal from_parts(double mantissa, std::int64_t exp2);

  bool is_zero() const { return m_ == 0.0; }
  int sign() const { return m_ > 0 ? 1 : (m_ < 0 ? -1 : 0); }

  double mantissa() const { return m_; }
  std::int64_t exponent2() const { return e_; }

  // Collapses to a plain double; over/underflows saturate to inf/0.
  double to_double() const;

  // log10 |value|; -inf for zero.
  double log10_abs() const;

  // (mantissa in [1,10), decimal exponent) for CSV export.
  std::pair<double, std::int64_t> decimal_parts() const;

  friend ScaledReal operator*(const ScaledReal& a, const ScaledReal& b);
  friend ScaledReal operator+(const ScaledReal& a, const ScaledReal& b);
  friend ScaledReal operator-(const ScaledReal& a, const ScaledReal& b);
  friend ScaledReal operator-(const ScaledReal& a) {
    return from_parts(-a.m_, a.e_);
  }

  friend ScaledReal abs(const ScaledReal& a) {
    return from_parts(std::fabs(a.m_), a.e_);
  }

  // |a| < |b|.
  friend bool abs_less(const ScaledReal& a, const ScaledReal& b);

 private:
  double m_;
  std::int64_t e_;
};

// Complex value (mr + i*mi) * 2^e with max(|mr|,|mi|) in [0.5, 1).
class ScaledComplex {
 public:
  ScaledComplex() : m_(0.0, 0.0), e_(0) {}

  static ScaledComplex from_complex(std::complex<double> v);
  static ScaledComplex from_grational(const GRational& v);
  static ScaledComplex from_parts(std::complex<double> m, std::int64_t e);

  bool is_zero() const { return m_.real() == 0.0 && m_.imag() == 0.0; }
  std::complex<double> mantissa() const { return m_; }
  std::int64_t exponent2() const { return e_; }

  std::complex<double> to_complex() const;
  ScaledReal abs() const;

  friend ScaledComplex operator*(const ScaledComplex& a, const ScaledComplex& b);
  friend ScaledComplex operator+(const ScaledComplex& a, const ScaledComplex& b);

 private:
  std::complex<double> m_;
  std::int64_t e_;
};

}  // namespace trirec
