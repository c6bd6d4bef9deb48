#pragma once

#include <complex>
#include <string>
#include <string_view>

#include "trirec/rational.hpp"

namespace trirec {

// Complex number with exact rational real and imaginary parts. Field
// operations are closed, so recurrence coefficients built from
// Gaussian-rational parameters stay exact.
struct GRational {
  Rational re;
  Rational im;

  GRational() : re(0), im(0) {}
  GRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-*)
  GRational(long r) : re(r), im(0) {}                 // NOLINT(google-explicit-*)
  GRational(int r) : re(r), im(0) {}                  // NOLINT(google-explicit-*)
  GRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  // |z|^2, always an exact rational.
  Rational abs2() const { return re * re + im * im; }

  GRational conj() const { return {re, -im}; }

  friend GRational operator+(const GRational& a, const GRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GRational operator-(const GRational& a, const GRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GRational operator-(const GRational& a) { return {-a.re, -a.im}; }
  friend GRational operator*(const GRational& a, const GRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GRational operator/(const GRational& a, const GRational& b);

  GRational& operator+=(const GRational& o) { return *this = *this + o; }
  GRational& operator-=(const GRational& o) { return *this = *this - o; }
  GRational& operator*=(const GRational& o) { return *this = *this * o; }
  GRational& operator/=(const GRational& o) { return *this = *this / o; }

  friend bool operator==(const GRational& a, const GRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GRational& a, const GRational& b) {
    return !(a == b);
  }
};

// Accepts "3/4", "-2", "1.5", "3/4+1/2i", "-1-2i", "i", "-i", "2i".
GRational parse_grational(std::string_view text);

// Canonical form: pure real -> "p/q"; otherwise "re+imi" / "re-imi",
// with pure-imaginary printed as "imi".
std::string to_string(const GRational& value);

std::complex<double> to_complex(const GRational& value);

}  // namespace trirec
