#pragma once

#include <initializer_list>
#include <vector>

#include "trirec/gaussian.hpp"

namespace trirec {

// Dense polynomial in the recurrence index n, ascending coefficient order.
// Degrees in practice stay <= 4. The zero polynomial is the empty
// coefficient list (degree() == -1).
class PolyN {
 public:
  PolyN() = default;
  explicit PolyN(std::vector<GRational> coeffs);
  PolyN(std::initializer_list<GRational> coeffs)
      : PolyN(std::vector<GRational>(coeffs)) {}

  static PolyN zero() { return PolyN(); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  // Zero beyond the degree.
  const GRational& coeff(int j) const;
  const GRational& leading() const;  // requires a nonzero polynomial
  const std::vector<GRational>& coeffs() const { return coeffs_; }

  GRational eval(const Integer& n) const;  // Horner, exact
  GRational eval(long n) const { return eval(Integer(n)); }

  bool is_real() const;

  // Same roots, coefficients scaled by a nonzero constant.
  PolyN scaled(const GRational& factor) const;

  friend bool operator==(const PolyN& a, const PolyN& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<GRational> coeffs_;
};

}  // namespace trirec
