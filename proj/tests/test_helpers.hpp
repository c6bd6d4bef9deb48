#pragma once

#include <random>
#include <vector>

#include "trirec/family.hpp"
#include "trirec/heun.hpp"

namespace trirec::testing {

inline CoefficientFamily flagship_heun() {
  // lambda = 0, beta = 1, gamma = 4, delta = 1, q = 2, alpha = 1
  return heun_family(make_heun_params(GRational(1), GRational(1), GRational(4),
                                      GRational(1), GRational(2)));
}

// One expansion path: steps of size 1 (A, factor A_{N+pos}) or size 2
// (B, factor B_{N+pos+1}); value = product of |factors|. Exhaustive
// enumeration is the independent oracle for the sub-series regrouping --
// at most Fibonacci(M+1) paths.
struct PathOracle {
  const CoefficientFamily* f;
  long N;

  Rational abs_a(long n) const {
    GRational v = coeff_a(*f, n);
    return abs(v.re);
  }
  Rational abs_b(long n) const {
    GRational v = coeff_b(*f, n);
    return abs(v.re);
  }

  // Sums path products into buckets[b_steps] for all paths landing exactly
  // on position `target`.
  void enumerate(int target, std::vector<Rational>& buckets) const {
    buckets.assign(static_cast<std::size_t>(target / 2) + 1, Rational(0));
    walk(0, 0, Rational(1), target, buckets);
  }

 private:
  void walk(int pos, int b_steps, const Rational& value, int target,
            std::vector<Rational>& buckets) const {
    if (pos == target) {
      buckets[static_cast<std::size_t>(b_steps)] += value;
      return;
    }
    if (pos + 1 <= target)
      walk(pos + 1, b_steps, value * abs_a(N + pos), target, buckets);
    if (pos + 2 <= target)
      walk(pos + 2, b_steps + 1, value * abs_b(N + pos + 1), target, buckets);
  }
};

// Deterministic generator of random Theorem-1-shape families with rational
// coefficients and no denominator roots at nonnegative integers: both
// denominators are products of (n + positive), numerator degrees follow the
// theorem shape.
class RandomFamilies {
 public:
  explicit RandomFamilies(unsigned seed) : rng_(seed) {}

  Rational small_rational(int num_range = 9, int den_range = 4) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return Rational(num(rng_), den(rng_));
  }

  Rational positive_rational(int num_range = 9, int den_range = 4) {
    std::uniform_int_distribution<int> num(1, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return Rational(num(rng_), den(rng_));
  }

  // Monic-times-leading polynomial of the given degree whose real roots are
  // all strictly negative: prod_j (n + r_j) with r_j > 0, scaled by `lead`.
  PolyN negative_root_poly(int degree, const Rational& lead) {
    std::vector<GRational> coeffs{GRational(lead)};
    for (int j = 0; j < degree; ++j) {
      Rational root = positive_rational(8, 3) + Rational(1, 7);
      // multiply by (n + root)
      std::vector<GRational> next(coeffs.size() + 1);
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        next[i + 1] += coeffs[i];
        next[i] += coeffs[i] * GRational(root);
      }
      coeffs = std::move(next);
    }
    return PolyN(std::move(coeffs));
  }

  PolyN random_poly(int degree, bool nonzero_lead = true) {
    std::vector<GRational> coeffs;
    for (int j = 0; j <= degree; ++j) coeffs.push_back(GRational(small_rational()));
    if (nonzero_lead && coeffs.back().is_zero())
      coeffs.back() = GRational(positive_rational());
    return PolyN(std::move(coeffs));
  }

  // Theorem-1 shape: deg(a_num) = deg(a_den) = t, deg(b_num) = t - 1,
  // denominators pole-free on n >= 0.
  CoefficientFamily thm_one_family(int t) {
    CoefficientFamily f;
    f.a_den = negative_root_poly(t, Rational(1));
    f.b_den = negative_root_poly(t, Rational(1));
    f.a_num = random_poly(t);
    f.b_num = random_poly(t - 1);
    if (f.b_num.is_zero()) f.b_num = PolyN{GRational(1)};
    return f;
  }

  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace trirec::testing
