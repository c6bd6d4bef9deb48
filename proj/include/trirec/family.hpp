#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "trirec/polynomial.hpp"

namespace trirec {

// The recurrence family d_{n+1} = A_n d_n + B_n d_{n-1} with
// A_n = a_num(n)/a_den(n) and B_n = b_num(n)/b_den(n), applying from n_min.
struct CoefficientFamily {
  PolyN a_num;
  PolyN a_den;
  PolyN b_num;  // may be the zero polynomial (two-term degenerate case)
  PolyN b_den;
  int n_min = 1;

  bool is_real() const {
    return a_num.is_real() && a_den.is_real() && b_num.is_real() &&
           b_den.is_real();
  }
};

// A_n at index n, exact. Throws PoleAtIndex when a_den(n) = 0.
GRational coeff_a(const CoefficientFamily& f, long n);

// B_n at index n, exact. Throws PoleAtIndex when b_den(n) = 0.
GRational coeff_b(const CoefficientFamily& f, long n);

// Throws PoleAtIndex if a_den or b_den has a root at any integer of
// [lo, hi] (the invariant checked before a generation run).
void require_no_poles(const CoefficientFamily& f, long lo, long hi);

// Monic-normalized view of the family:
//   A_n = A * (n^p + Omega_{p-1} n^{p-1} + ...) / (n^t + omega_{t-1} n^{t-1} + ...)
// and likewise for B with Theta/theta. `lead_a`/`lead_b` are the leading
// coefficient ratios; `b_decay_gap` = deg(b_den) - deg(b_num).
struct NormalizedFamily {
  int t = 0;             // deg(a_den)
  GRational lead_a;      // A
  GRational lead_b;      // leading ratio of B_n (the theorem's B when the gap is 1)
  int a_decay_gap = 0;   // deg(a_den) - deg(a_num)
  int b_decay_gap = 0;   // deg(b_den) - deg(b_num)
  std::vector<GRational> big_omega;    // numerator of A_n made monic
  std::vector<GRational> small_omega;  // denominator of A_n made monic
  std::vector<GRational> big_theta;    // numerator of B_n made monic
  std::vector<GRational> small_theta;  // denominator of B_n made monic

  GRational a_at(long n) const;  // reconstructs A_n from the normalized data
  GRational b_at(long n) const;
};

// Throws UnsupportedShape unless the degrees fit the Theorem-1 shape
// (deg a_num = deg a_den, B_n decaying) or the Theorem-2 shape
// (deg b_num = deg b_den, A_n decaying).
NormalizedFamily normalize(const CoefficientFamily& f);

// JSON document: {"a_num": ["-2","3","1"], "a_den": [...], "b_num": [...],
// "b_den": [...], "n_min": 1}; coefficients ascending, rational strings
// ("p/q" or integer; a "+<im>i" suffix for Gaussian-rational entries).
CoefficientFamily family_from_json(const nlohmann::json& j);
nlohmann::ordered_json family_to_json(const CoefficientFamily& f);

CoefficientFamily family_from_file(const std::string& path);

}  // namespace trirec
