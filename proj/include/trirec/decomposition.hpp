#pragma once

#include <vector>

#include "json.hpp"
#include "trirec/family.hpp"

namespace trirec {

// Regrouping of the majorant series sum_i |cbar_i| |x|^i by the number of
// B-factors (GroupByB) or A-factors (GroupByA) along each expansion path.
enum class DecompMode { GroupByB, GroupByA };

// Path-sum table over the normalized moduli: entry (p, tau) is the sum over
// all step sequences from position 0 to position p containing exactly tau
// B-steps (an A-step advances one position with factor |Abar_{N+pos}|, a
// B-step advances two with factor |Bbar_{N+pos+1}|) of the factor products.
// Exact; requires a real family.
std::vector<std::vector<Rational>> path_table(const CoefficientFamily& f,
                                              long N, int M);

// Truncated tau-th sub-series: every nested sum cut at I_max, equivalently
// the z-degree cut at I_max, with nonnegative terms only (monotone in I_max).
// GroupByB: the z power counts A-steps; GroupByA: it counts B-steps.
Rational subseries_y_tau(const CoefficientFamily& f, long N, int tau,
                         const Rational& z, int I_max, DecompMode mode);

struct DecompositionReport {
  long N = 0;
  int M = 0;
  DecompMode mode = DecompMode::GroupByB;
  Rational eta;  // GroupByB: |B| x^2, GroupByA: |A| x
  Rational z;    // GroupByB: |A| x,   GroupByA: |B| x^2
  std::vector<Rational> lhs_coeffs;  // |cbar_i|, i = 0..M
  std::vector<Rational> rhs_coeffs;  // regrouped coefficient of |x|^i
  Rational max_abs_discrepancy;      // must be 0 in exact mode
  Rational lhs_value;                // sum lhs_coeffs[i] x^i
  Rational rhs_value;                // sub-series assembly, matched truncation
};

// Compares the degree-<=M truncation of sum_i |cbar_i| |x|^i against the
// regrouped right side, coefficient by coefficient; truncations are matched
// by total |x|-degree (an A-step contributes 1, a B-step 2).
DecompositionReport decomposition_check(const CoefficientFamily& f, long N,
                                        int M, const Rational& x_abs,
                                        DecompMode mode = DecompMode::GroupByB);

nlohmann::ordered_json to_json(const DecompositionReport& report);

}  // namespace trirec
