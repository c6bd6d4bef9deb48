#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "trirec/family.hpp"

namespace trirec {

enum class RecurrenceKind { ThmOne, ThmTwo, TwoTerm, Unsupported };
enum class BoundaryVerdict { DivergesPerPaper, GaussConditional, Unknown };
enum class ProofSubcase { Case1, Case2, NotApplicable };

const char* to_string(RecurrenceKind k);
const char* to_string(BoundaryVerdict v);
const char* to_string(ProofSubcase c);

// Radius of the disc of absolute convergence, kept exact: the radius is
// base^(1/root_power) with `base` a nonnegative rational (root_power is 1
// for real leading ratios, 2 or 4 when a modulus of a complex ratio enters).
struct DiscRadius {
  bool infinite = false;
  Rational base = 0;
  unsigned long root_power = 1;

  static DiscRadius make_infinite();
  static DiscRadius from_root(Rational base, unsigned long power);

  // Exactly representable radius, when base is a perfect power.
  std::optional<Rational> exact() const;
  double approx() const;
  std::string decimal(int digits) const;  // "inf" for the infinite radius

  bool operator==(const DiscRadius& o) const;
};

struct RecurrenceClass {
  RecurrenceKind kind = RecurrenceKind::Unsupported;
  DiscRadius disc_radius;
  BoundaryVerdict boundary_verdict = BoundaryVerdict::Unknown;
  ProofSubcase subcase = ProofSubcase::NotApplicable;
};

// Degree-shape classification per the two theorem hypotheses; the disc
// radius is 1/|A| (Theorem-1 shape), 1/sqrt|B| (Theorem-2 shape). Families
// whose B_n decays faster than 1/n keep the Theorem-1 radius but carry an
// Unknown boundary verdict (the divergence proof's lower bound on |B_n|
// fails for them).
RecurrenceClass classify(const CoefficientFamily& f);

// Case1 iff the compared sub-leading coefficients satisfy the strict "<";
// NotApplicable when they are not both real or the kind has no sub-case.
ProofSubcase subcase_of(const NormalizedFamily& nf, RecurrenceKind kind);

nlohmann::ordered_json to_json(const RecurrenceClass& rc, int radius_digits = 17);

// Empirical ratio scan: |d_{n+1}/d_n| (Theorem-1 shape) or |d_{n+2}/d_n|
// (Theorem-2 shape) at n = n_target, generated with exact rationals and
// converted to double only for the returned values.
struct RatioScan {
  double ratio = 0.0;        // value at n_target
  double ratio_half = 0.0;   // value at n_target/2, for the stability check
  bool stabilized = false;   // relative change between the two below 10^-2
};
RatioScan ratio_scan(const CoefficientFamily& f, long n_target,
                     RecurrenceKind kind);

}  // namespace trirec
