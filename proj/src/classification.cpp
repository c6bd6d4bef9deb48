#include "trirec/classification.hpp"

#include <cmath>
#include <limits>

#include "trirec/errors.hpp"
#include "trirec/series.hpp"

namespace trirec {

const char* to_string(RecurrenceKind k) {
  switch (k) {
    case RecurrenceKind::ThmOne: return "thm1";
    case RecurrenceKind::ThmTwo: return "thm2";
    case RecurrenceKind::TwoTerm: return "two-term";
    case RecurrenceKind::Unsupported: return "unsupported";
  }
  return "?";
}

const char* to_string(BoundaryVerdict v) {
  switch (v) {
    case BoundaryVerdict::DivergesPerPaper: return "diverges";
    case BoundaryVerdict::GaussConditional: return "gauss-conditional";
    case BoundaryVerdict::Unknown: return "unknown";
  }
  return "?";
}

const char* to_string(ProofSubcase c) {
  switch (c) {
    case ProofSubcase::Case1: return "case1";
    case ProofSubcase::Case2: return "case2";
    case ProofSubcase::NotApplicable: return "not-applicable";
  }
  return "?";
}

DiscRadius DiscRadius::make_infinite() {
  DiscRadius r;
  r.infinite = true;
  return r;
}

DiscRadius DiscRadius::from_root(Rational base, unsigned long power) {
  DiscRadius r;
  r.base = std::move(base);
  r.root_power = power;
  // Collapse perfect powers so equal radii compare equal.
  while (r.root_power > 1) {
    unsigned long half = r.root_power / 2;
    auto root = exact_root(r.base, 2);
    if (!root) break;
    r.base = *root;
    r.root_power = half;
  }
  return r;
}

std::optional<Rational> DiscRadius::exact() const {
  if (infinite) return std::nullopt;
  if (root_power == 1) return base;
  return exact_root(base, root_power);
}

double DiscRadius::approx() const {
  if (infinite) return std::numeric_limits<double>::infinity();
  return std::pow(base.get_d(), 1.0 / static_cast<double>(root_power));
}

std::string DiscRadius::decimal(int digits) const {
  if (infinite) return "inf";
  if (root_power == 1) return to_decimal_string(base, digits);
  return root_decimal_string(base, root_power, digits);
}

bool DiscRadius::operator==(const DiscRadius& o) const {
  if (infinite != o.infinite) return false;
  if (infinite) return true;
  // Compare base^(1/p) = obase^(1/q) via cross powers.
  return pow_rational(base, static_cast<long>(o.root_power)) ==
         pow_rational(o.base, static_cast<long>(root_power));
}

namespace {

// |z| as base^(1/power): exact abs for real z, sqrt(|z|^2) otherwise.
std::pair<Rational, unsigned long> abs_as_root(const GRational& z) {
  if (z.is_real()) return {abs(z.re), 1ul};
  return {z.abs2(), 2ul};
}

DiscRadius reciprocal_radius(const GRational& lead, unsigned long extra_root) {
  // radius = |lead|^(-1/extra_root); |lead| itself may need a square root.
  auto [mag, p] = abs_as_root(lead);
  // radius^ (p*extra_root) = 1/mag^? ... |lead| = mag^(1/p); radius =
  // mag^(-1/(p*extra_root)).
  return DiscRadius::from_root(1 / mag, p * extra_root);
}

}  // namespace

RecurrenceClass classify(const CoefficientFamily& f) {
  if (f.a_den.is_zero() || f.b_den.is_zero())
    throw make_error(ErrorKind::UnsupportedShape, "zero denominator polynomial");

  RecurrenceClass rc;

  if (f.b_num.is_zero()) {
    rc.kind = RecurrenceKind::TwoTerm;
    rc.boundary_verdict = BoundaryVerdict::GaussConditional;
    rc.subcase = ProofSubcase::NotApplicable;
    const int dn = f.a_num.degree(), dd = f.a_den.degree();
    if (f.a_num.is_zero() || dn < dd)
      rc.disc_radius = DiscRadius::make_infinite();
    else if (dn == dd)
      rc.disc_radius = reciprocal_radius(f.a_num.leading() / f.a_den.leading(), 1);
    else
      rc.disc_radius = DiscRadius::from_root(Rational(0), 1);
    return rc;
  }

  NormalizedFamily nf;
  try {
    nf = normalize(f);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnsupportedShape) throw;
    rc.kind = RecurrenceKind::Unsupported;
    rc.boundary_verdict = BoundaryVerdict::Unknown;
    rc.subcase = ProofSubcase::NotApplicable;
    rc.disc_radius = DiscRadius::from_root(Rational(0), 1);
    return rc;
  }

  if (nf.a_decay_gap == 0) {
    rc.kind = RecurrenceKind::ThmOne;
    rc.disc_radius = reciprocal_radius(nf.lead_a, 1);
    // The divergence proof needs |B_n| ~ 1/n exactly; faster decay breaks
    // the Eq. 6 lower bound, so only the exact-gap shape inherits it.
    rc.boundary_verdict = nf.b_decay_gap == 1 ? BoundaryVerdict::DivergesPerPaper
                                              : BoundaryVerdict::Unknown;
  } else {
    rc.kind = RecurrenceKind::ThmTwo;
    rc.disc_radius = reciprocal_radius(nf.lead_b, 2);
    rc.boundary_verdict = nf.a_decay_gap == 1 ? BoundaryVerdict::DivergesPerPaper
                                              : BoundaryVerdict::Unknown;
  }
  rc.subcase = subcase_of(nf, rc.kind);
  return rc;
}

ProofSubcase subcase_of(const NormalizedFamily& nf, RecurrenceKind kind) {
  if (kind != RecurrenceKind::ThmOne && kind != RecurrenceKind::ThmTwo)
    return ProofSubcase::NotApplicable;
  const std::vector<GRational>& num =
      kind == RecurrenceKind::ThmOne ? nf.big_omega : nf.big_theta;
  const std::vector<GRational>& den =
      kind == RecurrenceKind::ThmOne ? nf.small_omega : nf.small_theta;
  const int t = static_cast<int>(den.size());
  if (t == 0) return ProofSubcase::Case2;  // no sub-leading term, ">=" branch
  const GRational sub_num = static_cast<int>(num.size()) >= t
                                ? num[static_cast<std::size_t>(t - 1)]
                                : GRational();
  const GRational sub_den = den[static_cast<std::size_t>(t - 1)];
  if (!sub_num.is_real() || !sub_den.is_real())
    return ProofSubcase::NotApplicable;  // no ordering for complex values
  return sub_num.re < sub_den.re ? ProofSubcase::Case1 : ProofSubcase::Case2;
}

nlohmann::ordered_json to_json(const RecurrenceClass& rc, int radius_digits) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(rc.kind);
  j["disc_radius"] = rc.disc_radius.decimal(radius_digits);
  if (auto exact = rc.disc_radius.exact())
    j["disc_radius_exact"] = to_fraction_string(*exact);
  j["boundary_verdict"] = to_string(rc.boundary_verdict);
  j["subcase"] = to_string(rc.subcase);
  return j;
}

RatioScan ratio_scan(const CoefficientFamily& f, long n_target,
                     RecurrenceKind kind) {
  const int step = kind == RecurrenceKind::ThmTwo ? 2 : 1;
  series::ExactGenerator gen(f);
  gen.extend(n_target + step);
  RatioScan scan;
  auto at = [&](long n) -> double {
    Rational r2 = gen.ratio_abs2(n, step);
    return std::sqrt(r2.get_d());
  };
  try {
    scan.ratio = at(n_target);
    scan.ratio_half = at(n_target / 2);
  } catch (const Error&) {
    scan.stabilized = false;
    return scan;
  }
  const double denom = std::max(std::abs(scan.ratio), 1e-300);
  scan.stabilized = std::abs(scan.ratio - scan.ratio_half) / denom < 1e-2;
  return scan;
}

}  // namespace trirec
