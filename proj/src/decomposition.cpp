#include "trirec/decomposition.hpp"

#include "trirec/errors.hpp"
#include "trirec/series.hpp"

namespace trirec {

namespace {

struct BarredModuli {
  // Monic-normalized |Abar_n|, |Bbar_n| plus the leading moduli |A|, |B|,
  // so that |A_n| = |A| |Abar_n| and |B_n| = |B| |Bbar_n|.
  const CoefficientFamily* f;
  Rational lead_a_abs;
  Rational lead_b_abs;  // 0 for a vanishing b_num

  explicit BarredModuli(const CoefficientFamily& fam) : f(&fam) {
    if (!fam.is_real())
      throw make_error(ErrorKind::NonRealFamily,
                       "exact decomposition needs real coefficients");
    lead_a_abs = abs((fam.a_num.leading() / fam.a_den.leading()).re);
    lead_b_abs = fam.b_num.is_zero()
                     ? Rational(0)
                     : abs((fam.b_num.leading() / fam.b_den.leading()).re);
  }

  Rational abar(long n) const {
    GRational den = f->a_den.eval(n);
    if (den.is_zero()) throw PoleAtIndex(n, "a_den vanishes");
    Rational num = abs(f->a_num.eval(n).re / f->a_num.leading().re);
    Rational dnm = abs(den.re / f->a_den.leading().re);
    return num / dnm;
  }

  Rational bbar(long n) const {
    GRational den = f->b_den.eval(n);
    if (den.is_zero()) throw PoleAtIndex(n, "b_den vanishes");
    if (f->b_num.is_zero()) return 0;
    Rational num = abs(f->b_num.eval(n).re / f->b_num.leading().re);
    Rational dnm = abs(den.re / f->b_den.leading().re);
    return num / dnm;
  }
};

}  // namespace

std::vector<std::vector<Rational>> path_table(const CoefficientFamily& f,
                                              long N, int M) {
  if (M < 0)
    throw make_error(ErrorKind::TruncationMismatch, "negative degree cut");
  BarredModuli mod(f);
  // table[p][tau], tau <= p/2
  std::vector<std::vector<Rational>> table(static_cast<std::size_t>(M) + 1);
  for (int p = 0; p <= M; ++p)
    table[static_cast<std::size_t>(p)].assign(
        static_cast<std::size_t>(p / 2) + 1, Rational(0));
  table[0][0] = 1;
  for (int p = 1; p <= M; ++p) {
    const Rational a = mod.abar(N + p - 1);
    const Rational b = mod.bbar(N + p - 1);
    auto& row = table[static_cast<std::size_t>(p)];
    const auto& prev = table[static_cast<std::size_t>(p - 1)];
    for (int tau = 0; tau <= (p - 1) / 2; ++tau)
      row[static_cast<std::size_t>(tau)] += a * prev[static_cast<std::size_t>(tau)];
    if (p >= 2) {
      const auto& prev2 = table[static_cast<std::size_t>(p - 2)];
      for (int tau = 1; tau <= p / 2; ++tau)
        if (tau - 1 <= (p - 2) / 2)
          row[static_cast<std::size_t>(tau)] +=
              b * prev2[static_cast<std::size_t>(tau - 1)];
    }
  }
  return table;
}

Rational subseries_y_tau(const CoefficientFamily& f, long N, int tau,
                         const Rational& z, int I_max, DecompMode mode) {
  if (tau < 0 || I_max < 0)
    throw make_error(ErrorKind::TruncationMismatch, "negative truncation");
  if (sgn(z) < 0)
    throw make_error(ErrorKind::DomainError, "z must be nonnegative");
  // Positions reached: GroupByB z-degree j uses position j + 2 tau;
  // GroupByA z-degree j (B-steps) uses position 2 j + tau.
  const int max_pos = mode == DecompMode::GroupByB ? I_max + 2 * tau
                                                   : 2 * I_max + tau;
  auto table = path_table(f, N, max_pos);
  Rational sum = 0;
  Rational zp = 1;
  for (int j = 0; j <= I_max; ++j) {
    const int p = mode == DecompMode::GroupByB ? j + 2 * tau : 2 * j + tau;
    const int b_count = mode == DecompMode::GroupByB ? tau : j;
    if (b_count <= p / 2)
      sum += table[static_cast<std::size_t>(p)][static_cast<std::size_t>(b_count)] * zp;
    zp *= z;
  }
  return sum;
}

DecompositionReport decomposition_check(const CoefficientFamily& f, long N,
                                        int M, const Rational& x_abs,
                                        DecompMode mode) {
  if (M < 0)
    throw make_error(ErrorKind::TruncationMismatch, "negative degree cut");
  if (sgn(x_abs) < 0)
    throw make_error(ErrorKind::DomainError, "x_abs must be nonnegative");

  BarredModuli mod(f);
  DecompositionReport rep;
  rep.N = N;
  rep.M = M;
  rep.mode = mode;
  if (mode == DecompMode::GroupByB) {
    rep.z = mod.lead_a_abs * x_abs;
    rep.eta = mod.lead_b_abs * x_abs * x_abs;
  } else {
    rep.z = mod.lead_b_abs * x_abs * x_abs;
    rep.eta = mod.lead_a_abs * x_abs;
  }

  series::MajorantRun maj = series::majorant_sequences(f, N, M);
  rep.lhs_coeffs = maj.cbar;

  auto table = path_table(f, N, M);
  rep.rhs_coeffs.reserve(static_cast<std::size_t>(M) + 1);
  for (int p = 0; p <= M; ++p) {
    Rational coeff = 0;
    for (int tau = 0; tau <= p / 2; ++tau) {
      const int a_steps = p - 2 * tau;
      coeff += table[static_cast<std::size_t>(p)][static_cast<std::size_t>(tau)] *
               pow_rational(mod.lead_a_abs, a_steps) *
               pow_rational(mod.lead_b_abs, tau);
    }
    rep.rhs_coeffs.push_back(coeff);
  }

  rep.max_abs_discrepancy = 0;
  rep.lhs_value = 0;
  rep.rhs_value = 0;
  Rational xp = 1;
  for (int i = 0; i <= M; ++i) {
    Rational diff = abs(rep.lhs_coeffs[static_cast<std::size_t>(i)] -
                        rep.rhs_coeffs[static_cast<std::size_t>(i)]);
    if (diff > rep.max_abs_discrepancy) rep.max_abs_discrepancy = diff;
    rep.lhs_value += rep.lhs_coeffs[static_cast<std::size_t>(i)] * xp;
    xp *= x_abs;
  }

  // Assemble the right side the way the sub-series display does: eta^tau
  // times the z-truncated tau-th sub-series, truncations matched by total
  // |x|-degree (each B-step eats 2 degrees in GroupByB, each A-step 1 in
  // GroupByA).
  const int degree_per_eta = mode == DecompMode::GroupByB ? 2 : 1;
  const int degree_per_z = mode == DecompMode::GroupByB ? 1 : 2;
  for (int tau = 0; degree_per_eta * tau <= M; ++tau) {
    const int budget = M - degree_per_eta * tau;
    const int i_max = budget / degree_per_z;
    Rational ytau = 0;
    Rational zp = 1;
    for (int j = 0; j <= i_max; ++j) {
      const int p = mode == DecompMode::GroupByB ? j + 2 * tau : 2 * j + tau;
      const int b_count = mode == DecompMode::GroupByB ? tau : j;
      ytau += table[static_cast<std::size_t>(p)][static_cast<std::size_t>(b_count)] * zp;
      zp *= rep.z;
    }
    rep.rhs_value += ytau * pow_rational(rep.eta, tau);
  }
  return rep;
}

nlohmann::ordered_json to_json(const DecompositionReport& rep) {
  nlohmann::ordered_json j;
  j["N"] = rep.N;
  j["M"] = rep.M;
  j["mode"] = rep.mode == DecompMode::GroupByB ? "group-by-b" : "group-by-a";
  j["eta"] = to_fraction_string(rep.eta);
  j["z"] = to_fraction_string(rep.z);
  nlohmann::ordered_json lhs = nlohmann::ordered_json::array();
  for (const auto& c : rep.lhs_coeffs) lhs.push_back(to_fraction_string(c));
  nlohmann::ordered_json rhs = nlohmann::ordered_json::array();
  for (const auto& c : rep.rhs_coeffs) rhs.push_back(to_fraction_string(c));
  j["lhs_coeffs"] = lhs;
  j["rhs_coeffs"] = rhs;
  j["discrepancy"] = to_fraction_string(rep.max_abs_discrepancy);
  j["lhs_value"] = to_fraction_string(rep.lhs_value);
  j["rhs_value"] = to_fraction_string(rep.rhs_value);
  return j;
}

}  // namespace trirec
