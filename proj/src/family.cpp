#include "trirec/family.hpp"

#include <fstream>

#include "trirec/errors.hpp"

namespace trirec {

GRational coeff_a(const CoefficientFamily& f, long n) {
  GRational den = f.a_den.eval(n);
  if (den.is_zero())
    throw PoleAtIndex(n, "a_den vanishes");
  return f.a_num.eval(n) / den;
}

GRational coeff_b(const CoefficientFamily& f, long n) {
  GRational den = f.b_den.eval(n);
  if (den.is_zero())
    throw PoleAtIndex(n, "b_den vanishes");
  return f.b_num.eval(n) / den;
}

void require_no_poles(const CoefficientFamily& f, long lo, long hi) {
  for (long n = lo; n <= hi; ++n) {
    if (f.a_den.eval(n).is_zero()) throw PoleAtIndex(n, "a_den vanishes");
    if (f.b_den.eval(n).is_zero()) throw PoleAtIndex(n, "b_den vanishes");
  }
}

namespace {

GRational monic_eval(const std::vector<GRational>& lower, int deg, long n) {
  // n^deg + lower[deg-1] n^(deg-1) + ... + lower[0], Horner.
  GRational acc(1);
  Integer ni(n);
  for (int j = deg - 1; j >= 0; --j) {
    acc = GRational{acc.re * ni, acc.im * ni} + lower[static_cast<std::size_t>(j)];
  }
  if (deg == 0) acc = GRational(1);
  return acc;
}

std::vector<GRational> monic_lower(const PolyN& p) {
  std::vector<GRational> out;
  const GRational& lead = p.leading();
  for (int j = 0; j < p.degree(); ++j) out.push_back(p.coeff(j) / lead);
  return out;
}

}  // namespace

GRational NormalizedFamily::a_at(long n) const {
  int num_deg = t - a_decay_gap;
  GRational num = monic_eval(big_omega, num_deg, n);
  GRational den = monic_eval(small_omega, t, n);
  if (den.is_zero()) throw PoleAtIndex(n, "normalized a_den vanishes");
  return lead_a * num / den;
}

GRational NormalizedFamily::b_at(long n) const {
  int den_deg = static_cast<int>(small_theta.size());
  int num_deg = den_deg - b_decay_gap;
  GRational num = monic_eval(big_theta, num_deg, n);
  GRational den = monic_eval(small_theta, den_deg, n);
  if (den.is_zero()) throw PoleAtIndex(n, "normalized b_den vanishes");
  return lead_b * num / den;
}

NormalizedFamily normalize(const CoefficientFamily& f) {
  if (f.a_den.is_zero() || f.b_den.is_zero())
    throw make_error(ErrorKind::UnsupportedShape, "zero denominator polynomial");
  if (f.b_num.is_zero())
    throw make_error(ErrorKind::UnsupportedShape,
                     "two-term family (b_num = 0) has no theorem shape");
  if (f.a_num.is_zero())
    throw make_error(ErrorKind::UnsupportedShape, "a_num is the zero polynomial");

  const int da_num = f.a_num.degree(), da_den = f.a_den.degree();
  const int db_num = f.b_num.degree(), db_den = f.b_den.degree();
  const bool thm1 = (da_num == da_den) && (db_num < db_den);
  const bool thm2 = (db_num == db_den) && (da_num < da_den);
  if (!thm1 && !thm2)
    throw make_error(ErrorKind::UnsupportedShape,
                     "degree pattern matches neither theorem hypothesis");

  NormalizedFamily nf;
  nf.t = da_den;
  nf.a_decay_gap = da_den - da_num;
  nf.b_decay_gap = db_den - db_num;
  nf.lead_a = f.a_num.leading() / f.a_den.leading();
  nf.lead_b = f.b_num.leading() / f.b_den.leading();
  nf.big_omega = monic_lower(f.a_num);
  nf.small_omega = monic_lower(f.a_den);
  nf.big_theta = monic_lower(f.b_num);
  nf.small_theta = monic_lower(f.b_den);
  return nf;
}

namespace {

PolyN poly_from_json(const nlohmann::json& arr, const char* field) {
  if (!arr.is_array())
    throw make_error(ErrorKind::ParseError,
                     std::string(field) + " must be an array of strings");
  std::vector<GRational> coeffs;
  for (const auto& item : arr) {
    if (item.is_string())
      coeffs.push_back(parse_grational(item.get<std::string>()));
    else if (item.is_number_integer())
      coeffs.push_back(GRational(Rational(item.get<long>())));
    else
      throw make_error(ErrorKind::ParseError,
                       std::string(field) + " entries must be strings");
  }
  return PolyN(std::move(coeffs));
}

nlohmann::ordered_json poly_to_json(const PolyN& p) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
  return arr;
}

}  // namespace

CoefficientFamily family_from_json(const nlohmann::json& j) {
  CoefficientFamily f;
  f.a_num = poly_from_json(j.at("a_num"), "a_num");
  f.a_den = poly_from_json(j.at("a_den"), "a_den");
  f.b_num = poly_from_json(j.at("b_num"), "b_num");
  f.b_den = poly_from_json(j.at("b_den"), "b_den");
  f.n_min = j.value("n_min", 1);
  if (f.a_den.is_zero() || f.b_den.is_zero())
    throw make_error(ErrorKind::ParseError,
                     "a_den and b_den must be nonzero polynomials");
  return f;
}

nlohmann::ordered_json family_to_json(const CoefficientFamily& f) {
  nlohmann::ordered_json j;
  j["a_num"] = poly_to_json(f.a_num);
  j["a_den"] = poly_to_json(f.a_den);
  j["b_num"] = poly_to_json(f.b_num);
  j["b_den"] = poly_to_json(f.b_den);
  j["n_min"] = f.n_min;
  return j;
}

CoefficientFamily family_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw make_error(ErrorKind::ParseError, "cannot open family file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw make_error(ErrorKind::ParseError,
                     "bad JSON in " + path + ": " + e.what());
  }
  return family_from_json(j);
}

}  // namespace trirec
