#include "trirec/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "trirec/errors.hpp"

namespace trirec {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::PoleAtIndex: return "PoleAtIndex";
    case ErrorKind::UnsupportedShape: return "UnsupportedShape";
    case ErrorKind::NotInDisc: return "NotInDisc";
    case ErrorKind::NoConvergence: return "NoConvergenceWithinBudget";
    case ErrorKind::WitnessNotFound: return "WitnessNotFound";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::TruncationMismatch: return "TruncationMismatch";
    case ErrorKind::NonRealFamily: return "NonRealFamily";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

namespace {

Integer pow10(long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10u, static_cast<unsigned long>(e));
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  // Trim surrounding whitespace.
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty())
    throw make_error(ErrorKind::ParseError, "empty number");

  const std::string s(text);

  // "p/q" form.
  if (auto slash = s.find('/'); slash != std::string::npos) {
    try {
      Rational r(s);
      if (r.get_den() == 0)
        throw make_error(ErrorKind::ParseError, "zero denominator in '" + s + "'");
      r.canonicalize();
      return r;
    } catch (const std::invalid_argument&) {
      throw make_error(ErrorKind::ParseError, "bad rational '" + s + "'");
    }
  }

  // Decimal / scientific form: [sign] digits [. digits] [e[sign]digits]
  std::size_t pos = 0;
  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = (s[pos] == '-');
    ++pos;
  }
  std::string int_part, frac_part;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
    int_part += s[pos++];
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      frac_part += s[pos++];
  }
  long exp10 = 0;
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    bool exp_neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      exp_neg = (s[pos] == '-');
      ++pos;
    }
    std::string exp_digits;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      exp_digits += s[pos++];
    if (exp_digits.empty())
      throw make_error(ErrorKind::ParseError, "bad exponent in '" + s + "'");
    exp10 = std::strtol(exp_digits.c_str(), nullptr, 10);
    if (exp_neg) exp10 = -exp10;
  }
  if (pos != s.size() || (int_part.empty() && frac_part.empty()))
    throw make_error(ErrorKind::ParseError, "bad number '" + s + "'");

  Integer mantissa(int_part.empty() ? std::string("0") : int_part);
  for (char c : frac_part) {
    mantissa *= 10;
    mantissa += c - '0';
  }
  long scale = exp10 - static_cast<long>(frac_part.size());
  Rational r(mantissa);
  if (scale > 0)
    r *= Rational(pow10(scale));
  else if (scale < 0)
    r /= Rational(pow10(-scale));
  if (negative) r = -r;
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal_string(const Rational& value, int digits) {
  if (digits < 0) digits = 0;
  const bool neg = sgn(value) < 0;
  Rational v = abs(value);
  Integer scaled = (v.get_num() * pow10(digits)) / v.get_den();  // floor
  std::string s = scaled.get_str();
  if (static_cast<int>(s.size()) <= digits)
    s.insert(0, static_cast<std::size_t>(digits + 1) - s.size(), '0');
  std::string int_part = s.substr(0, s.size() - digits);
  std::string frac_part = digits > 0 ? s.substr(s.size() - digits) : "";
  while (!frac_part.empty() && frac_part.back() == '0') frac_part.pop_back();
  std::string out = int_part;
  if (!frac_part.empty()) out += "." + frac_part;
  if (neg && out != "0") out.insert(0, "-");
  return out;
}

Rational pow_rational(const Rational& value, long e) {
  if (e < 0) {
    if (sgn(value) == 0)
      throw make_error(ErrorKind::DomainError, "0 to a negative power");
    return 1 / pow_rational(value, -e);
  }
  Rational result = 1;
  Rational base = value;
  unsigned long n = static_cast<unsigned long>(e);
  while (n != 0) {
    if (n & 1u) result *= base;
    base *= base;
    n >>= 1u;
  }
  return result;
}

Integer isqrt(const Integer& value) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), value.get_mpz_t());
  return r;
}

std::optional<Rational> exact_root(const Rational& value, unsigned long k) {
  if (sgn(value) < 0) return std::nullopt;
  Integer num_root, den_root;
  int num_exact = mpz_root(num_root.get_mpz_t(), value.get_num().get_mpz_t(), k);
  int den_exact = mpz_root(den_root.get_mpz_t(), value.get_den().get_mpz_t(), k);
  if (!num_exact || !den_exact) return std::nullopt;
  return Rational(num_root, den_root);
}

std::string root_decimal_string(const Rational& value, unsigned long k,
                                int digits) {
  if (sgn(value) < 0)
    throw make_error(ErrorKind::DomainError, "root of a negative value");
  if (auto exact = exact_root(value, k))
    return to_decimal_string(*exact, digits);
  // floor((p/q)^(1/k) * 10^d) ~= floor(root_k(p * 10^(k*d) / q)).
  Integer scaled = (value.get_num() * pow10(static_cast<long>(k) * digits)) /
                   value.get_den();
  Integer root;
  mpz_root(root.get_mpz_t(), scaled.get_mpz_t(), k);
  Rational out(root, pow10(digits));
  out.canonicalize();
  return to_decimal_string(out, digits);
}

}  // namespace trirec
