#include "trirec/gaussian.hpp"

#include "trirec/errors.hpp"

namespace trirec {

GRational operator/(const GRational& a, const GRational& b) {
  Rational n = b.abs2();
  if (sgn(n) == 0)
    throw make_error(ErrorKind::ZeroDenominator, "complex division by zero");
  GRational num = a * b.conj();
  return {num.re / n, num.im / n};
}

GRational parse_grational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty())
    throw make_error(ErrorKind::ParseError, "empty number");

  std::string s(text);
  if (s.back() != 'i' && s.back() != 'I') return GRational(parse_rational(s));

  s.pop_back();  // strip the trailing 'i'
  // Split "re±im" at the last top-level sign that is not an exponent sign
  // and not the leading sign.
  std::size_t split = std::string::npos;
  for (std::size_t p = s.size(); p-- > 1;) {
    if (s[p] != '+' && s[p] != '-') continue;
    char prev = s[p - 1];
    if (prev == 'e' || prev == 'E') continue;  // exponent sign
    split = p;
    break;
  }
  if (split == std::string::npos) {
    // Pure imaginary: "i", "-i", "2i", "3/4i".
    if (s.empty() || s == "+") return GRational(Rational(0), Rational(1));
    if (s == "-") return GRational(Rational(0), Rational(-1));
    return GRational(Rational(0), parse_rational(s));
  }
  std::string re_part = s.substr(0, split);
  std::string im_part = s.substr(split);  // keeps the sign
  if (im_part == "+") im_part = "1";
  else if (im_part == "-") im_part = "-1";
  return GRational(parse_rational(re_part), parse_rational(im_part));
}

std::string to_string(const GRational& value) {
  if (value.is_real()) return to_fraction_string(value.re);
  std::string im = to_fraction_string(value.im) + "i";
  if (sgn(value.re) == 0) return im;
  if (sgn(value.im) >= 0) return to_fraction_string(value.re) + "+" + im;
  return to_fraction_string(value.re) + im;  // im already carries '-'
}

std::complex<double> to_complex(const GRational& value) {
  return {value.re.get_d(), value.im.get_d()};
}

}  // namespace trirec
