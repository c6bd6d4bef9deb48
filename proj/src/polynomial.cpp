#include "trirec/polynomial.hpp"

#include "trirec/errors.hpp"

namespace trirec {

namespace {
const GRational kZero{};
}

PolyN::PolyN(std::vector<GRational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const GRational& PolyN::coeff(int j) const {
  if (j < 0 || j >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(j)];
}

const GRational& PolyN::leading() const {
  if (coeffs_.empty())
    throw make_error(ErrorKind::DomainError, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

GRational PolyN::eval(const Integer& n) const {
  GRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = GRational{acc.re * n, acc.im * n} + *it;
  }
  return acc;
}

bool PolyN::is_real() const {
  for (const auto& c : coeffs_)
    if (!c.is_real()) return false;
  return true;
}

PolyN PolyN::scaled(const GRational& factor) const {
  std::vector<GRational> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c * factor);
  return PolyN(std::move(out));
}

}  // namespace trirec
