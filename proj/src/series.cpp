#include "trirec/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "trirec/errors.hpp"

namespace trirec::series {

namespace {

// Multiplies num and den of one ratio by the lcm of all coefficient
// denominators, leaving the ratio unchanged with Gaussian-integer entries.
std::pair<PolyN, PolyN> clear_denominators(const PolyN& num, const PolyN& den) {
  Integer lcm = 1;
  auto absorb = [&lcm](const PolyN& p) {
    for (const auto& c : p.coeffs()) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.re.get_den().get_mpz_t());
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.im.get_den().get_mpz_t());
    }
  };
  absorb(num);
  absorb(den);
  GRational factor{Rational(lcm), Rational(0)};
  return {num.scaled(factor), den.scaled(factor)};
}

GRational mul_int(const GRational& a, const GRational& b) { return a * b; }

Rational l1_norm(const GRational& z) { return abs(z.re) + abs(z.im); }
Rational linf_norm(const GRational& z) {
  return std::max(abs(z.re), abs(z.im));
}

}  // namespace

ExactGenerator::ExactGenerator(const CoefficientFamily& f, GRational d0)
    : d0_(std::move(d0)) {
  std::tie(a_num_, a_den_) = clear_denominators(f.a_num, f.a_den);
  std::tie(b_num_, b_den_) = clear_denominators(f.b_num, f.b_den);
  e_.push_back(GRational(1));
}

void ExactGenerator::extend(long n) {
  while (generated() < n) {
    long k = generated();  // about to produce e_{k+1}
    GRational aden = a_den_.eval(k);
    GRational bden = b_den_.eval(k);
    if (aden.is_zero()) throw PoleAtIndex(k, "a_den vanishes");
    if (bden.is_zero()) throw PoleAtIndex(k, "b_den vanishes");
    dvals_.push_back(mul_int(aden, bden));
    GRational next = mul_int(mul_int(a_num_.eval(k), bden), e_.back());
    if (k >= 1) {
      GRational cross = mul_int(mul_int(b_num_.eval(k), aden),
                                dvals_[static_cast<std::size_t>(k - 1)]);
      next += mul_int(cross, e_[static_cast<std::size_t>(k - 1)]);
    }
    e_.push_back(std::move(next));
  }
}

GRational ExactGenerator::ladder_denominator(long n) const {
  GRational p(1);
  for (long k = 0; k < n; ++k) p *= dvals_[static_cast<std::size_t>(k)];
  return p;
}

GRational ExactGenerator::d(long n) {
  extend(n);
  if (n == 0) return d0_;
  return d0_ * e(n) / ladder_denominator(n);
}

Rational ExactGenerator::abs2_d(long n) {
  extend(n);
  if (n == 0) return d0_.abs2();
  return d0_.abs2() * e(n).abs2() / ladder_denominator(n).abs2();
}

Rational ExactGenerator::ratio_abs2(long n, int step) {
  extend(n + step);
  Rational num = e(n + step).abs2();
  Rational den = e(n).abs2();
  if (sgn(den) == 0)
    throw make_error(ErrorKind::DomainError,
                     "ratio through a vanishing coefficient d_" + std::to_string(n));
  for (int k = 0; k < step; ++k)
    den *= dvals_[static_cast<std::size_t>(n + k)].abs2();
  return num / den;
}

std::vector<GRational> generate_exact(const CoefficientFamily& f, GRational d0,
                                      long M) {
  ExactGenerator gen(f, std::move(d0));
  gen.extend(M);
  std::vector<GRational> out;
  out.reserve(static_cast<std::size_t>(M) + 1);
  for (long n = 0; n <= M; ++n) out.push_back(gen.d(n));
  return out;
}

std::vector<Rational> abs_partial_sums(const CoefficientFamily& f, GRational d0,
                                       const Rational& x_abs, long M) {
  if (!f.is_real() || !d0.is_real())
    throw make_error(ErrorKind::NonRealFamily,
                     "exact absolute partial sums need real coefficients");
  if (sgn(x_abs) < 0)
    throw make_error(ErrorKind::DomainError, "x_abs must be nonnegative");
  std::vector<GRational> d = generate_exact(f, std::move(d0), M);
  std::vector<Rational> sums;
  sums.reserve(d.size());
  Rational acc = 0;
  Rational xp = 1;
  for (long n = 0; n <= M; ++n) {
    acc += abs(d[static_cast<std::size_t>(n)].re) * xp;
    sums.push_back(acc);
    xp *= x_abs;
  }
  return sums;
}

namespace {

// Double-precision coefficient evaluators; exactness is not needed here
// (relative error ~1e-16 on each A_n, B_n).
struct DoubleCoeffs {
  std::vector<std::complex<double>> an, ad, bn, bd;

  explicit DoubleCoeffs(const CoefficientFamily& f) {
    auto conv = [](const PolyN& p) {
      std::vector<std::complex<double>> out;
      for (const auto& c : p.coeffs()) out.push_back(to_complex(c));
      return out;
    };
    an = conv(f.a_num);
    ad = conv(f.a_den);
    bn = conv(f.b_num);
    bd = conv(f.b_den);
  }

  static std::complex<double> horner(
      const std::vector<std::complex<double>>& c, double n) {
    std::complex<double> acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * n + *it;
    return acc;
  }

  std::complex<double> a(long n) const {
    std::complex<double> den = horner(ad, static_cast<double>(n));
    if (den == std::complex<double>(0.0, 0.0))
      throw PoleAtIndex(n, "a_den vanishes");
    return horner(an, static_cast<double>(n)) / den;
  }
  std::complex<double> b(long n) const {
    std::complex<double> den = horner(bd, static_cast<double>(n));
    if (den == std::complex<double>(0.0, 0.0))
      throw PoleAtIndex(n, "b_den vanishes");
    return horner(bn, static_cast<double>(n)) / den;
  }
};

}  // namespace

std::vector<ScaledComplex> generate_scaled(const CoefficientFamily& f,
                                           std::complex<double> d0, long M) {
  require_no_poles(f, 0, M);
  DoubleCoeffs cf(f);
  std::vector<ScaledComplex> d;
  d.reserve(static_cast<std::size_t>(M) + 1);
  d.push_back(ScaledComplex::from_complex(d0));
  if (M >= 1)
    d.push_back(ScaledComplex::from_complex(cf.a(0)) * d.back());
  for (long n = 1; n < M; ++n) {
    ScaledComplex next =
        ScaledComplex::from_complex(cf.a(n)) * d[static_cast<std::size_t>(n)] +
        ScaledComplex::from_complex(cf.b(n)) * d[static_cast<std::size_t>(n - 1)];
    d.push_back(next);
  }
  return d;
}

void scan_abs_terms(const CoefficientFamily& f, std::complex<double> d0,
                    double x_abs, long M,
                    const std::function<void(long, double, double)>& on_term) {
  DoubleCoeffs cf(f);
  const double x2 = x_abs * x_abs;
  ScaledComplex prev;  // t_{n-1}
  ScaledComplex cur = ScaledComplex::from_complex(d0);
  double sum = cur.abs().to_double();
  on_term(0, cur.abs().to_double(), sum);
  if (M < 1) return;
  ScaledComplex next = ScaledComplex::from_complex(cf.a(0) * x_abs) * cur;
  prev = cur;
  cur = next;
  sum += cur.abs().to_double();
  on_term(1, cur.abs().to_double(), sum);
  for (long n = 1; n < M; ++n) {
    next = ScaledComplex::from_complex(cf.a(n) * x_abs) * cur +
           ScaledComplex::from_complex(cf.b(n) * x2) * prev;
    prev = cur;
    cur = next;
    sum += cur.abs().to_double();
    on_term(n + 1, cur.abs().to_double(), sum);
  }
}

namespace {

// Envelope bound for sup_{n>=M} |num(n)/den(n)|: |num(n)| <= n^dp * P(M) and
// |den(n)| >= n^dq * Q(M) with P from L1 norms and Q from the leading
// coefficient minus the L1 tail, both monotone in M.
std::optional<Rational> sup_ratio_bound(const PolyN& num, const PolyN& den,
                                        long M) {
  if (num.is_zero()) return Rational(0);
  const int dp = num.degree();
  const int dq = den.degree();
  if (dp > dq) return std::nullopt;
  if (M < 1) M = 1;
  Rational m(M);
  Rational p_up = 0;
  for (int j = 0; j <= dp; ++j)
    p_up += l1_norm(num.coeff(j)) / pow_rational(m, dp - j);
  Rational q_low = linf_norm(den.leading());
  for (int j = 0; j < dq; ++j)
    q_low -= l1_norm(den.coeff(j)) / pow_rational(m, dq - j);
  if (sgn(q_low) <= 0) return std::nullopt;
  return p_up / q_low / pow_rational(m, dq - dp);
}

}  // namespace

std::optional<std::pair<Rational, Rational>> tail_sup_bounds(
    const CoefficientFamily& f, long M) {
  auto a = sup_ratio_bound(f.a_num, f.a_den, M);
  auto b = sup_ratio_bound(f.b_num, f.b_den, M);
  if (!a || !b) return std::nullopt;
  return std::make_pair(*a, *b);
}

EvalResult eval_series(const CoefficientFamily& f, const GRational& lambda,
                       const GRational& x, double tol, long m_max,
                       GRational d0) {
  if (tol <= 0.0)
    throw make_error(ErrorKind::DomainError, "tolerance must be positive");
  RecurrenceClass rc = classify(f);
  const Rational x_abs2 = x.abs2();
  if (rc.kind != RecurrenceKind::Unsupported) {
    bool inside = rc.disc_radius.infinite;
    if (!rc.disc_radius.infinite) {
      const Rational& base = rc.disc_radius.base;
      switch (rc.disc_radius.root_power) {
        case 1: inside = x_abs2 < base * base; break;
        case 2: inside = x_abs2 < base; break;
        default: inside = x_abs2 * x_abs2 < base; break;
      }
    }
    if (!inside)
      throw make_error(ErrorKind::NotInDisc,
                       "|x| is not strictly inside the disc of convergence");
  }

  const std::complex<double> xc = to_complex(x);
  const std::complex<double> lc = to_complex(lambda);
  auto prefactor = [&]() -> std::complex<double> {
    if (lambda.is_zero()) return {1.0, 0.0};
    if (x.is_zero()) return {0.0, 0.0};  // Re(lambda) > 0 branch; x=0 handled below
    return std::pow(xc, lc);
  };

  if (x.is_zero()) {
    EvalResult r;
    r.value = lambda.is_zero() ? to_complex(d0) : std::complex<double>(0.0, 0.0);
    r.error_bound = 0.0;
    r.converged = true;
    r.terms = 0;
    return r;
  }

  DoubleCoeffs cf(f);
  const double xa = std::sqrt(x_abs2.get_d());

  std::complex<double> t_prev = 0.0;  // t_{n-1} = d_{n-1} x^{n-1}
  std::complex<double> t_cur = to_complex(d0);
  std::complex<double> sum = t_cur;
  long n = 0;

  auto advance = [&]() {
    std::complex<double> t_next;
    if (n == 0) {
      t_next = cf.a(0) * xc * t_cur;
    } else {
      t_next = cf.a(n) * xc * t_cur + cf.b(n) * xc * xc * t_prev;
    }
    t_prev = t_cur;
    t_cur = t_next;
    ++n;
    sum += t_cur;
  };

  long checkpoint = 16;
  while (n < m_max) {
    advance();
    if (n == checkpoint || n == m_max) {
      checkpoint *= 2;
      auto sup = tail_sup_bounds(f, n);
      if (!sup) continue;
      const double al = sup->first.get_d() * xa;
      const double be = sup->second.get_d() * xa * xa;
      if (al + be >= 1.0) continue;
      double lam = 0.5 * (al + std::sqrt(al * al + 4.0 * be));
      lam *= 1.0 + 1e-12;  // round the char root up
      if (lam >= 1.0) continue;
      const double u = std::max(std::abs(t_cur), std::abs(t_prev));
      const double tail = u * lam / (1.0 - lam);
      if (tail <= tol) {
        EvalResult r;
        std::complex<double> pf = prefactor();
        r.value = sum * pf;
        r.error_bound = tail * std::abs(pf);
        r.converged = true;
        r.terms = n;
        return r;
      }
    }
  }
  throw make_error(ErrorKind::NoConvergence,
                   "tail bound above tolerance after " + std::to_string(m_max) +
                       " terms");
}

MajorantRun majorant_sequences(const CoefficientFamily& f, long N, long M) {
  if (!f.is_real())
    throw make_error(ErrorKind::NonRealFamily,
                     "exact majorants need real coefficients");
  require_no_poles(f, N, N + M + 1);
  auto abs_a = [&f](long n) -> Rational {
    GRational v = coeff_a(f, n);
    return abs(v.re);
  };
  auto abs_b = [&f](long n) -> Rational {
    GRational v = coeff_b(f, n);
    return abs(v.re);
  };
  auto build = [&](long base, long len) {
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(len) + 1);
    c.push_back(1);
    if (len >= 1) c.push_back(abs_a(base));
    for (long k = 1; k < len; ++k) {
      Rational next = abs_a(base + k) * c[static_cast<std::size_t>(k)] +
                      abs_b(base + k) * c[static_cast<std::size_t>(k - 1)];
      c.push_back(next);
    }
    return c;
  };
  MajorantRun run;
  run.N = N;
  run.cbar = build(N, M);
  run.chat = build(N + 1, M);
  return run;
}

SeriesRun make_series_run(const CoefficientFamily& f, const GRational& lambda,
                          const GRational& x, long M) {
  SeriesRun run;
  run.lambda = lambda;
  run.x = x;
  run.d = generate_scaled(f, {1.0, 0.0}, M);
  const std::complex<double> xc = to_complex(x);
  const std::complex<double> pf =
      lambda.is_zero() ? std::complex<double>(1.0, 0.0)
                       : std::pow(xc, to_complex(lambda));
  std::complex<double> xn = 1.0;
  std::complex<double> acc = 0.0;
  for (const auto& dn : run.d) {
    acc += dn.to_complex() * xn;
    run.partial_sums.push_back(acc * pf);
    xn *= xc;
  }
  return run;
}

void write_series_csv(std::ostream& out, const SeriesRun& run) {
  out << "n,re_d,im_d,scale_exponent,S_n\n";
  char buf[256];
  for (std::size_t n = 0; n < run.d.size(); ++n) {
    const ScaledComplex& dn = run.d[n];
    double re_m = 0.0, im_m = 0.0;
    long long e10 = 0;
    if (!dn.is_zero()) {
      ScaledReal mag = dn.abs();
      auto [mant, exp10] = mag.decimal_parts();
      e10 = exp10;
      std::complex<double> unit = dn.mantissa() / std::abs(dn.mantissa());
      re_m = mant * unit.real();
      im_m = mant * unit.imag();
    }
    const std::complex<double> s = run.partial_sums[n];
    if (s.imag() == 0.0)
      std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%lld,%.17g", n, re_m,
                    im_m, e10, s.real());
    else
      std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%lld,%.17g%+.17gi", n,
                    re_m, im_m, e10, s.real(), s.imag());
    out << buf << "\n";
  }
}

}  // namespace trirec::series
