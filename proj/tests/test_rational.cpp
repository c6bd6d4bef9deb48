#include "doctest.h"
#include "trirec/errors.hpp"
#include "trirec/gaussian.hpp"
#include "trirec/polynomial.hpp"
#include "trirec/rational.hpp"
#include "trirec/scaled_float.hpp"

#include <cmath>
#include <random>

using namespace trirec;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("1.25") == Rational(5, 4));
  CHECK(parse_rational("1e-3") == Rational(1, 1000));
  CHECK(parse_rational("2.5e3") == Rational(2500));
  CHECK(parse_rational("-0.5e-1") == Rational(-1, 20));
  CHECK(parse_rational(" 6/8 ") == Rational(3, 4));
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("decimal rendering is exact and trimmed") {
  CHECK(to_decimal_string(Rational(1), 17) == "1");
  CHECK(to_decimal_string(Rational(1, 2), 17) == "0.5");
  CHECK(to_decimal_string(Rational(-1, 3), 5) == "-0.33333");
  CHECK(to_decimal_string(Rational(1, 1000), 6) == "0.001");
  CHECK(to_fraction_string(Rational(22, 7)) == "22/7");
}

TEST_CASE("integer roots") {
  CHECK(*exact_root(Rational(9, 4), 2) == Rational(3, 2));
  CHECK(!exact_root(Rational(2), 2).has_value());
  CHECK(*exact_root(Rational(27), 3) == Rational(3));
  // truncated sqrt(2) digits
  CHECK(root_decimal_string(Rational(2), 2, 8) == "1.41421356");
  CHECK(root_decimal_string(Rational(1, 4), 2, 8) == "0.5");
}

TEST_CASE("gaussian rationals") {
  GRational z = parse_grational("3/4+1/2i");
  CHECK(z.re == Rational(3, 4));
  CHECK(z.im == Rational(1, 2));
  CHECK(to_string(z) == "3/4+1/2i");
  CHECK(to_string(parse_grational("-2i")) == "-2i");
  CHECK(to_string(parse_grational("-1-2i")) == "-1-2i");
  CHECK(parse_grational("i") == GRational(Rational(0), Rational(1)));

  GRational w = parse_grational("1-1i");
  GRational prod = z * w;
  CHECK(prod == GRational(Rational(5, 4), Rational(-1, 4)));
  CHECK(z / z == GRational(1));
  CHECK(z.abs2() == Rational(13, 16));
  CHECK_THROWS_AS(z / GRational(0), Error);
}

TEST_CASE("polynomial evaluation matches the direct sum") {
  PolyN p{GRational(2), GRational(3), GRational(1)};  // n^2 + 3n + 2
  CHECK(p.eval(0L) == GRational(2));
  CHECK(p.eval(10L) == GRational(132));
  CHECK(p.eval(-3L) == GRational(2));  // root at -1 and -2, (-3+1)(-3+2)=2
  CHECK(p.degree() == 2);

  PolyN z = PolyN::zero();
  CHECK(z.is_zero());
  CHECK(z.eval(5L) == GRational(0));

  // trailing zero coefficients are trimmed
  PolyN q{GRational(1), GRational(0)};
  CHECK(q.degree() == 0);
}

TEST_CASE("scaled reals survive exponent ranges doubles cannot") {
  ScaledReal x = ScaledReal::from_double(1.5);
  ScaledReal acc = ScaledReal::from_double(1.0);
  for (int i = 0; i < 4000; ++i) acc = acc * x;  // 1.5^4000 ~ 10^704
  CHECK(acc.log10_abs() == doctest::Approx(4000 * std::log10(1.5)).epsilon(1e-12));
  for (int i = 0; i < 8000; ++i)
    acc = acc * ScaledReal::from_double(1.0 / 1.5);
  CHECK(acc.log10_abs() == doctest::Approx(-4000 * std::log10(1.5)).epsilon(1e-12));

  auto [mant, e10] = ScaledReal::from_double(-12345.0).decimal_parts();
  CHECK(e10 == 4);
  CHECK(mant == doctest::Approx(-1.2345));
}

TEST_CASE("scaled arithmetic agrees with doubles in range") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  for (int i = 0; i < 500; ++i) {
    double a = d(rng), b = d(rng);
    ScaledReal sa = ScaledReal::from_double(a), sb = ScaledReal::from_double(b);
    CHECK((sa * sb).to_double() == doctest::Approx(a * b).epsilon(1e-15));
    CHECK((sa + sb).to_double() == doctest::Approx(a + b).epsilon(1e-12));
    std::complex<double> ca(a, b), cb(b, -a);
    ScaledComplex xa = ScaledComplex::from_complex(ca);
    ScaledComplex xb = ScaledComplex::from_complex(cb);
    CHECK(std::abs((xa * xb).to_complex() - ca * cb) < 1e-12);
    CHECK(std::abs((xa + xb).to_complex() - (ca + cb)) < 1e-12);
    CHECK(xa.abs().to_double() == doctest::Approx(std::abs(ca)).epsilon(1e-14));
  }
}

TEST_CASE("scaled conversion from rationals is faithful") {
  Rational big = pow_rational(Rational(7, 3), 100);
  ScaledReal s = ScaledReal::from_rational(big);
  CHECK(s.log10_abs() ==
        doctest::Approx(100 * std::log10(7.0 / 3.0)).epsilon(1e-12));
  CHECK(ScaledReal::from_rational(Rational(0)).is_zero());
}
