#include "doctest.h"
#include "test_helpers.hpp"
#include "trirec/errors.hpp"
#include "trirec/family.hpp"
#include "trirec/heun.hpp"

using namespace trirec;
using trirec::testing::RandomFamilies;

TEST_CASE("coeff_a on the flagship Heun family") {
  CoefficientFamily f = testing::flagship_heun();
  // A_0 = -q/gamma
  CHECK(coeff_a(f, 0) == GRational(Rational(-1, 2)));
  // A_n = (n^2+3n-2)/(n^2+5n+4); A_3 = 16/28
  CHECK(coeff_a(f, 3) == GRational(Rational(4, 7)));
}

TEST_CASE("coeff_a vanishing numerator constant term") {
  // q = 0 and beta + 1 = gamma + delta makes a_num(0) = lambda*s - q = 0
  // at lambda = 0.
  HeunParams p = make_heun_params(GRational(1), GRational(2), GRational(2),
                                  GRational(1), GRational(0));
  CoefficientFamily f = heun_family(p);
  CHECK(coeff_a(f, 0) == GRational(0));
}

TEST_CASE("coeff limits approach the leading ratios") {
  CoefficientFamily f = testing::flagship_heun();
  NormalizedFamily nf = normalize(f);
  const long n = 1000000;
  GRational a_n = coeff_a(f, n);
  Rational diff = abs((a_n - nf.lead_a).re);
  CHECK(diff <= Rational(10) / n);  // |A_n - A| = O(1/n)
  GRational nb = GRational(Rational(n)) * coeff_b(f, n);
  Rational diff_b = abs((nb - nf.lead_b).re);
  CHECK(diff_b <= Rational(10) / n);
}

TEST_CASE("coeff_b examples") {
  // beta = 0 kills B_n identically
  HeunParams p0 = make_heun_params(GRational(1), GRational(0), GRational(4),
                                   GRational(1), GRational(2));
  CoefficientFamily f0 = heun_family(p0);
  CHECK(f0.b_num.is_zero());
  CHECK(coeff_b(f0, 7) == GRational(0));

  // beta = 2, alpha = 1, lambda = 0, gamma = 4: B_1 = 2*(1+0+1-1)/(1+5+4)
  HeunParams p = make_heun_params(GRational(1), GRational(2), GRational(4),
                                  GRational(1), GRational(2));
  CoefficientFamily f = heun_family(p);
  CHECK(coeff_b(f, 1) == GRational(Rational(1, 5)));
}

TEST_CASE("pole detection") {
  CoefficientFamily f;
  f.a_num = PolyN{GRational(1)};
  f.a_den = PolyN{GRational(-3), GRational(1)};  // root at n = 3
  f.b_num = PolyN{GRational(1)};
  f.b_den = PolyN{GRational(1), GRational(1)};
  CHECK_THROWS_AS(coeff_a(f, 3), PoleAtIndex);
  CHECK_THROWS_AS(require_no_poles(f, 0, 10), PoleAtIndex);
  CHECK_NOTHROW(require_no_poles(f, 4, 10));
}

TEST_CASE("normalize on the Heun family") {
  CoefficientFamily f = testing::flagship_heun();
  NormalizedFamily nf = normalize(f);
  CHECK(nf.t == 2);
  CHECK(nf.lead_a == GRational(1));   // both quadratics monic
  CHECK(nf.lead_b == GRational(1));   // beta = 1
  CHECK(nf.a_decay_gap == 0);
  CHECK(nf.b_decay_gap == 1);
  // Omega_1 = 2l - beta + gamma + delta - 1 = 3, omega_1 = 2l + 1 + gamma = 5
  CHECK(nf.big_omega[1] == GRational(3));
  CHECK(nf.small_omega[1] == GRational(5));
}

TEST_CASE("normalize leading-ratio arithmetic") {
  CoefficientFamily f;
  f.a_num = PolyN{GRational(1), GRational(0), GRational(2)};  // 2n^2 + 1
  f.a_den = PolyN{GRational(1), GRational(0), GRational(1)};  // n^2 + 1
  f.b_num = PolyN{GRational(1), GRational(1)};
  f.b_den = PolyN{GRational(1), GRational(2), GRational(1)};
  NormalizedFamily nf = normalize(f);
  CHECK(nf.lead_a == GRational(2));
  CHECK(nf.big_omega[0] == GRational(Rational(1, 2)));
  CHECK(nf.small_omega[0] == GRational(1));
}

TEST_CASE("normalized reconstruction is exact") {
  RandomFamilies gen(11);
  for (int trial = 0; trial < 10; ++trial) {
    CoefficientFamily f = gen.thm_one_family(2 + trial % 2);
    NormalizedFamily nf = normalize(f);
    for (long n : {1L, 2L, 3L, 5L, 17L, 100L, 999L, 5000L, 10000L}) {
      CHECK(nf.a_at(n) == coeff_a(f, n));
      CHECK(nf.b_at(n) == coeff_b(f, n));
    }
  }
}

TEST_CASE("normalize rejects off-shape families") {
  CoefficientFamily f;
  f.a_num = PolyN{GRational(1), GRational(1)};             // deg 1
  f.a_den = PolyN{GRational(1), GRational(0), GRational(1)};  // deg 2
  f.b_num = PolyN{GRational(1)};                           // deg 0
  f.b_den = PolyN{GRational(1), GRational(0), GRational(1)};  // deg 2
  // a-side decays and b-side decays: neither theorem shape
  CHECK_THROWS_AS(normalize(f), Error);

  CoefficientFamily two_term = f;
  two_term.b_num = PolyN::zero();
  CHECK_THROWS_AS(normalize(two_term), Error);
}

TEST_CASE("family JSON round trip") {
  RandomFamilies gen(23);
  for (int trial = 0; trial < 20; ++trial) {
    CoefficientFamily f = gen.thm_one_family(1 + trial % 3);
    CoefficientFamily g = family_from_json(family_to_json(f));
    CHECK(f.a_num == g.a_num);
    CHECK(f.a_den == g.a_den);
    CHECK(f.b_num == g.b_num);
    CHECK(f.b_den == g.b_den);
    CHECK(f.n_min == g.n_min);
  }
}

TEST_CASE("family JSON accepts the documented string forms") {
  nlohmann::json j = {{"a_num", {"-2", "3", "1"}},
                      {"a_den", {"4", "5", "1"}},
                      {"b_num", {"0", "1"}},
                      {"b_den", {"4", "5", "1"}}};
  CoefficientFamily f = family_from_json(j);
  CoefficientFamily heun = testing::flagship_heun();
  CHECK(f.a_num == heun.a_num);
  CHECK(f.b_num == heun.b_num);
  CHECK(f.n_min == 1);

  nlohmann::json complex_j = {{"a_num", {"1/2+1/3i", "1"}},
                              {"a_den", {"1", "1"}},
                              {"b_num", {"1"}},
                              {"b_den", {"1", "1"}}};
  CoefficientFamily cf = family_from_json(complex_j);
  CHECK(cf.a_num.coeff(0) == GRational(Rational(1, 2), Rational(1, 3)));

  nlohmann::json bad = {{"a_num", {"1"}},
                        {"a_den", nlohmann::json::array()},
                        {"b_num", {"1"}},
                        {"b_den", {"1", "1"}}};
  CHECK_THROWS_AS(family_from_json(bad), Error);
}
