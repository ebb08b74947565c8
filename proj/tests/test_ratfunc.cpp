#include <doctest.h>

#include "qprofile/ratfunc.hpp"

using namespace qprofile;

namespace {

const PolyT kT = PolyT::monomial(1);

// Independent route to the Gaussian binomial: the quotient of products
// prod (1 - t^{n-k+i}) / (1 - t^i), reduced as a rational function.
RatFunc q_binomial_by_quotient(int n, int k) {
  RatFunc r = RatFunc::one();
  for (int i = 1; i <= k; ++i) {
    r *= RatFunc(PolyT::one() - PolyT::monomial(n - k + i));
    r /= RatFunc(PolyT::one() - PolyT::monomial(i));
  }
  return r;
}

}  // namespace

TEST_CASE("field arithmetic reduces and normalizes") {
  RatFunc a(PolyT::one() - PolyT::monomial(2), PolyT::one() - kT);  // (1-t^2)/(1-t)
  CHECK(a.is_polynomial());
  CHECK(a.as_poly() == PolyT::one() + kT);

  CHECK(RatFunc(kT) * RatFunc::t_power(-1) == RatFunc::one());

  // geometric-series division (t^n - 1)/(t^m - 1) for m | n
  RatFunc g = RatFunc(PolyT::monomial(6) - PolyT::one()) /
              RatFunc(PolyT::monomial(2) - PolyT::one());
  CHECK(g.is_polynomial());
  CHECK(g.as_poly() == PolyT::one() + PolyT::monomial(2) + PolyT::monomial(4));

  CHECK_THROWS_AS(RatFunc::one() / RatFunc::zero(), std::domain_error);
}

TEST_CASE("q analogs") {
  CHECK(q_int(0) == PolyT::zero());
  CHECK(q_int(2) == PolyT::one() + kT);
  CHECK(q_factorial(3) == q_int(1) * q_int(2) * q_int(3));
  CHECK(q_binomial(2, 1) == PolyT::one() + kT);
  CHECK(q_binomial(5, 7) == PolyT::zero());
  CHECK_THROWS_AS(q_binomial(-1, 0), std::invalid_argument);

  // frozen from the quotient-of-products oracle
  PolyT expect42(std::vector<BigQ>{BigQ(1), BigQ(1), BigQ(2), BigQ(1), BigQ(1)});
  CHECK(q_binomial_by_quotient(4, 2).as_poly() == expect42);
  CHECK(q_binomial(4, 2) == expect42);
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(RatFunc(q_binomial(n, k)) == q_binomial_by_quotient(n, k));
      CHECK(q_binomial(n, k) == q_binomial(n, n - k));
    }
  }

  CHECK(q_multinomial(2, WeakComposition{1, 1}) == RatFunc(PolyT::one() + kT));
  CHECK(q_multinomial(4, WeakComposition{2, 2}).is_polynomial());
  CHECK_THROWS_AS(q_multinomial(3, WeakComposition{1, 1}), std::invalid_argument);
}

TEST_CASE("q_binomial at t=1 is the binomial coefficient") {
  for (int n = 0; n <= 12; ++n) {
    BigQ binom(1);
    for (int k = 0; k <= n; ++k) {
      CHECK(q_binomial(n, k).eval(BigQ(1)) == binom);
      binom = binom * (n - k) / (k + 1);
    }
  }
}

TEST_CASE("substitutions") {
  RatFunc f(PolyT::one() + kT);
  CHECK(f.subst_power(2) == RatFunc(PolyT::one() + PolyT::monomial(2)));
  CHECK(RatFunc(kT).subst_power(3) == RatFunc(PolyT::monomial(3)));
  RatFunc geo(PolyT::one(), PolyT::one() - kT);
  CHECK(geo.subst_power(2) == RatFunc(PolyT::one(), PolyT::one() - PolyT::monomial(2)));

  CHECK(f.subst_invert() == RatFunc(PolyT::one() + kT, kT));
  CHECK(RatFunc(PolyT::monomial(2)).subst_invert() == RatFunc::t_power(-2));
  CHECK(RatFunc(PolyT::one() + kT, kT).subst_invert() == RatFunc(PolyT::one() + kT));
}

TEST_CASE("subst_invert is an involution") {
  std::vector<RatFunc> samples = {
      RatFunc::zero(), RatFunc::one(), RatFunc(kT),
      RatFunc(PolyT::one() + kT, PolyT::monomial(3)),
      RatFunc(q_binomial(4, 2)),
      RatFunc(q_factorial(3), PolyT::one() - PolyT::monomial(2)),
      RatFunc::t_power(-5) - RatFunc(7),
  };
  for (const auto& f : samples) CHECK(f.subst_invert().subst_invert() == f);
}

TEST_CASE("evaluation") {
  CHECK(RatFunc(PolyT::one() + kT).eval_at(BigQ(2)) == 3);
  CHECK(q_binomial(4, 2).eval(BigQ(2)) == 35);
  // stored form is always reduced, so no spurious pole at t=1
  RatFunc r(PolyT::monomial(2) - PolyT::one(), kT - PolyT::one());
  CHECK(r.eval_at(BigQ(1)) == 2);
  RatFunc pole(PolyT::one(), kT - PolyT::one());
  CHECK_THROWS_AS(pole.eval_at(BigQ(1)), PoleError);
}

TEST_CASE("gcd corner cases") {
  PolyT a = (kT - PolyT::one()).pow(3) * (kT + PolyT(2));
  PolyT b = (kT - PolyT::one()) * (kT + PolyT(5));
  CHECK(PolyT::gcd(a, b) == kT - PolyT::one());
  CHECK(PolyT::gcd(PolyT::zero(), b) == b.monic());
  CHECK(PolyT::gcd(a, PolyT::zero()) == a.monic());
}

TEST_CASE("printing") {
  CHECK(PolyT::zero().to_string() == "0");
  PolyT p(std::vector<BigQ>{BigQ(1), BigQ(1), BigQ(2)});
  CHECK(p.to_string() == "1 + t + 2*t^2");
  PolyT q(std::vector<BigQ>{BigQ(0), BigQ(-1)});
  CHECK(q.to_string() == "-t");
  CHECK(RatFunc::t_power(-2).to_string() == "(1) / (t^2)");
}
