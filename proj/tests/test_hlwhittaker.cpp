#include <doctest.h>

#include "qprofile/hlwhittaker.hpp"
#include "qprofile/tableaux.hpp"

using namespace qprofile;

namespace {

const PolyT kT = PolyT::monomial(1);

SymFunc schur(const Partition& lam) { return from_basis(BasisId::s, lam); }

}  // namespace

TEST_CASE("modified and transformed Hall-Littlewood at small degree") {
  CHECK(modified_hl(Partition{2}) == schur(Partition{2}));
  SymFunc h11 = modified_hl(Partition{1, 1});
  CHECK(h11.schur_coeff(Partition{2}) == RatFunc::one());
  CHECK(h11.schur_coeff(Partition{1, 1}) == RatFunc(kT));

  CHECK(transformed_hl(Partition{2}) == schur(Partition{2}));
  SymFunc t11 = transformed_hl(Partition{1, 1});
  CHECK(t11.schur_coeff(Partition{2}) == RatFunc(kT));
  CHECK(t11.schur_coeff(Partition{1, 1}) == RatFunc::one());

  // modified at t=1 keeps the unitriangular corner at one
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lam : partitions_of(n)) {
      CHECK(specialize_t(modified_hl(lam), BigQ(1)).schur_coeff(lam) == RatFunc::one());
    }
  }
}

TEST_CASE("Hall-Littlewood P at small degree") {
  SymFunc p2 = hl_p(Partition{2});
  CHECK(p2.schur_coeff(Partition{2}) == RatFunc::one());
  CHECK(p2.schur_coeff(Partition{1, 1}) == -RatFunc(kT));
  for (int n = 1; n <= 6; ++n) {
    CHECK(hl_p(Partition(std::vector<int>(n, 1))) == from_basis(BasisId::e, Partition{n}));
  }
}

TEST_CASE("q-Whittaker at small degree") {
  SymFunc w2 = q_whittaker(Partition{2});
  CHECK(w2.schur_coeff(Partition{2}) == RatFunc::one());
  CHECK(w2.schur_coeff(Partition{1, 1}) == RatFunc(kT));

  for (int k = 1; k <= 6; ++k) {
    CHECK(dual_q_whittaker(Partition{k}) == from_basis(BasisId::h, Partition{k}));
  }
  SymFunc wd11 = dual_q_whittaker(Partition{1, 1});
  CHECK(wd11.schur_coeff(Partition{1, 1}) == RatFunc::one());
  CHECK(wd11.schur_coeff(Partition{2}) == -RatFunc(kT));
}

TEST_CASE("plethysm by power sums") {
  CHECK(plethysm_pd(2, from_basis(BasisId::p, Partition{3})) ==
        from_basis(BasisId::p, Partition{6}));
  // the parameter counts as an indeterminate: p_2[t p_1] = t^2 p_2
  SymFunc tp1 = RatFunc(kT) * from_basis(BasisId::p, Partition{1});
  CHECK(plethysm_pd(2, tp1) ==
        RatFunc(PolyT::monomial(2)) * from_basis(BasisId::p, Partition{2}));
  CHECK(plethysm_pd(2, modified_hl(Partition{1})) == from_basis(BasisId::p, Partition{2}));
  CHECK_THROWS_AS(plethysm_pd(7, from_basis(BasisId::p, Partition{2})),
                  std::invalid_argument);
}

TEST_CASE("alphabet substitutions leave the parameter alone") {
  SymFunc p2 = from_basis(BasisId::p, Partition{2});
  CHECK(pleth_times_onem(p2) ==
        (RatFunc::one() - RatFunc(PolyT::monomial(2))) * p2);
  for (int n = 0; n <= 5; ++n) {
    for (const auto& lam : partitions_of(n)) {
      SymFunc f = RatFunc(kT) * transformed_hl(lam);
      CHECK(pleth_over_onem(pleth_times_onem(f)) == f);
    }
  }
}

TEST_CASE("pieri coefficients") {
  CHECK(pieri_psi(Partition{2}, Partition{1}) == PolyT::one() + kT);
  CHECK(pieri_psi(Partition{1, 1}, Partition{1}) == PolyT::one());
  for (int n = 0; n <= 6; ++n) {
    for (const auto& eta : partitions_of(n)) CHECK(pieri_psi(eta, eta) == PolyT::one());
  }
  // vanishing exactly off horizontal strips; delta on equal sizes
  for (int n = 0; n <= 6; ++n) {
    for (const auto& eta : partitions_of(n)) {
      for (int m = 0; m <= n; ++m) {
        for (const auto& mu : partitions_of(m)) {
          bool strip = is_horizontal_strip({eta, mu});
          CHECK(pieri_psi(eta, mu).is_zero() == !strip);
          if (m == n) {
            CHECK(pieri_psi(eta, mu) == (eta == mu ? PolyT::one() : PolyT::zero()));
          }
        }
      }
    }
  }
}

TEST_CASE("strip weights theta") {
  CHECK(strip_theta(Partition{2}, Partition{1}) == RatFunc::one());
  CHECK(strip_theta(Partition{1, 1}, Partition{1}) == RatFunc::one());
  CHECK(strip_theta(Partition{2, 2}, Partition{1}) == RatFunc::zero());
  // [2]!/[1]! * [2 over 1] = (1+t)^2
  CHECK(strip_theta(Partition{3, 1}, Partition{2}) ==
        RatFunc((PolyT::one() + kT) * (PolyT::one() + kT)));
}

TEST_CASE("expansion in one-parameter bases round trips") {
  for (int n = 0; n <= 5; ++n) {
    for (BasisId tag : {BasisId::P, BasisId::H, BasisId::Hmod, BasisId::W, BasisId::Wdual}) {
      for (const auto& lam : partitions_of(n)) {
        auto coeffs = expand_in(basis_element(tag, lam), tag);
        REQUIRE(coeffs.size() == 1);
        CHECK(coeffs.begin()->first == lam);
        CHECK(coeffs.begin()->second == RatFunc::one());
      }
    }
  }
}

TEST_CASE("h_2 expands in the W basis") {
  auto coeffs = expand_in(from_basis(BasisId::h, Partition{2}), BasisId::W);
  REQUIRE(coeffs.size() == 2);
  CHECK(coeffs.at(Partition{2}) == RatFunc::one());
  CHECK(coeffs.at(Partition{1, 1}) == -RatFunc(kT));
}
