#include <doctest.h>

#include "qprofile/tableaux.hpp"

using namespace qprofile;

TEST_CASE("ssyt enumeration") {
  auto one = enumerate_ssyt(Partition{2}, WeakComposition{1, 1});
  REQUIRE(one.size() == 1);
  CHECK(one[0].rows() == std::vector<std::vector<int>>{{1, 2}});

  CHECK(enumerate_ssyt(Partition{1, 1}, WeakComposition{2}).empty());
  CHECK(enumerate_ssyt(Partition{2, 1}, WeakComposition{1, 1, 1}).size() == 2);
  CHECK_THROWS_AS(enumerate_ssyt(Partition{2}, WeakComposition{1}), std::invalid_argument);

  // empty shape has the empty tableau
  CHECK(enumerate_ssyt(Partition{}, WeakComposition{}).size() == 1);
}

TEST_CASE("charge on pinned words") {
  CHECK(charge(std::vector<int>{1, 2}) == 1);
  CHECK(charge(std::vector<int>{2, 1}) == 0);
  CHECK(charge(std::vector<int>{1, 2, 3}) == 3);
  SSYT row({{1, 2}});
  CHECK(charge(row) == 1);
  CHECK(cocharge(row) == 0);
  SSYT col({{1}, {2}});
  CHECK(charge(col) == 0);
  CHECK(cocharge(col) == 1);
  CHECK_THROWS_AS(charge(std::vector<int>{2, 2, 1}), std::invalid_argument);
}

TEST_CASE("kostka numbers") {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& lam : partitions_of(n)) {
      CHECK(kostka_number(lam, WeakComposition(lam.parts())) == 1);
    }
  }
  CHECK(kostka_number(Partition{2, 1}, WeakComposition{1, 1, 1}) == 2);
  CHECK(kostka_number(Partition{1, 1}, WeakComposition{2}) == 0);
  CHECK_THROWS_AS(kostka_number(Partition{2}, WeakComposition{1}), std::invalid_argument);
}

TEST_CASE("kostka-foulkes pinned values") {
  CHECK(kostka_foulkes(Partition{2}, Partition{1, 1}) == PolyT::monomial(1));
  CHECK(kostka_foulkes(Partition{2, 1}, Partition{2, 1}) == PolyT::one());
  for (int n = 1; n <= 6; ++n) {
    CHECK(kostka_foulkes(Partition{n}, Partition(std::vector<int>(n, 1))) ==
          PolyT::monomial(n * (n - 1) / 2));
  }
  // charge values worked out by the subword decomposition by hand
  CHECK(kostka_foulkes(Partition{2, 1}, Partition{1, 1, 1}) ==
        PolyT::monomial(1) + PolyT::monomial(2));
  CHECK(kostka_foulkes(Partition{3, 1}, Partition{2, 1, 1}) ==
        PolyT::monomial(1) + PolyT::monomial(2));
  CHECK(kostka_foulkes(Partition{2, 2}, Partition{2, 1, 1}) == PolyT::monomial(1));
}

TEST_CASE("modified kostka pinned values") {
  CHECK(modified_kostka(Partition{2}, Partition{1, 1}) == PolyT::one());
  CHECK(modified_kostka(Partition{1, 1}, Partition{1, 1}) == PolyT::monomial(1));
  CHECK(modified_kostka(Partition{2}, Partition{2}) == PolyT::one());
}

TEST_CASE("charge plus cocharge is the n statistic of the content") {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& shape : partitions_of(n)) {
      for (const auto& content : partitions_of(n)) {
        for (const auto& t : enumerate_ssyt(shape, WeakComposition(content.parts()))) {
          CHECK(charge(t) + cocharge(t) == n_stat(content));
        }
      }
    }
  }
}

TEST_CASE("kostka-foulkes properties") {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& lam : partitions_of(n)) {
      for (const auto& mu : partitions_of(n)) {
        PolyT kf = kostka_foulkes(lam, mu);
        // at t=1 the charge statistic only counts tableaux
        CHECK(kf.eval(BigQ(1)) == to_bigq(kostka_number(lam, WeakComposition(mu.parts()))));
        if (!dominates(lam, mu)) CHECK(kf.is_zero());
        // modified variant flips charge to cocharge
        RatFunc flipped = RatFunc::t_power(n_stat(mu)) * RatFunc(kf).subst_invert();
        CHECK(flipped == RatFunc(modified_kostka(lam, mu)));
      }
    }
  }
}
