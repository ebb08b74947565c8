#include <doctest.h>

#include <algorithm>
#include <set>

#include "qprofile/partition.hpp"

using namespace qprofile;

namespace {

// Independent conjugate: count boxes column by column straight off the
// diagram, no arithmetic shortcuts.
Partition conjugate_by_boxes(const Partition& lambda) {
  std::set<std::pair<int, int>> boxes;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) boxes.insert({static_cast<int>(i), j});
  }
  std::vector<int> cols;
  for (int j = 0;; ++j) {
    int count = 0;
    for (const auto& [r, c] : boxes) {
      if (c == j) ++count;
    }
    if (count == 0) break;
    cols.push_back(count);
  }
  return Partition(cols);
}

// Independent partition counter (classic two-variable recursion), used only
// to pin down the counts the generator must reproduce.
long long count_partitions(int n, int max_part) {
  if (n == 0) return 1;
  if (max_part == 0) return 0;
  long long total = 0;
  for (int p = 1; p <= max_part && p <= n; ++p) total += count_partitions(n - p, p);
  return total;
}

}  // namespace

TEST_CASE("conjugate on pinned shapes") {
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate(Partition{2, 1}) == Partition{2, 1});
  CHECK(conjugate(Partition{3, 1}) == conjugate_by_boxes(Partition{3, 1}));
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
}

TEST_CASE("conjugate is an involution and matches the diagram") {
  for (int n = 0; n <= 10; ++n) {
    for (const auto& lam : partitions_of(n)) {
      CHECK(conjugate(conjugate(lam)) == lam);
      CHECK(conjugate(lam) == conjugate_by_boxes(lam));
    }
  }
}

TEST_CASE("dominance order") {
  CHECK(dominates(Partition{2}, Partition{1, 1}));
  CHECK_FALSE(dominates(Partition{1, 1}, Partition{2}));
  CHECK_FALSE(dominates(Partition{2, 2}, Partition{3, 1}));
  CHECK_THROWS_AS(dominates(Partition{2}, Partition{1}), std::invalid_argument);
}

TEST_CASE("dominance refines reverse lexicographic order") {
  for (int n = 0; n <= 8; ++n) {
    auto parts = partitions_of(n);
    for (const auto& mu : parts) {
      for (const auto& nu : parts) {
        if (dominates(mu, nu) && mu != nu) {
          // our lex order lists dominated partitions first
          CHECK(nu < mu);
        }
      }
    }
  }
}

TEST_CASE("horizontal strips") {
  CHECK(is_horizontal_strip({Partition{2}, Partition{1}}));
  CHECK_FALSE(is_horizontal_strip({Partition{2, 2}, Partition{1}}));
  CHECK(is_horizontal_strip({Partition{3, 1}, Partition{3, 1}}));
  CHECK_FALSE(is_horizontal_strip({Partition{1}, Partition{2}}));  // not contained
}

TEST_CASE("n statistic and epsilon") {
  CHECK(n_stat(Partition{5}) == 0);
  CHECK(n_stat(Partition{1, 1}) == 1);
  for (int k = 1; k <= 6; ++k) {
    CHECK(n_stat(Partition(std::vector<int>(k, 1))) == k * (k - 1) / 2);
  }
  CHECK(epsilon(Partition{1, 1, 1}) == 1);
  CHECK(epsilon(Partition{2}) == -1);
  CHECK(epsilon(Partition{2, 1}) == -1);
}

TEST_CASE("partitions_of ordering and counts") {
  CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
  auto p4 = partitions_of(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4.front() == Partition{1, 1, 1, 1});
  CHECK(p4.back() == Partition{4});
  CHECK(std::is_sorted(p4.begin(), p4.end()));
  CHECK(partitions_of(8).size() == 22);

  // partition-count sequence p(0)..p(12)
  const long long expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int n = 0; n <= 12; ++n) {
    CHECK(static_cast<long long>(partitions_of(n).size()) == expected[n]);
    CHECK(count_partitions(n, n) == expected[n]);
  }
  CHECK_THROWS_AS(partitions_of(13), std::invalid_argument);
  CHECK_THROWS_AS(partitions_of(-1), std::invalid_argument);
}

TEST_CASE("partitions_up_to") {
  CHECK(partitions_up_to(1, IdealBound::strict) == std::vector<Partition>{Partition{}});
  CHECK(partitions_up_to(2, IdealBound::strict) ==
        std::vector<Partition>{Partition{}, Partition{1}});
  auto ideal = partitions_up_to(3, IdealBound::inclusive);
  REQUIRE(ideal.size() == 7);
  CHECK(ideal[0] == Partition{});
  CHECK(ideal[6] == Partition{3});
}

TEST_CASE("sort_to_partition and composition equivalence") {
  CHECK(sort_to_partition(WeakComposition{0, 2, 1, 0}) == Partition{2, 1});
  CHECK(sort_to_partition(WeakComposition{}) == Partition{});
  CHECK(sort_to_partition(WeakComposition{1, 3, 1}) == Partition{3, 1, 1});
  CHECK(WeakComposition{3, 1, 2, 0, 1, 0, 0} == WeakComposition{3, 1, 2, 0, 1});
}
