#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace qprofile {

/// Weak composition: a finite sequence of nonnegative integers. Trailing
/// zeros are stripped on construction, so compositions that differ only in
/// trailing zeros compare equal.
class WeakComposition {
public:
  WeakComposition() = default;
  WeakComposition(std::initializer_list<int> parts);
  explicit WeakComposition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int sum() const;
  // Entry at 0-based index i; zero beyond the stored length.
  int operator[](std::size_t i) const {
    return i < parts_.size() ? parts_[i] : 0;
  }

  bool operator==(const WeakComposition&) const = default;
  auto operator<=>(const WeakComposition&) const = default;

  std::string to_string() const;

private:
  std::vector<int> parts_;
};

/// Integer partition: weakly decreasing positive parts, trailing zeros
/// stripped. Immutable after construction. Total order is lexicographic on
/// the part sequences, which on partitions of a fixed n puts (1^n) first and
/// (n) last.
class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int sum() const;
  bool empty() const { return parts_.empty(); }
  // Part at 0-based index i; zero beyond the stored length.
  int operator[](std::size_t i) const {
    return i < parts_.size() ? parts_[i] : 0;
  }
  int first() const { return parts_.empty() ? 0 : parts_.front(); }

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

  std::string to_string() const;  // "(3,1,1)", "()" for the empty partition

private:
  std::vector<int> parts_;
};

struct SkewPair {
  Partition outer;
  Partition inner;
};

/// Conjugate partition: column lengths of the diagram. Involution.
Partition conjugate(const Partition& lambda);

/// Componentwise containment inner_i <= outer_i.
bool contains(const Partition& outer, const Partition& inner);

/// Dominance order on partitions of equal size: all prefix sums of mu weakly
/// exceed those of nu. Throws std::invalid_argument on |mu| != |nu|.
bool dominates(const Partition& mu, const Partition& nu);

/// True iff inner is contained in outer and the skew diagram has at most one
/// box per column, i.e. outer_{i+1} <= inner_i for all i.
bool is_horizontal_strip(const SkewPair& s);

/// n(lambda) = sum (i-1) * lambda_i.
int n_stat(const Partition& lambda);

/// epsilon(lambda) = (-1)^(|lambda| - length(lambda)).
int epsilon(const Partition& lambda);

/// All partitions of n in ascending lexicographic order, so (1^n) comes
/// first and (n) last. n must be in [0, kDegreeCap].
std::vector<Partition> partitions_of(int n);

enum class IdealBound { strict, inclusive };

/// The order ideal of partitions of all m < n (strict) or m <= n
/// (inclusive), ordered by size then lexicographically.
std::vector<Partition> partitions_up_to(int n, IdealBound bound);

/// Strip zeros and sort descending.
Partition sort_to_partition(const WeakComposition& alpha);

/// mu . nu = sum_j mu_j * nu_j.
int dot(const Partition& mu, const Partition& nu);

/// k*(k-1)/2.
inline long long binom2(long long k) { return k * (k - 1) / 2; }

}  // namespace qprofile
