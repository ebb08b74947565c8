#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qprofile/partition.hpp"

namespace qprofile {

/// One primary block: distinct irreducible of the given degree with the
/// given partition of exponents.
struct TypeBlock {
  int degree = 1;
  Partition shape;
  auto operator<=>(const TypeBlock&) const = default;
};

/// Similarity class type: a multiset of (degree, partition) blocks. This is
/// the q-independent conjugacy data of an operator. Size is the ambient
/// dimension sum d_i * |shape_i|.
class SimilarityType {
public:
  SimilarityType() = default;
  explicit SimilarityType(std::vector<TypeBlock> blocks);

  const std::vector<TypeBlock>& blocks() const { return blocks_; }
  int size() const;

  bool operator==(const SimilarityType&) const = default;
  auto operator<=>(const SimilarityType&) const = default;

  std::string to_string() const;

private:
  std::vector<TypeBlock> blocks_;  // kept sorted; multiset semantics
};

/// Tuple of nonnegative integers tracking the first r steps of a profile.
/// Unlike partitions, trailing zeros are meaningful and order is fixed.
using ProfileTuple = std::vector<int>;

/// The type of a diagonalizable operator with eigenspace dimensions nu:
/// one linear block with shape (1^{nu_i}) per eigenvalue.
SimilarityType diagonalizable_type(const Partition& nu);

/// Every similarity class type of the given size (no realizability filter).
std::vector<SimilarityType> all_types_of_size(int n);

/// Number of monic irreducible polynomials of degree d over F_p.
long long irreducible_count(int d, long long p);

/// Whether a matrix of this type exists over F_p: each degree d needs as
/// many distinct irreducibles as the type has blocks of degree d.
bool is_realizable(const SimilarityType& tau, long long p);

}  // namespace qprofile
