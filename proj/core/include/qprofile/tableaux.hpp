#pragma once

#include <vector>

#include "qprofile/partition.hpp"
#include "qprofile/ratfunc.hpp"

namespace qprofile {

/// Semistandard Young tableau: rows weakly increase, columns strictly
/// increase. Entries are 1-based; content[k] is the multiplicity of k+1.
class SSYT {
public:
  explicit SSYT(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  WeakComposition content() const;

  /// Reading word: rows left to right, bottom row first.
  std::vector<int> reading_word() const;

  bool operator==(const SSYT&) const = default;

private:
  std::vector<std::vector<int>> rows_;
};

/// All SSYT of the given shape and content, in a fixed lexicographic order
/// of the row-major fillings. Throws on |shape| != |content|.
std::vector<SSYT> enumerate_ssyt(const Partition& shape, const WeakComposition& content);

/// Lascoux-Schutzenberger charge of a word whose content is a partition.
int charge(const std::vector<int>& word);
/// Charge of a tableau with partition content (throws otherwise).
int charge(const SSYT& t);
/// cocharge(T) = n(content) - charge(T).
int cocharge(const SSYT& t);

/// Kostka number K_{lambda,mu} = |SSYT(lambda, mu)|.
long long kostka_number(const Partition& lambda, const WeakComposition& mu);

/// Kostka-Foulkes polynomial: charge generating function over
/// SSYT(lambda, mu), mu a partition. Cached.
PolyT kostka_foulkes(const Partition& lambda, const Partition& mu);

/// Modified Kostka-Foulkes polynomial: cocharge generating function,
/// equal to t^{n(mu)} K_{lambda,mu}(1/t). Cached.
PolyT modified_kostka(const Partition& lambda, const Partition& mu);

}  // namespace qprofile
