#include "qprofile/similarity_type.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qprofile {

SimilarityType::SimilarityType(std::vector<TypeBlock> blocks) : blocks_(std::move(blocks)) {
  for (const auto& b : blocks_) {
    if (b.degree < 1) throw std::invalid_argument("SimilarityType: block degree must be >= 1");
    if (b.shape.empty()) throw std::invalid_argument("SimilarityType: block shape must be nonempty");
  }
  std::sort(blocks_.begin(), blocks_.end());
}

int SimilarityType::size() const {
  int total = 0;
  for (const auto& b : blocks_) total += b.degree * b.shape.sum();
  return total;
}

std::string SimilarityType::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) s += ", ";
    s += "(" + std::to_string(blocks_[i].degree) + "," + blocks_[i].shape.to_string() + ")";
  }
  return s + "}";
}

SimilarityType diagonalizable_type(const Partition& nu) {
  std::vector<TypeBlock> blocks;
  for (int part : nu.parts()) {
    blocks.push_back({1, Partition(std::vector<int>(part, 1))});
  }
  return SimilarityType(std::move(blocks));
}

namespace {

void gen_types(const std::vector<TypeBlock>& items, std::size_t start, int remaining,
               std::vector<TypeBlock>& cur, std::vector<SimilarityType>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (std::size_t i = start; i < items.size(); ++i) {
    int w = items[i].degree * items[i].shape.sum();
    if (w > remaining) continue;
    cur.push_back(items[i]);
    gen_types(items, i, remaining - w, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<SimilarityType> all_types_of_size(int n) {
  if (n < 0) throw std::invalid_argument("all_types_of_size: n must be nonnegative");
  std::vector<TypeBlock> items;
  for (int d = 1; d <= n; ++d) {
    for (int m = 1; d * m <= n; ++m) {
      for (const auto& lambda : partitions_of(m)) items.push_back({d, lambda});
    }
  }
  std::vector<SimilarityType> out;
  std::vector<TypeBlock> cur;
  gen_types(items, 0, n, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

long long irreducible_count(int d, long long p) {
  if (d < 1) throw std::invalid_argument("irreducible_count: d must be >= 1");
  // Necklace count (1/d) sum_{e | d} mobius(e) p^{d/e}.
  auto mobius = [](int m) {
    int result = 1;
    for (int q = 2; q * q <= m; ++q) {
      if (m % q == 0) {
        m /= q;
        if (m % q == 0) return 0;
        result = -result;
      }
    }
    if (m > 1) result = -result;
    return result;
  };
  long long total = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    int mu = mobius(e);
    if (mu == 0) continue;
    long long power = 1;
    for (int i = 0; i < d / e; ++i) power *= p;
    total += mu * power;
  }
  return total / d;
}

bool is_realizable(const SimilarityType& tau, long long p) {
  std::map<int, int> blocks_per_degree;
  for (const auto& b : tau.blocks()) ++blocks_per_degree[b.degree];
  for (const auto& [d, count] : blocks_per_degree) {
    if (count > irreducible_count(d, p)) return false;
  }
  return true;
}

}  // namespace qprofile
