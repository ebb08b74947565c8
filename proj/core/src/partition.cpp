#include "qprofile/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qprofile/config.hpp"

namespace qprofile {

namespace {

void strip_trailing_zeros(std::vector<int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

WeakComposition::WeakComposition(std::initializer_list<int> parts)
    : WeakComposition(std::vector<int>(parts)) {}

WeakComposition::WeakComposition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 0) throw std::invalid_argument("weak composition parts must be nonnegative");
  }
  strip_trailing_zeros(parts_);
}

int WeakComposition::sum() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string WeakComposition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  strip_trailing_zeros(parts_);
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::sum() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols(lambda.first(), 0);
  for (int j = 0; j < lambda.first(); ++j) {
    int count = 0;
    for (int part : lambda.parts()) {
      if (part >= j + 1) ++count;
    }
    cols[j] = count;
  }
  return Partition(std::move(cols));
}

bool contains(const Partition& outer, const Partition& inner) {
  for (std::size_t i = 0; i < inner.length(); ++i) {
    if (inner[i] > outer[i]) return false;
  }
  return true;
}

bool dominates(const Partition& mu, const Partition& nu) {
  if (mu.sum() != nu.sum())
    throw std::invalid_argument("dominance compares partitions of equal size");
  int a = 0, b = 0;
  std::size_t len = std::max(mu.length(), nu.length());
  for (std::size_t k = 0; k < len; ++k) {
    a += mu[k];
    b += nu[k];
    if (a < b) return false;
  }
  return true;
}

bool is_horizontal_strip(const SkewPair& s) {
  if (!contains(s.outer, s.inner)) return false;
  for (std::size_t i = 0; i + 1 < s.outer.length(); ++i) {
    if (s.outer[i + 1] > s.inner[i]) return false;
  }
  return true;
}

int n_stat(const Partition& lambda) {
  int total = 0;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    total += static_cast<int>(i) * lambda[i];
  }
  return total;
}

int epsilon(const Partition& lambda) {
  return (lambda.sum() - static_cast<int>(lambda.length())) % 2 == 0 ? 1 : -1;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
  if (n > kDegreeCap)
    throw std::invalid_argument("partitions_of: n exceeds the degree cap");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(n, n, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_up_to(int n, IdealBound bound) {
  if (n < 0) throw std::invalid_argument("partitions_up_to: n must be nonnegative");
  std::vector<Partition> out;
  int top = bound == IdealBound::strict ? n - 1 : n;
  for (int m = 0; m <= top; ++m) {
    auto pm = partitions_of(m);
    out.insert(out.end(), pm.begin(), pm.end());
  }
  return out;
}

Partition sort_to_partition(const WeakComposition& alpha) {
  std::vector<int> v;
  for (int p : alpha.parts()) {
    if (p > 0) v.push_back(p);
  }
  std::sort(v.begin(), v.end(), std::greater<int>());
  return Partition(std::move(v));
}

int dot(const Partition& mu, const Partition& nu) {
  int total = 0;
  std::size_t len = std::min(mu.length(), nu.length());
  for (std::size_t j = 0; j < len; ++j) total += mu[j] * nu[j];
  return total;
}

}  // namespace qprofile
