#include "qprofile/tableaux.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace qprofile {

SSYT::SSYT(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].empty()) throw std::invalid_argument("SSYT: empty row");
    if (i + 1 < rows_.size() && rows_[i + 1].size() > rows_[i].size())
      throw std::invalid_argument("SSYT: row lengths must weakly decrease");
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (rows_[i][j] < 1) throw std::invalid_argument("SSYT: entries are positive");
      if (j + 1 < rows_[i].size() && rows_[i][j] > rows_[i][j + 1])
        throw std::invalid_argument("SSYT: rows must weakly increase");
      if (i + 1 < rows_.size() && j < rows_[i + 1].size() &&
          rows_[i][j] >= rows_[i + 1][j])
        throw std::invalid_argument("SSYT: columns must strictly increase");
    }
  }
}

Partition SSYT::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

WeakComposition SSYT::content() const {
  std::vector<int> mult;
  for (const auto& row : rows_) {
    for (int e : row) {
      if (e > static_cast<int>(mult.size())) mult.resize(e, 0);
      ++mult[e - 1];
    }
  }
  return WeakComposition(std::move(mult));
}

std::vector<int> SSYT::reading_word() const {
  std::vector<int> word;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
    word.insert(word.end(), it->begin(), it->end());
  return word;
}

namespace {

// Backtracking fill in row-major order. Cell (i,j) needs a value >= the left
// neighbour, > the one above, with remaining multiplicity.
void fill_cells(const Partition& shape, std::vector<int>& remaining,
                std::vector<std::vector<int>>& rows, std::size_t i, std::size_t j,
                std::vector<SSYT>& out) {
  if (i == shape.length()) {
    out.emplace_back(rows);
    return;
  }
  std::size_t ni = i, nj = j + 1;
  if (nj == static_cast<std::size_t>(shape[i])) {
    ni = i + 1;
    nj = 0;
  }
  int lo = j > 0 ? rows[i][j - 1] : 1;
  if (i > 0 && j < rows[i - 1].size()) lo = std::max(lo, rows[i - 1][j] + 1);
  for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
    if (remaining[v - 1] == 0) continue;
    --remaining[v - 1];
    rows[i][j] = v;
    fill_cells(shape, remaining, rows, ni, nj, out);
    ++remaining[v - 1];
  }
}

}  // namespace

std::vector<SSYT> enumerate_ssyt(const Partition& shape, const WeakComposition& content) {
  if (shape.sum() != content.sum())
    throw std::invalid_argument("enumerate_ssyt: |shape| != |content|");
  std::vector<SSYT> out;
  if (shape.empty()) {
    out.emplace_back(std::vector<std::vector<int>>{});
    return out;
  }
  std::vector<int> remaining = content.parts();
  std::vector<std::vector<int>> rows(shape.length());
  for (std::size_t i = 0; i < shape.length(); ++i) rows[i].assign(shape[i], 0);
  fill_cells(shape, remaining, rows, 0, 0, out);
  return out;
}

namespace {

// Charge of a word containing each of 1..m exactly once: the index of 1 is
// 0, and the index increases by one exactly when the next letter sits to the
// right of the previous one.
int charge_standard(const std::vector<int>& word) {
  int m = static_cast<int>(word.size());
  std::vector<int> pos(m + 1, -1);
  for (int i = 0; i < m; ++i) pos[word[i]] = i;
  int index = 0, total = 0;
  for (int r = 2; r <= m; ++r) {
    if (pos[r] > pos[r - 1]) ++index;
    total += index;
  }
  return total;
}

}  // namespace

int charge(const std::vector<int>& word) {
  std::vector<int> mult;
  for (int e : word) {
    if (e < 1) throw std::invalid_argument("charge: letters are positive");
    if (e > static_cast<int>(mult.size())) mult.resize(e, 0);
    ++mult[e - 1];
  }
  for (std::size_t i = 0; i + 1 < mult.size(); ++i) {
    if (mult[i] < mult[i + 1])
      throw std::invalid_argument("charge: content must be a partition");
  }

  std::vector<int> w = word;
  int total = 0;
  while (!w.empty()) {
    int m = *std::max_element(w.begin(), w.end());
    std::vector<char> taken(w.size(), 0);
    std::vector<int> selected;
    int cur = -1;
    for (int r = 1; r <= m; ++r) {
      int found = -1;
      for (int i = cur - 1; i >= 0; --i) {
        if (!taken[i] && w[i] == r) {
          found = i;
          break;
        }
      }
      if (found < 0) {
        for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i) {
          if (!taken[i] && w[i] == r) {
            found = i;
            break;
          }
        }
      }
      taken[found] = 1;
      selected.push_back(found);
      cur = found;
    }
    std::sort(selected.begin(), selected.end());
    std::vector<int> subword;
    subword.reserve(selected.size());
    for (int i : selected) subword.push_back(w[i]);
    total += charge_standard(subword);
    std::vector<int> rest;
    rest.reserve(w.size() - selected.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!taken[i]) rest.push_back(w[i]);
    }
    w = std::move(rest);
  }
  return total;
}

int charge(const SSYT& t) { return charge(t.reading_word()); }

int cocharge(const SSYT& t) {
  return n_stat(sort_to_partition(t.content())) - charge(t);
}

long long kostka_number(const Partition& lambda, const WeakComposition& mu) {
  if (lambda.sum() != mu.sum())
    throw std::invalid_argument("kostka_number: size mismatch");
  return static_cast<long long>(enumerate_ssyt(lambda, mu).size());
}

namespace {

std::map<std::pair<Partition, Partition>, PolyT>& kf_cache() {
  static std::map<std::pair<Partition, Partition>, PolyT> cache;
  return cache;
}

std::mutex& kf_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

PolyT kostka_foulkes(const Partition& lambda, const Partition& mu) {
  if (lambda.sum() != mu.sum())
    throw std::invalid_argument("kostka_foulkes: size mismatch");
  {
    std::lock_guard<std::mutex> lock(kf_mutex());
    auto it = kf_cache().find({lambda, mu});
    if (it != kf_cache().end()) return it->second;
  }
  PolyT result;
  for (const SSYT& t : enumerate_ssyt(lambda, WeakComposition(mu.parts()))) {
    result += PolyT::monomial(charge(t));
  }
  std::lock_guard<std::mutex> lock(kf_mutex());
  return kf_cache().emplace(std::make_pair(lambda, mu), result).first->second;
}

PolyT modified_kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.sum() != mu.sum())
    throw std::invalid_argument("modified_kostka: size mismatch");
  PolyT result;
  for (const SSYT& t : enumerate_ssyt(lambda, WeakComposition(mu.parts()))) {
    result += PolyT::monomial(cocharge(t));
  }
  return result;
}

}  // namespace qprofile
