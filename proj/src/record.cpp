#include "scindex/record.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace scindex {

CitationRecord::CitationRecord(std::vector<std::int64_t> counts) {
  for (auto v : counts) {
    if (v < 0) throw std::invalid_argument("citation counts must be non-negative");
  }
  std::sort(counts.begin(), counts.end(), std::greater<>());
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  entries_ = std::move(counts);
}

CitationRecord CitationRecord::from_nonincreasing(std::vector<std::int64_t> entries) {
  assert(std::is_sorted(entries.begin(), entries.end(), std::greater<>()));
  assert(entries.empty() || entries.back() >= 1);
  CitationRecord r;
  r.entries_ = std::move(entries);
  return r;
}

std::int64_t CitationRecord::total_citations() const {
  return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
}

std::string CitationRecord::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries_[i]);
  }
  s += ')';
  return s;
}

CitationRecord make_record(std::vector<std::int64_t> counts) {
  return CitationRecord(std::move(counts));
}

CitationRecord dual(const CitationRecord& x) {
  if (x.empty()) return {};
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(x[0]));
  // Entries are sorted, so #{ j : x_j >= i } is found by walking a cursor.
  std::size_t j = x.length();
  for (std::int64_t i = 1; i <= x[0]; ++i) {
    while (j > 0 && x[j - 1] < i) --j;
    out.push_back(static_cast<std::int64_t>(j));
  }
  return CitationRecord::from_nonincreasing(std::move(out));
}

CitationRecord vscale(const CitationRecord& x, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("vertical scale factor must be >= 1");
  std::vector<std::int64_t> out(x.vec());
  for (auto& v : out) v *= k;
  return CitationRecord::from_nonincreasing(std::move(out));
}

CitationRecord hstretch(const CitationRecord& x, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("horizontal stretch factor must be >= 1");
  std::vector<std::int64_t> out;
  out.reserve(x.length() * static_cast<std::size_t>(m));
  for (auto v : x.entries()) out.insert(out.end(), static_cast<std::size_t>(m), v);
  return CitationRecord::from_nonincreasing(std::move(out));
}

CitationRecord cmax(const CitationRecord& x, const CitationRecord& y) {
  const auto& a = x.vec();
  const auto& b = y.vec();
  std::vector<std::int64_t> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::int64_t va = i < a.size() ? a[i] : 0;
    std::int64_t vb = i < b.size() ? b[i] : 0;
    out[i] = std::max(va, vb);
  }
  return CitationRecord::from_nonincreasing(std::move(out));
}

CitationRecord cmin(const CitationRecord& x, const CitationRecord& y) {
  std::size_t n = std::min(x.length(), y.length());
  std::vector<std::int64_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = std::min(x[i], y[i]);
  return CitationRecord::from_nonincreasing(std::move(out));
}

bool dominates(const CitationRecord& x, const CitationRecord& y) {
  if (x.length() > y.length()) return false;
  for (std::size_t i = 0; i < x.length(); ++i) {
    if (x[i] > y[i]) return false;
  }
  return true;
}

bool strictly_dominates(const CitationRecord& x, const CitationRecord& y) {
  return dominates(x, y) && x != y;
}

bool cumulatively_dominates(const CitationRecord& x, const CitationRecord& y) {
  if (x.length() > y.length()) return false;
  // Prefix sums saturate at each record's own length; beyond both lengths the
  // condition is the totals comparison, already covered at j = l(y).
  std::int64_t px = 0, py = 0;
  for (std::size_t j = 0; j < y.length(); ++j) {
    if (j < x.length()) px += x[j];
    py += y[j];
    if (px < py) return false;
  }
  return true;
}

DominancePair classify_dominance(const CitationRecord& left, const CitationRecord& right) {
  DominanceRelation rel = DominanceRelation::incomparable;
  if (strictly_dominates(left, right))
    rel = DominanceRelation::strictly_dominates;
  else if (dominates(left, right))
    rel = DominanceRelation::dominates;
  else if (cumulatively_dominates(left, right))
    rel = DominanceRelation::cumulatively_dominates;
  return DominancePair{left, right, rel};
}

std::int64_t bar_height(const CitationRecord& x, double t) {
  if (t < 0 || t > static_cast<double>(x.length()))
    throw std::domain_error("bar_height: argument outside [0, l(x)]");
  if (x.empty()) return 0;
  if (t == 0) return x[0];
  auto i = static_cast<std::size_t>(std::ceil(t));
  return x[i - 1];
}

std::vector<CitationRecord> enumerate_records(int max_len, int max_cite) {
  std::vector<CitationRecord> out;
  std::vector<std::int64_t> stack;
  std::function<void()> grow = [&] {
    out.push_back(CitationRecord::from_nonincreasing(stack));
    if (static_cast<int>(stack.size()) == max_len) return;
    std::int64_t cap = stack.empty() ? max_cite : stack.back();
    for (std::int64_t v = 1; v <= cap; ++v) {
      stack.push_back(v);
      grow();
      stack.pop_back();
    }
  };
  grow();
  return out;
}

}  // namespace scindex
