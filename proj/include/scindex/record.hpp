#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace scindex {

/// A citation record: per-paper citation counts x_1 >= x_2 >= ... >= x_l, all >= 1.
/// Construction strips zeros and sorts, so the empty record is the canonical
/// representation of "no cited papers". The bar graph B(x) is the first-quadrant
/// region under the step function of the entries; it is queried through
/// bar_height rather than stored.
class CitationRecord {
 public:
  CitationRecord() = default;

  /// Normalizing constructor: sorts non-increasing and removes zeros.
  /// Throws std::invalid_argument on negative counts.
  explicit CitationRecord(std::vector<std::int64_t> counts);

  /// Trusted constructor for entries already sorted non-increasing with no zeros.
  static CitationRecord from_nonincreasing(std::vector<std::int64_t> entries);

  std::size_t length() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  /// 0-based access: operator[](i) is x_{i+1} in 1-based notation.
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }

  std::span<const std::int64_t> entries() const noexcept { return entries_; }
  const std::vector<std::int64_t>& vec() const noexcept { return entries_; }

  std::int64_t total_citations() const;

  bool operator==(const CitationRecord&) const = default;
  auto operator<=>(const CitationRecord&) const = default;

  std::string to_string() const;  // "(11,7,6)" or "()"

 private:
  std::vector<std::int64_t> entries_;
};

/// Convenience literal-style builder.
CitationRecord make_record(std::vector<std::int64_t> counts);

/// Conjugate partition: dual(x)_i = #{ j : x_j >= i } for i = 1..x_1.
/// Reflects B(x) about the diagonal; dual(dual(x)) == x.
CitationRecord dual(const CitationRecord& x);

/// Vertical scaling kx: every entry multiplied by k. Requires k >= 1.
CitationRecord vscale(const CitationRecord& x, std::int64_t k);

/// Horizontal stretch x^{<->m}: every entry repeated m times. Requires m >= 1.
CitationRecord hstretch(const CitationRecord& x, std::int64_t m);

/// Componentwise maximum; B(cmax(x,y)) == B(x) u B(y).
CitationRecord cmax(const CitationRecord& x, const CitationRecord& y);

/// Componentwise minimum truncated to the shorter length; B(cmin(x,y)) == B(x) n B(y).
CitationRecord cmin(const CitationRecord& x, const CitationRecord& y);

/// True iff x <= y in the dominance order: l(x) <= l(y) and x_k <= y_k for all k <= l(x).
bool dominates(const CitationRecord& x, const CitationRecord& y);

/// True iff x <= y and x != y.
bool strictly_dominates(const CitationRecord& x, const CitationRecord& y);

/// True iff x cumulatively dominates y: l(x) <= l(y) and every prefix sum of x
/// (saturating at its full total) is >= the matching prefix sum of y.
bool cumulatively_dominates(const CitationRecord& x, const CitationRecord& y);

enum class DominanceRelation { dominates, strictly_dominates, cumulatively_dominates, incomparable };

struct DominancePair {
  CitationRecord left, right;
  DominanceRelation relation;
};

/// Classifies the pair: strict/weak dominance of left by right first, then
/// cumulative dominance of left over right, else incomparable.
DominancePair classify_dominance(const CitationRecord& left, const CitationRecord& right);

/// Step-function value s_x(t) for t in [0, l(x)]: x_1 at t = 0, x_i on (i-1, i].
/// Throws std::domain_error outside the domain.
std::int64_t bar_height(const CitationRecord& x, double t);

/// All records with length <= max_len and x_1 <= max_cite (the empty record
/// included), in a fixed depth-first order: a record precedes its extensions,
/// and siblings appear by increasing entry. Used by the axiom harnesses.
std::vector<CitationRecord> enumerate_records(int max_len, int max_cite);

}  // namespace scindex
