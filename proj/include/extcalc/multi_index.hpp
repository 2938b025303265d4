#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace extcalc {

inline constexpr int kMaxDim = 8;

/// A strictly increasing multi-index over {0, .., n-1}, stored as a bitmask.
using IndexMask = std::uint16_t;

/// Enumeration of the grade-k multi-indices of an n-dimensional space in
/// lexicographic order of their increasing tuples, plus the inverse lookup.
class IndexTable {
 public:
  IndexTable(int dim, int grade);

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] int grade() const { return grade_; }
  [[nodiscard]] int size() const { return static_cast<int>(masks_.size()); }
  [[nodiscard]] IndexMask mask(int pos) const { return masks_[pos]; }
  [[nodiscard]] std::span<const IndexMask> masks() const { return masks_; }
  /// Position of a mask of this grade; -1 when the mask has the wrong weight.
  [[nodiscard]] int position(IndexMask m) const { return lookup_[m]; }
  /// The increasing tuple (0-based) at `pos`.
  [[nodiscard]] std::vector<int> indices(int pos) const;

 private:
  int dim_;
  int grade_;
  std::vector<IndexMask> masks_;
  std::array<int, 1u << kMaxDim> lookup_{};
};

/// Cached table for (dim, grade); valid for 0 <= grade <= dim <= kMaxDim.
const IndexTable& index_table(int dim, int grade);

int binomial(int n, int k);

/// Sign of the shuffle placing the indices of `a` before those of `b` into
/// increasing order, i.e. e^a ^ e^b = sign * e^(a|b). Zero if they overlap.
int wedge_sign(IndexMask a, IndexMask b);

/// Number of set bits of `m` strictly below bit `bit`.
int bits_below(IndexMask m, int bit);

}  // namespace extcalc
