#include "extcalc/multi_index.hpp"

#include <bit>

#include "extcalc/errors.hpp"

namespace extcalc {

int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int bits_below(IndexMask m, int bit) {
  return std::popcount(static_cast<unsigned>(m & ((1u << bit) - 1u)));
}

int wedge_sign(IndexMask a, IndexMask b) {
  if (a & b) return 0;
  // Each pair (i in a, j in b) with i > j costs one transposition.
  int inversions = 0;
  for (unsigned rest = b; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    inversions += std::popcount(static_cast<unsigned>(a) >> (j + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

IndexTable::IndexTable(int dim, int grade) : dim_(dim), grade_(grade) {
  lookup_.fill(-1);
  // Lexicographic order on increasing tuples: generate by recursion on the
  // first index so the ordering is explicit rather than mask-numeric.
  std::vector<int> tuple(grade);
  auto rec = [&](auto&& self, int slot, int start) -> void {
    if (slot == grade) {
      IndexMask m = 0;
      for (int i : tuple) m |= static_cast<IndexMask>(1u << i);
      lookup_[m] = static_cast<int>(masks_.size());
      masks_.push_back(m);
      return;
    }
    for (int i = start; i < dim; ++i) {
      tuple[slot] = i;
      self(self, slot + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
}

std::vector<int> IndexTable::indices(int pos) const {
  std::vector<int> out;
  out.reserve(grade_);
  for (int i = 0; i < dim_; ++i)
    if (masks_[pos] & (1u << i)) out.push_back(i);
  return out;
}

const IndexTable& index_table(int dim, int grade) {
  require(dim >= 0 && dim <= kMaxDim, "dimension must lie in [0, 8]");
  require(grade >= 0 && grade <= dim, "grade must lie in [0, dim]");
  static const auto tables = [] {
    std::vector<std::vector<IndexTable>> t;
    for (int n = 0; n <= kMaxDim; ++n) {
      t.emplace_back();
      for (int k = 0; k <= n; ++k) t.back().emplace_back(n, k);
    }
    return t;
  }();
  return tables[dim][grade];
}

}  // namespace extcalc
