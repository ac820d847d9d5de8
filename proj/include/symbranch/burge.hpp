#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "symbranch/error.hpp"
#include "symbranch/partition.hpp"
#include "symbranch/tableau.hpp"

namespace symbranch {

using StandardTableau = BasicTableau<int>;

/// Strictly increasing along rows and down columns, distinct entries.
inline bool is_standard(const StandardTableau& t) {
  const auto& rows = t.rows();
  std::set<int> seen;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c] <= 0 || !seen.insert(rows[r][c]).second) return false;
      if (c > 0 && rows[r][c] <= rows[r][c - 1]) return false;
      if (r > 0 && rows[r][c] <= rows[r - 1][c]) return false;
    }
  return true;
}

inline std::vector<int> entries_of(const StandardTableau& t) {
  std::vector<int> out;
  for (const auto& row : t.rows()) out.insert(out.end(), row.begin(), row.end());
  std::sort(out.begin(), out.end());
  return out;
}

/// Row index (0-based) holding `value`, or -1.
inline int row_of(const StandardTableau& t, int value) {
  for (std::size_t r = 0; r < t.rows().size(); ++r)
    for (int v : t.rows()[r])
      if (v == value) return static_cast<int>(r);
  return -1;
}

/// Every column has even length.
inline bool is_even_shape(const Partition& p) {
  const Partition columns = p.conjugate();
  for (int len : columns.parts())
    if (len % 2 != 0) return false;
  return true;
}

/// Pairs (j_s, i_s) with j_1 < ... < j_r, j_s > i_s, all entries distinct.
class SpecialTwoLineArray {
 public:
  SpecialTwoLineArray() = default;
  SpecialTwoLineArray(std::vector<int> top, std::vector<int> bottom) {
    if (top.size() != bottom.size()) throw InvalidArgument("two-line array rows differ in length");
    std::set<int> seen;
    for (std::size_t s = 0; s < top.size(); ++s) {
      if (top[s] <= 0 || bottom[s] <= 0) throw InvalidArgument("two-line array entries must be positive");
      if (s > 0 && top[s - 1] >= top[s]) throw InvalidArgument("top row must be strictly increasing");
      if (top[s] <= bottom[s]) throw InvalidArgument("each top entry must exceed the one below it");
      if (!seen.insert(top[s]).second || !seen.insert(bottom[s]).second)
        throw InvalidArgument("two-line array entries must be distinct");
    }
    top_ = std::move(top);
    bottom_ = std::move(bottom);
  }

  const std::vector<int>& top() const { return top_; }
  const std::vector<int>& bottom() const { return bottom_; }
  std::size_t size() const { return top_.size(); }
  bool empty() const { return top_.empty(); }

  friend bool operator==(const SpecialTwoLineArray&, const SpecialTwoLineArray&) = default;
  friend auto operator<=>(const SpecialTwoLineArray&, const SpecialTwoLineArray&) = default;

 private:
  std::vector<int> top_;
  std::vector<int> bottom_;
};

/// Column insertion: in each column the value displaces the topmost entry
/// greater than it, and the displaced entry moves on to the next column; a
/// value with nothing greater in its column is appended at the bottom.
inline StandardTableau column_insert(const StandardTableau& q, int x) {
  auto rows = q.rows();
  for (const auto& row : rows)
    if (std::find(row.begin(), row.end(), x) != row.end())
      throw InvalidArgument("value " + std::to_string(x) + " is already in the tableau");

  int carry = x;
  for (std::size_t col = 0;; ++col) {
    std::size_t r = 0;
    for (; r < rows.size() && rows[r].size() > col; ++r) {
      if (rows[r][col] > carry) break;
    }
    if (r < rows.size() && rows[r].size() > col) {
      std::swap(rows[r][col], carry);
      continue;
    }
    // Append at the bottom of this column.
    if (r == rows.size()) rows.emplace_back();
    if (rows[r].size() != col) throw InternalInconsistency("column insertion left a non-partition shape");
    rows[r].push_back(carry);
    break;
  }
  return StandardTableau(std::move(rows));
}

/// Inserts `values` one after another, first element first.
inline StandardTableau column_insert_all(StandardTableau q, const std::vector<int>& values) {
  for (int v : values) q = column_insert(q, v);
  return q;
}

/// The order in which the entries of A are column inserted:
/// i_r, ..., i_1 and then j_{s_r}, ..., j_{s_1}, where s orders the bottom
/// row increasingly. (The arrow notation j_{s_1} -> ... -> i_r -> T inserts
/// the rightmost value first.)
inline std::vector<int> burge_insertion_order(const SpecialTwoLineArray& a) {
  const std::size_t r = a.size();
  std::vector<std::size_t> s(r);
  std::iota(s.begin(), s.end(), 0);
  std::sort(s.begin(), s.end(), [&](std::size_t x, std::size_t y) { return a.bottom()[x] < a.bottom()[y]; });
  std::vector<int> order;
  order.reserve(2 * r);
  for (std::size_t k = r; k-- > 0;) order.push_back(a.bottom()[k]);
  for (std::size_t k = r; k-- > 0;) order.push_back(a.top()[s[k]]);
  return order;
}

inline StandardTableau array_to_even_tableau(const SpecialTwoLineArray& a) {
  return column_insert_all(StandardTableau{}, burge_insertion_order(a));
}

namespace detail {

/// Reverse row insertion from the end of row `r`; returns the ejected value.
inline int reverse_row_insert(std::vector<std::vector<int>>& rows, std::size_t r) {
  int carry = rows[r].back();
  rows[r].pop_back();
  if (rows[r].empty()) rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(r));
  for (std::size_t k = r; k-- > 0;) {
    auto& row = rows[k];
    // Largest entry smaller than carry.
    auto it = std::lower_bound(row.begin(), row.end(), carry);
    if (it == row.begin()) throw InternalInconsistency("reverse row insertion failed");
    --it;
    std::swap(*it, carry);
  }
  return carry;
}

}  // namespace detail

/// Inverse of array_to_even_tableau.
///
/// The column-inserted tableau coincides with the Schensted P-symbol of the
/// fixed-point-free involution pairing each j_s with i_s (written in
/// one-line notation on the sorted entry set). That involution has P = Q, so
/// reverse row insertion driven by E itself, peeling off the largest entry's
/// corner each time, recovers the one-line word and hence the pairs.
inline SpecialTwoLineArray even_tableau_to_array(const StandardTableau& e) {
  if (!is_standard(e)) throw InvalidArgument("tableau is not standard");
  if (!is_even_shape(e.shape())) throw InvalidArgument("tableau does not have even shape");
  const std::vector<int> sorted = entries_of(e);
  const std::size_t size = sorted.size();
  auto position = [&](int v) {
    return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
  };

  std::vector<std::vector<int>> p = e.rows();
  std::vector<std::vector<int>> q = e.rows();
  std::vector<int> one_line(size, 0);
  for (std::size_t k = size; k-- > 0;) {
    // The recording tableau q holds the largest remaining entry at a corner.
    const int largest = sorted[k];
    std::size_t r = 0;
    while (r < q.size() && (q[r].empty() || q[r].back() != largest)) ++r;
    if (r == q.size()) throw InternalInconsistency("largest entry is not at a corner");
    q[r].pop_back();
    if (q[r].empty()) q.erase(q.begin() + static_cast<std::ptrdiff_t>(r));
    one_line[k] = detail::reverse_row_insert(p, r);
  }

  std::vector<std::pair<int, int>> pairs;
  for (std::size_t k = 0; k < size; ++k) {
    const int a = sorted[k];
    const int b = one_line[k];
    const int partner_of_b = one_line[position(b)];
    if (partner_of_b != a || a == b) throw InternalInconsistency("recovered word is not a fixed-point-free involution");
    if (a > b) pairs.emplace_back(a, b);
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<int> top, bottom;
  for (auto [j, i] : pairs) {
    top.push_back(j);
    bottom.push_back(i);
  }
  return SpecialTwoLineArray(std::move(top), std::move(bottom));
}

}  // namespace symbranch
