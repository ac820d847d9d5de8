#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "symbranch/error.hpp"
#include "symbranch/letter.hpp"
#include "symbranch/partition.hpp"

namespace symbranch {

/// 0-based box coordinates.
struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// A filling of a Young diagram, stored row by row. The row lengths must
/// form a partition; ordering conditions are checked by separate predicates
/// because the same container holds semistandard and standard tableaux.
template <class Entry>
class BasicTableau {
 public:
  using entry_type = Entry;
  using Row = std::vector<Entry>;

  BasicTableau() = default;
  explicit BasicTableau(std::vector<Row> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    for (std::size_t i = 0; i + 1 < rows_.size(); ++i)
      if (rows_[i].size() < rows_[i + 1].size())
        throw InvalidArgument("tableau row lengths must be weakly decreasing");
  }

  const std::vector<Row>& rows() const { return rows_; }
  std::size_t num_rows() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  const Entry& at(int row, int col) const { return rows_.at(row).at(col); }
  const Entry& at(Cell c) const { return at(c.row, c.col); }

  std::size_t size() const {
    std::size_t s = 0;
    for (const auto& r : rows_) s += r.size();
    return s;
  }

  Partition shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
    return Partition(std::move(parts));
  }

  friend auto operator<=>(const BasicTableau&, const BasicTableau&) = default;

 private:
  std::vector<Row> rows_;
};

using Tableau = BasicTableau<Letter>;

/// Builds a letter tableau from integer rows (negative = barred).
inline Tableau make_tableau(const std::vector<std::vector<int>>& rows) {
  std::vector<Tableau::Row> out;
  for (const auto& r : rows) {
    Tableau::Row row;
    for (int v : r) {
      if (v == 0) throw InvalidArgument("letter 0 is not in any alphabet");
      row.emplace_back(v);
    }
    out.push_back(std::move(row));
  }
  return Tableau(std::move(out));
}

/// A filling of λ/μ: row i holds the λ_i - μ_i entries right of the blanks.
template <class Entry>
class BasicSkewTableau {
 public:
  using Row = std::vector<Entry>;

  BasicSkewTableau() = default;
  BasicSkewTableau(Partition outer, Partition inner, std::vector<Row> rows)
      : outer_(std::move(outer)), inner_(std::move(inner)), rows_(std::move(rows)) {
    if (!outer_.contains(inner_)) throw InvalidArgument("inner shape not contained in outer shape");
    rows_.resize(static_cast<std::size_t>(outer_.length()));
    for (int i = 0; i < outer_.length(); ++i)
      if (static_cast<int>(rows_[i].size()) != outer_[i] - inner_[i])
        throw InvalidArgument("skew row " + std::to_string(i + 1) + " has the wrong length");
  }

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  const std::vector<Row>& rows() const { return rows_; }

  /// Entry at absolute coordinates; the cell must be a filled box.
  const Entry& at(Cell c) const { return rows_.at(c.row).at(c.col - inner_[c.row]); }
  bool is_blank(Cell c) const { return c.col < inner_[c.row]; }

  std::size_t size() const {
    std::size_t s = 0;
    for (const auto& r : rows_) s += r.size();
    return s;
  }

  friend auto operator<=>(const BasicSkewTableau&, const BasicSkewTableau&) = default;

 private:
  Partition outer_;
  Partition inner_;
  std::vector<Row> rows_;
};

using SkewTableau = BasicSkewTableau<Letter>;

/// Boxes of λ/μ in column-reading order: columns right to left, each column
/// top to bottom.
inline std::vector<Cell> column_reading_cells(const Partition& outer, const Partition& inner = {}) {
  std::vector<Cell> cells;
  const int width = outer[0];
  for (int c = width - 1; c >= 0; --c)
    for (int r = 0; r < outer.length() && outer[r] > c; ++r)
      if (c >= inner[r]) cells.push_back({r, c});
  return cells;
}

/// Boxes of λ/μ in row-reading order: rows top to bottom, each right to left.
inline std::vector<Cell> row_reading_cells(const Partition& outer, const Partition& inner = {}) {
  std::vector<Cell> cells;
  for (int r = 0; r < outer.length(); ++r)
    for (int c = outer[r] - 1; c >= inner[r]; --c) cells.push_back({r, c});
  return cells;
}

template <class Entry>
std::vector<Entry> column_word(const BasicTableau<Entry>& t) {
  std::vector<Entry> w;
  w.reserve(t.size());
  for (Cell c : column_reading_cells(t.shape())) w.push_back(t.at(c));
  return w;
}

template <class Entry>
std::vector<Entry> column_word(const BasicSkewTableau<Entry>& t) {
  std::vector<Entry> w;
  w.reserve(t.size());
  for (Cell c : column_reading_cells(t.outer(), t.inner())) w.push_back(t.at(c));
  return w;
}

template <class Entry>
std::vector<Entry> row_word(const BasicTableau<Entry>& t) {
  std::vector<Entry> w;
  w.reserve(t.size());
  for (Cell c : row_reading_cells(t.shape())) w.push_back(t.at(c));
  return w;
}

template <class Entry>
std::vector<Entry> row_word(const BasicSkewTableau<Entry>& t) {
  std::vector<Entry> w;
  w.reserve(t.size());
  for (Cell c : row_reading_cells(t.outer(), t.inner())) w.push_back(t.at(c));
  return w;
}

/// Rows weakly increasing, columns strictly increasing.
template <class Entry>
bool is_semistandard(const BasicTableau<Entry>& t) {
  const auto& rows = t.rows();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0 && rows[r][c] < rows[r][c - 1]) return false;
      if (r > 0 && !(rows[r - 1][c] < rows[r][c])) return false;
    }
  return true;
}

/// Semistandard on the filled boxes.
template <class Entry>
bool is_semistandard(const BasicSkewTableau<Entry>& t) {
  const auto& outer = t.outer();
  for (int r = 0; r < outer.length(); ++r)
    for (int c = t.inner()[r]; c < outer[r]; ++c) {
      const Cell here{r, c};
      if (c > t.inner()[r] && t.at(here) < t.at(Cell{r, c - 1})) return false;
      if (r > 0 && c >= t.inner()[r - 1] && !(t.at(Cell{r - 1, c}) < t.at(here))) return false;
    }
  return true;
}

/// Calls `visit(const Tableau&)` on every semistandard tableau of `shape`
/// over `alphabet`, in lexicographic order of the row-by-row filling.
template <class Visitor>
void for_each_ssyt(const Partition& shape, const Alphabet& alphabet, Visitor&& visit) {
  const auto& letters = alphabet.letters();
  const int m = static_cast<int>(letters.size());
  const int rows = shape.length();
  if (rows > m) return;

  std::vector<std::vector<int>> grid(rows);
  for (int r = 0; r < rows; ++r) grid[r].assign(shape[r], 0);

  std::vector<Cell> cells;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < shape[r]; ++c) cells.push_back({r, c});

  auto emit = [&] {
    std::vector<Tableau::Row> out(rows);
    for (int r = 0; r < rows; ++r) {
      out[r].reserve(grid[r].size());
      for (int rank : grid[r]) out[r].push_back(letters[rank]);
    }
    visit(Tableau(std::move(out)));
  };

  const std::size_t total = cells.size();
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == total) {
      emit();
      return;
    }
    const auto [r, c] = cells[k];
    int lo = 0;
    if (c > 0) lo = std::max(lo, grid[r][c - 1]);
    if (r > 0) lo = std::max(lo, grid[r - 1][c] + 1);
    // Leave room for the strictly increasing entries below in this column.
    int depth_below = 0;
    for (int rr = r + 1; rr < rows && shape[rr] > c; ++rr) ++depth_below;
    for (int v = lo; v < m - depth_below; ++v) {
      grid[r][c] = v;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
}

inline std::vector<Tableau> enumerate_ssyt(const Partition& shape, const Alphabet& alphabet) {
  std::vector<Tableau> out;
  for_each_ssyt(shape, alphabet, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

template <class Entry>
std::string tableau_to_string(const BasicTableau<Entry>& t) {
  std::string out = "[";
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    if (r) out += " / ";
    for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
      if (c) out += ",";
      if constexpr (std::is_same_v<Entry, Letter>)
        out += t.rows()[r][c].to_string();
      else
        out += std::to_string(t.rows()[r][c]);
    }
  }
  return out + "]";
}

}  // namespace symbranch
