#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symbranch/error.hpp"
#include "symbranch/letter.hpp"
#include "symbranch/partition.hpp"
#include "symbranch/tableau.hpp"

namespace symbranch {

enum class Relation { le, eq, ge };

inline std::string to_string(Relation r) {
  switch (r) {
    case Relation::le: return "<=";
    case Relation::eq: return "=";
    case Relation::ge: return ">=";
  }
  return "?";
}

/// coeffs · x (rel) rhs. Coefficients are integral for every system built
/// here.
struct Inequality {
  std::vector<long long> coeffs;
  Relation rel = Relation::le;
  long long rhs = 0;
  std::string label;

  long long evaluate(const std::vector<int>& x) const {
    long long s = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) s += coeffs[k] * x[k];
    return s;
  }

  bool satisfied_by(const std::vector<int>& x) const {
    const long long s = evaluate(x);
    switch (rel) {
      case Relation::le: return s <= rhs;
      case Relation::eq: return s == rhs;
      case Relation::ge: return s >= rhs;
    }
    return false;
  }
};

using VariableVector = std::vector<int>;

struct HRepresentation {
  std::vector<std::string> variable_names;
  std::vector<Inequality> ineqs;

  std::size_t dimension() const { return variable_names.size(); }

  bool contains(const VariableVector& x) const {
    return std::all_of(ineqs.begin(), ineqs.end(), [&](const Inequality& q) { return q.satisfied_by(x); });
  }
};

/// Coordinates (i, i) and (k̄, j) for k < j, row by row. Row j lists its
/// letters in the order they appear in a row: j, then (j-1)̄, ..., 1̄. Rows
/// past n are allowed so that non-stable members of domres can be encoded;
/// those rows carry only barred letters.
class DomresLayout {
 public:
  struct Slot {
    Letter letter;
    int row;  // 1-based
  };

  DomresLayout(int n, int rows) : n_(n), rows_(rows) {
    if (n < 1) throw InvalidArgument("rank must be at least 1");
    for (int j = 1; j <= rows; ++j) {
      if (j <= n) slots_.push_back({Letter::unbarred(j), j});
      for (int k = std::min(j - 1, n); k >= 1; --k) slots_.push_back({Letter::barred(k), j});
    }
  }
  explicit DomresLayout(int n) : DomresLayout(n, n) {}

  int n() const { return n_; }
  int rows() const { return rows_; }
  std::size_t size() const { return slots_.size(); }
  const Slot& slot(std::size_t k) const { return slots_[k]; }

  std::optional<std::size_t> index(Letter l, int row) const {
    for (std::size_t k = 0; k < slots_.size(); ++k)
      if (slots_[k].letter == l && slots_[k].row == row) return k;
    return std::nullopt;
  }

  std::size_t at(Letter l, int row) const {
    auto k = index(l, row);
    if (!k) throw InvalidArgument("no variable (" + l.to_string() + "," + std::to_string(row) + ")");
    return *k;
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& s : slots_) out.push_back("(" + s.letter.to_string() + "," + std::to_string(s.row) + ")");
    return out;
  }

 private:
  int n_;
  int rows_;
  std::vector<Slot> slots_;
};

/// Coordinates (i, j) for 0 ≤ i ≤ j ≤ n; i = 0 counts the blank boxes of
/// row j. Row j lists (0,j), (1,j), ..., (j,j).
class LRLayout {
 public:
  explicit LRLayout(int n) : n_(n) {
    if (n < 1) throw InvalidArgument("rank must be at least 1");
  }

  int n() const { return n_; }
  std::size_t size() const { return static_cast<std::size_t>(n_ * (n_ + 3) / 2); }

  std::size_t at(int i, int j) const {
    if (j < 1 || j > n_ || i < 0 || i > j) throw InvalidArgument("no variable (" + std::to_string(i) + "," + std::to_string(j) + ")");
    return static_cast<std::size_t>((j - 1) * (j + 2) / 2 + i);
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (int j = 1; j <= n_; ++j)
      for (int i = 0; i <= j; ++i) out.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
    return out;
  }

 private:
  int n_;
};

// Tableau <-> variables

/// Counts of each letter per row. Throws if a letter sits outside the
/// triangular pattern.
inline VariableVector tableau_to_variables(const Tableau& t, int n) {
  const int rows = static_cast<int>(t.num_rows());
  const DomresLayout layout(n, std::max(n, rows));
  VariableVector v(layout.size(), 0);
  for (int r = 0; r < rows; ++r)
    for (Letter l : t.rows()[r]) {
      auto k = layout.index(l, r + 1);
      if (!k) throw InvalidArgument("letter " + l.to_string() + " in row " + std::to_string(r + 1) + " is a structural zero");
      ++v[*k];
    }
  return v;
}

/// Fills each row from its counts; row lengths must match λ.
inline Tableau variables_to_tableau(const VariableVector& v, const Partition& lambda, int n) {
  const DomresLayout layout(n, std::max(n, lambda.length()));
  if (v.size() != layout.size()) throw InvalidArgument("variable vector has the wrong length");
  std::vector<Tableau::Row> rows(static_cast<std::size_t>(layout.rows()));
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] < 0) throw InvalidArgument("negative variable");
    const auto& s = layout.slot(k);
    rows[s.row - 1].insert(rows[s.row - 1].end(), static_cast<std::size_t>(v[k]), s.letter);
  }
  for (int r = 0; r < layout.rows(); ++r)
    if (static_cast<int>(rows[r].size()) != lambda[r])
      throw InvalidArgument("row " + std::to_string(r + 1) + " does not match the shape");
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  return Tableau(std::move(rows));
}

/// Blank counts and letter counts per row of an LR skew tableau whose
/// outer shape has at most n rows.
inline VariableVector skew_tableau_to_variables(const SkewTableau& l, int n) {
  if (l.outer().length() > n) throw ShapeOutOfType("outer shape has more than n rows");
  const LRLayout layout(n);
  VariableVector v(layout.size(), 0);
  for (int r = 0; r < l.outer().length(); ++r) {
    v[layout.at(0, r + 1)] = l.inner()[r];
    for (Letter x : l.rows()[r]) {
      if (x.is_barred() || x.value() > r + 1)
        throw InvalidArgument("letter " + x.to_string() + " in row " + std::to_string(r + 1) + " is a structural zero");
      ++v[layout.at(x.value(), r + 1)];
    }
  }
  return v;
}

inline SkewTableau variables_to_skew_tableau(const VariableVector& v, const Partition& lambda, int n) {
  const LRLayout layout(n);
  if (v.size() != layout.size()) throw InvalidArgument("variable vector has the wrong length");
  if (lambda.length() > n) throw ShapeOutOfType("outer shape has more than n rows");
  std::vector<int> inner(static_cast<std::size_t>(n));
  std::vector<SkewTableau::Row> rows(static_cast<std::size_t>(lambda.length()));
  for (int j = 1; j <= n; ++j) {
    int length = 0;
    for (int i = 0; i <= j; ++i) {
      const int c = v[layout.at(i, j)];
      if (c < 0) throw InvalidArgument("negative variable");
      length += c;
      if (i > 0 && c > 0) rows.at(j - 1).insert(rows[j - 1].end(), static_cast<std::size_t>(c), Letter(i));
    }
    if (length != lambda[j - 1]) throw InvalidArgument("row " + std::to_string(j) + " does not match the shape");
    inner[j - 1] = v[layout.at(0, j)];
  }
  return SkewTableau(lambda, Partition(std::move(inner)), std::move(rows));
}

// Inequality systems

namespace detail {

inline Inequality make_ineq(std::size_t dim, Relation rel, long long rhs, std::string label) {
  return Inequality{std::vector<long long>(dim, 0), rel, rhs, std::move(label)};
}

inline void require_stable(const Partition& lambda, const Partition& mu, int n) {
  if (lambda.length() > n || mu.length() > n) throw ShapeOutOfType("polytope descriptions need stable λ and μ");
  if (!lambda.contains(mu)) throw InvalidArgument(mu.to_string() + " is not contained in " + lambda.to_string());
}

}  // namespace detail

/// For every i and i < k ≤ n: (i,i) ≥ (ī,k) + Σ_{l < ī} (l,k), with l over
/// the barred alphabet.
inline std::vector<Inequality> cancellation_inequalities(const DomresLayout& layout) {
  std::vector<Inequality> out;
  const int n = layout.n();
  for (int i = 1; i <= n; ++i)
    for (int k = i + 1; k <= layout.rows(); ++k) {
      auto q = detail::make_ineq(layout.size(), Relation::ge, 0, "cancel i=" + std::to_string(i) + " k=" + std::to_string(k));
      if (i <= layout.rows()) q.coeffs[layout.at(Letter::unbarred(i), i)] += 1;
      const Letter bar_i = Letter::barred(i);
      for (std::size_t s = 0; s < layout.size(); ++s)
        if (layout.slot(s).row == k && layout.slot(s).letter <= bar_i) q.coeffs[s] -= 1;
      out.push_back(std::move(q));
    }
  return out;
}

/// For 1 ≤ i ≤ n-1 and i ≤ l ≤ n:
/// (i,i) - (i+1,i+1) - Σ_{k=i}^{l} [(ī,k) - ((i+1)̄,k-1)] ≥ 0.
inline std::vector<Inequality> dominance_inequalities(const DomresLayout& layout) {
  std::vector<Inequality> out;
  const int n = layout.n();
  auto add = [&](Inequality& q, Letter l, int row, long long c) {
    if (auto s = layout.index(l, row)) q.coeffs[*s] += c;
  };
  for (int i = 1; i <= n - 1; ++i)
    for (int l = i; l <= layout.rows(); ++l) {
      auto q = detail::make_ineq(layout.size(), Relation::ge, 0, "dominance i=" + std::to_string(i) + " l=" + std::to_string(l));
      add(q, Letter::unbarred(i), i, 1);
      add(q, Letter::unbarred(i + 1), i + 1, -1);
      for (int k = i; k <= l; ++k) {
        add(q, Letter::barred(i), k, -1);
        add(q, Letter::barred(i + 1), k - 1, 1);
      }
      out.push_back(std::move(q));
    }
  return out;
}

/// Row j of the lower row blocks row j+1 letter by letter: for every letter
/// x the number of entries ≤ x in row j+1 is at most the number of entries
/// < x in row j.
inline std::vector<Inequality> domres_column_strict_inequalities(const DomresLayout& layout) {
  std::vector<Inequality> out;
  for (int j = 2; j <= layout.rows(); ++j)
    for (std::size_t s = 0; s < layout.size(); ++s) {
      if (layout.slot(s).row != j) continue;
      const Letter x = layout.slot(s).letter;
      auto q = detail::make_ineq(layout.size(), Relation::le, 0, "column-strict row=" + std::to_string(j) + " x=" + x.to_string());
      for (std::size_t t = 0; t < layout.size(); ++t) {
        const auto& slot = layout.slot(t);
        if (slot.row == j && slot.letter <= x) q.coeffs[t] += 1;
        if (slot.row == j - 1 && slot.letter < x) q.coeffs[t] -= 1;
      }
      out.push_back(std::move(q));
    }
  return out;
}

/// 𝒟ℛ(λ, μ): shape and content equalities, nonnegativity, column
/// strictness, and the cancellation and dominance inequalities.
inline HRepresentation domres_h_rep(const Partition& lambda, const Partition& mu, int n) {
  detail::require_stable(lambda, mu, n);
  const DomresLayout layout(n);
  HRepresentation h{layout.names(), {}};
  const std::size_t dim = layout.size();
  for (std::size_t s = 0; s < dim; ++s) {
    auto q = detail::make_ineq(dim, Relation::ge, 0, "nonneg " + h.variable_names[s]);
    q.coeffs[s] = 1;
    h.ineqs.push_back(std::move(q));
  }
  for (int j = 1; j <= n; ++j) {
    auto q = detail::make_ineq(dim, Relation::eq, lambda[j - 1], "shape row=" + std::to_string(j));
    for (std::size_t s = 0; s < dim; ++s)
      if (layout.slot(s).row == j) q.coeffs[s] = 1;
    h.ineqs.push_back(std::move(q));
  }
  for (int i = 1; i <= n; ++i) {
    auto q = detail::make_ineq(dim, Relation::eq, mu[i - 1], "content i=" + std::to_string(i));
    for (std::size_t s = 0; s < dim; ++s)
      if (layout.slot(s).letter.index() == i) q.coeffs[s] = layout.slot(s).letter.is_barred() ? -1 : 1;
    h.ineqs.push_back(std::move(q));
  }
  for (auto* group : {&domres_column_strict_inequalities, &cancellation_inequalities, &dominance_inequalities})
    for (auto& q : (*group)(layout)) h.ineqs.push_back(std::move(q));
  return h;
}

/// Which written form of the LR system to build.
enum class LRForm {
  reconstructed,  // derived directly from the tableau conditions
  printed,        // (DOM) and (F) exactly as written; (SS) as reconstructed
};

/// 𝓛ℛ(λ, μ): blank counts, row fillings, nonnegativity, column strictness
/// and the ballot condition on the row reading word.
inline HRepresentation lr_h_rep(const Partition& lambda, const Partition& mu, int n, LRForm form = LRForm::reconstructed) {
  detail::require_stable(lambda, mu, n);
  const LRLayout layout(n);
  HRepresentation h{layout.names(), {}};
  const std::size_t dim = layout.size();
  auto var = [&](int i, int j) { return layout.at(i, j); };
  for (std::size_t s = 0; s < dim; ++s) {
    auto q = detail::make_ineq(dim, Relation::ge, 0, "nonneg " + h.variable_names[s]);
    q.coeffs[s] = 1;
    h.ineqs.push_back(std::move(q));
  }
  for (int j = 1; j <= n; ++j) {
    auto q = detail::make_ineq(dim, Relation::eq, mu[j - 1], "blank row=" + std::to_string(j));
    q.coeffs[var(0, j)] = 1;
    h.ineqs.push_back(std::move(q));
  }
  // (F)
  for (int m = 1; m <= n; ++m) {
    long long rhs = 0;
    if (form == LRForm::printed) {
      for (int i = m; i <= n; ++i) rhs += lambda[i - 1] - lambda[i];
    } else {
      rhs = lambda[m - 1];
    }
    auto q = detail::make_ineq(dim, Relation::eq, rhs, "fill row=" + std::to_string(m));
    for (int j = 0; j <= m; ++j) q.coeffs[var(j, m)] = 1;
    h.ineqs.push_back(std::move(q));
  }
  // (SS): entries ≤ x in row m fit under entries < x in row m-1.
  for (int m = 2; m <= n; ++m)
    for (int x = 1; x <= m; ++x) {
      auto q = detail::make_ineq(dim, Relation::le, 0, "column-strict row=" + std::to_string(m) + " x=" + std::to_string(x));
      for (int i = 0; i <= x; ++i) q.coeffs[var(i, m)] += 1;
      for (int i = 0; i < x && i <= m - 1; ++i) q.coeffs[var(i, m - 1)] -= 1;
      h.ineqs.push_back(std::move(q));
    }
  // (DOM): after the j's of row m, #j so far ≤ #(j-1) in rows above.
  for (int m = 2; m <= n; ++m)
    for (int j = 2; j <= m; ++j) {
      auto q = detail::make_ineq(dim, Relation::le, 0, "ballot row=" + std::to_string(m) + " j=" + std::to_string(j));
      q.coeffs[var(j, m)] += 1;
      for (int k = 1; k <= m - 1; ++k)
        if (j - 1 <= k) q.coeffs[var(j - 1, k)] -= 1;
      for (int k = form == LRForm::printed ? 2 : 1; k <= m - 1; ++k)
        if (j <= k) q.coeffs[var(j, k)] += 1;
      h.ineqs.push_back(std::move(q));
    }
  return h;
}

// Lattice points

struct Box {
  std::vector<long long> lower;
  std::vector<long long> upper;
};

namespace detail {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

inline long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

/// Tightens [lo, hi] for variable `t` from `a_t x_t ≤ rest_bound`.
inline void tighten_le(long long a, long long bound, long long& lo, long long& hi) {
  if (a > 0) hi = std::min(hi, floor_div(bound, a));
  if (a < 0) lo = std::max(lo, ceil_div(bound, a));
}

/// One pass of bound propagation over every constraint; returns whether
/// anything changed. Bounds at ±kInf are treated as absent.
inline bool propagate(const HRepresentation& h, Box& box) {
  bool changed = false;
  const std::size_t dim = h.dimension();
  for (const auto& q : h.ineqs) {
    for (int sense : {1, -1}) {
      if ((q.rel == Relation::le && sense == -1) || (q.rel == Relation::ge && sense == 1)) continue;
      // sense · (coeffs · x) ≤ sense · rhs
      for (std::size_t t = 0; t < dim; ++t) {
        const long long a = sense * q.coeffs[t];
        if (a == 0) continue;
        long long others = 0;
        bool finite = true;
        for (std::size_t k = 0; k < dim && finite; ++k) {
          if (k == t) continue;
          const long long c = sense * q.coeffs[k];
          if (c > 0) {
            if (box.lower[k] <= -kInf) finite = false;
            else others += c * box.lower[k];
          } else if (c < 0) {
            if (box.upper[k] >= kInf) finite = false;
            else others += c * box.upper[k];
          }
        }
        if (!finite) continue;
        long long lo = box.lower[t], hi = box.upper[t];
        tighten_le(a, sense * q.rhs - others, lo, hi);
        if (lo != box.lower[t] || hi != box.upper[t]) {
          box.lower[t] = lo;
          box.upper[t] = hi;
          changed = true;
        }
      }
    }
  }
  return changed;
}

}  // namespace detail

/// Bounds implied by the system, by repeated propagation. Throws if some
/// variable stays unbounded.
inline Box derive_box(const HRepresentation& h) {
  const std::size_t dim = h.dimension();
  Box box{std::vector<long long>(dim, -detail::kInf), std::vector<long long>(dim, detail::kInf)};
  for (int pass = 0; pass < 64 && detail::propagate(h, box); ++pass) {
  }
  for (std::size_t k = 0; k < dim; ++k)
    if (box.lower[k] <= -detail::kInf || box.upper[k] >= detail::kInf)
      throw InvalidArgument("variable " + h.variable_names[k] + " is unbounded");
  return box;
}

/// Integer points of H inside `box`, in lexicographic order. Each variable's
/// range is narrowed from the constraints given the variables already fixed.
inline std::vector<VariableVector> lattice_points(const HRepresentation& h, const Box& box) {
  const std::size_t dim = h.dimension();
  for (const auto& q : h.ineqs)
    if (q.coeffs.size() != dim) throw InvalidArgument("inequality has the wrong number of coefficients");
  if (box.lower.size() != dim || box.upper.size() != dim) throw InvalidArgument("box has the wrong dimension");

  std::vector<VariableVector> out;
  VariableVector x(dim, 0);
  // Per constraint: the extreme values the unfixed tail k ≥ t can contribute.
  std::vector<std::vector<long long>> tail_min(h.ineqs.size(), std::vector<long long>(dim + 1, 0));
  std::vector<std::vector<long long>> tail_max(h.ineqs.size(), std::vector<long long>(dim + 1, 0));
  for (std::size_t c = 0; c < h.ineqs.size(); ++c)
    for (std::size_t k = dim; k-- > 0;) {
      const long long a = h.ineqs[c].coeffs[k];
      const long long lo = a * (a >= 0 ? box.lower[k] : box.upper[k]);
      const long long hi = a * (a >= 0 ? box.upper[k] : box.lower[k]);
      tail_min[c][k] = tail_min[c][k + 1] + lo;
      tail_max[c][k] = tail_max[c][k + 1] + hi;
    }
  std::vector<long long> partial(h.ineqs.size(), 0);

  auto rec = [&](auto&& self, std::size_t t) -> void {
    if (t == dim) {
      if (h.contains(x)) out.push_back(x);
      return;
    }
    long long lo = box.lower[t], hi = box.upper[t];
    for (std::size_t c = 0; c < h.ineqs.size() && lo <= hi; ++c) {
      const auto& q = h.ineqs[c];
      const long long a = q.coeffs[t];
      if (a == 0) continue;
      if (q.rel != Relation::ge) detail::tighten_le(a, q.rhs - partial[c] - tail_min[c][t + 1], lo, hi);
      if (q.rel != Relation::le) detail::tighten_le(-a, -(q.rhs - partial[c] - tail_max[c][t + 1]), lo, hi);
    }
    for (long long v = lo; v <= hi; ++v) {
      x[t] = static_cast<int>(v);
      for (std::size_t c = 0; c < h.ineqs.size(); ++c) partial[c] += h.ineqs[c].coeffs[t] * v;
      self(self, t + 1);
      for (std::size_t c = 0; c < h.ineqs.size(); ++c) partial[c] -= h.ineqs[c].coeffs[t] * v;
    }
  };
  rec(rec, 0);
  return out;
}

inline std::vector<VariableVector> lattice_points(const HRepresentation& h) { return lattice_points(h, derive_box(h)); }

}  // namespace symbranch
