#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <vector>

#include "symbranch/burge.hpp"
#include "symbranch/error.hpp"
#include "symbranch/partition.hpp"
#include "symbranch/tableau.hpp"

namespace symbranch {

/// Every prefix has at least as many i's as (i+1)'s (letters are positive).
inline bool is_ballot(const Word& w) {
  std::vector<int> counts;
  for (Letter l : w) {
    const auto v = static_cast<std::size_t>(l.value());
    if (counts.size() < v + 1) counts.resize(v + 1, 0);
    ++counts[v];
    if (v >= 2 && counts[v] > counts[v - 1]) return false;
  }
  return true;
}

/// Letter counts of a skew tableau over {1, 2, ...}.
inline Partition skew_weight(const SkewTableau& l) {
  std::vector<int> counts;
  for (const auto& row : l.rows())
    for (Letter x : row) {
      const auto v = static_cast<std::size_t>(x.value());
      if (counts.size() < v) counts.resize(v, 0);
      ++counts[v - 1];
    }
  return Partition(std::move(counts));
}

/// Semistandard, unbarred, and with a ballot column word.
inline bool is_littlewood_richardson(const SkewTableau& l) {
  for (const auto& row : l.rows())
    for (Letter x : row)
      if (x.is_barred()) return false;
  return is_semistandard(l) && is_ballot(column_word(l));
}

/// No entry 2i+1 strictly below row n+i (1-based rows), for every i >= 0.
inline bool is_n_symplectic(const SkewTableau& l, int n) {
  for (std::size_t r = 0; r < l.rows().size(); ++r) {
    const int row = static_cast<int>(r) + 1;
    for (Letter x : l.rows()[r]) {
      const int v = x.value();
      if (v % 2 == 1 && row > n + (v - 1) / 2) return false;
    }
  }
  return true;
}

/// Same condition with i limited to 0..l(μ)/2, the range written next to
/// the definition. Kept only to report where the two readings disagree.
inline bool is_n_symplectic_limited_range(const SkewTableau& l, int n) {
  const int max_i = l.inner().length() / 2;
  for (std::size_t r = 0; r < l.rows().size(); ++r) {
    const int row = static_cast<int>(r) + 1;
    for (Letter x : l.rows()[r]) {
      const int v = x.value();
      if (v % 2 == 1 && (v - 1) / 2 <= max_i && row > n + (v - 1) / 2) return false;
    }
  }
  return true;
}

/// Calls visit(const SkewTableau&) on every semistandard filling of λ/μ
/// with content η, in lexicographic row-by-row order.
template <class Visitor>
void for_each_skew_ssyt_with_content(const Partition& lambda, const Partition& mu, const Partition& eta,
                                     Visitor&& visit) {
  if (!lambda.contains(mu)) throw InvalidArgument("inner shape " + mu.to_string() + " not contained in " + lambda.to_string());
  if (lambda.size() - mu.size() != eta.size()) return;
  std::vector<Cell> cells;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = mu[r]; c < lambda[r]; ++c) cells.push_back({r, c});
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(lambda.length()));
  for (int r = 0; r < lambda.length(); ++r) grid[r].assign(lambda[r], 0);  // 0 = blank
  std::vector<int> remaining = eta.parts();
  const int letters = eta.length();

  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      std::vector<SkewTableau::Row> rows(static_cast<std::size_t>(lambda.length()));
      for (int r = 0; r < lambda.length(); ++r)
        for (int c = mu[r]; c < lambda[r]; ++c) rows[r].emplace_back(grid[r][c]);
      visit(SkewTableau(lambda, mu, std::move(rows)));
      return;
    }
    const auto [r, c] = cells[k];
    int lo = 1;
    if (c > mu[r]) lo = std::max(lo, grid[r][c - 1]);
    if (r > 0 && c >= mu[r - 1]) lo = std::max(lo, grid[r - 1][c] + 1);
    for (int v = lo; v <= letters; ++v) {
      if (remaining[v - 1] == 0) continue;
      --remaining[v - 1];
      grid[r][c] = v;
      self(self, k + 1);
      ++remaining[v - 1];
    }
  };
  rec(rec, 0);
}

/// LR(λ/μ, η).
inline std::vector<SkewTableau> enumerate_lr(const Partition& lambda, const Partition& mu, const Partition& eta) {
  std::vector<SkewTableau> out;
  for_each_skew_ssyt_with_content(lambda, mu, eta, [&](const SkewTableau& l) {
    if (is_ballot(column_word(l))) out.push_back(l);
  });
  return out;
}

/// c^λ_{μ,η}
inline long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& eta) {
  if (!lambda.contains(mu)) throw InvalidArgument("inner shape " + mu.to_string() + " not contained in " + lambda.to_string());
  long long count = 0;
  for_each_skew_ssyt_with_content(lambda, mu, eta, [&](const SkewTableau& l) {
    if (is_ballot(column_word(l))) ++count;
  });
  return count;
}

/// LRS(λ/μ, η): the n-symplectic members of LR(λ/μ, η).
inline std::vector<SkewTableau> enumerate_lrs(const Partition& lambda, const Partition& mu, const Partition& eta, int n) {
  auto all = enumerate_lr(lambda, mu, eta);
  std::erase_if(all, [n](const SkewTableau& l) { return !is_n_symplectic(l, n); });
  return all;
}

/// Even partitions (all columns even) of `size`.
inline std::vector<Partition> even_partitions_of(int size) {
  std::vector<Partition> out;
  for (auto& p : partitions_of(size))
    if (is_even_shape(p)) out.push_back(std::move(p));
  return out;
}

/// The union over even η of LRS(λ/μ, η).
inline std::vector<SkewTableau> enumerate_lrs_even(const Partition& lambda, const Partition& mu, int n) {
  std::vector<SkewTableau> out;
  if (!lambda.contains(mu)) return out;
  for (const auto& eta : even_partitions_of(lambda.size() - mu.size())) {
    auto part = enumerate_lrs(lambda, mu, eta, n);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// N_{λ,μ} = Σ_{η even} |LRS(λ/μ, η)|; zero when μ does not fit in λ.
inline long long sundaram_multiplicity(const Partition& lambda, const Partition& mu, int n) {
  if (!lambda.contains(mu)) return 0;
  long long total = 0;
  for (const auto& eta : even_partitions_of(lambda.size() - mu.size()))
    for_each_skew_ssyt_with_content(lambda, mu, eta, [&](const SkewTableau& l) {
      if (is_ballot(column_word(l)) && is_n_symplectic(l, n)) ++total;
    });
  return total;
}

}  // namespace symbranch
