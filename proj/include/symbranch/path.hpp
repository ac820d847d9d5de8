#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "symbranch/letter.hpp"
#include "symbranch/partition.hpp"
#include "symbranch/tableau.hpp"

namespace symbranch {

/// An integer weight vector: coefficients on ε_1..ε_2n (sl side) or on the
/// restricted ε̃_1..ε̃_n (sp side).
using WeightVector = std::vector<int>;

/// ε of a letter in ℤ^{2n}, with k̄ identified with 2n+1-k.
inline WeightVector full_letter_weight(Letter l, int n) {
  WeightVector v(static_cast<std::size_t>(2 * n), 0);
  v[l.to_unbarred(n) - 1] = 1;
  return v;
}

/// Restriction to the σ-fixed Cartan: coordinate i becomes v_i - v_{2n+1-i}.
inline WeightVector restrict_weight(const WeightVector& v) {
  if (v.size() % 2 != 0) throw InvalidArgument("unrestricted weight must have even length");
  const std::size_t n = v.size() / 2;
  WeightVector out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = v[i] - v[2 * n - 1 - i];
  return out;
}

/// Sum of ε_{w_k}, with ε_ī = -ε_i, in restricted coordinates.
inline WeightVector word_weight(const Word& w, int n) {
  WeightVector out(static_cast<std::size_t>(n), 0);
  for (Letter l : w) {
    if (l.index() < 1 || l.index() > n) throw InvalidArgument("letter outside the barred alphabet");
    out[l.index() - 1] += l.is_barred() ? -1 : 1;
  }
  return out;
}

/// Type C dominant chamber: p_1 >= p_2 >= ... >= p_n >= 0.
inline bool is_dominant_weight(const WeightVector& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] < p[i + 1]) return false;
  return p.empty() || p.back() >= 0;
}

inline Partition weight_as_partition(const WeightVector& p) {
  return Partition(std::vector<int>(p.begin(), p.end()));
}

/// A Littelmann path of a word, kept as the lattice points it passes
/// through after each letter.
struct PrefixPath {
  Word word;
  std::vector<WeightVector> full_prefix;  // in ℤ^{2n}
  std::vector<WeightVector> prefix;       // restricted, in ℤ^n

  /// Restricted endpoint; the origin for the empty word.
  WeightVector endpoint() const {
    if (prefix.empty()) return WeightVector(full_prefix.empty() ? 0 : full_prefix.front().size() / 2, 0);
    return prefix.back();
  }
};

inline PrefixPath path_of(const Word& w, int n) {
  PrefixPath path;
  path.word = w;
  WeightVector full(static_cast<std::size_t>(2 * n), 0);
  for (Letter l : w) {
    ++full[l.to_unbarred(n) - 1];
    path.full_prefix.push_back(full);
    path.prefix.push_back(restrict_weight(full));
  }
  return path;
}

/// Every ī is preceded by an unmatched i: all prefixes have #i >= #ī.
inline bool has_cancellation(const Word& w) {
  std::map<int, int> balance;
  for (Letter l : w) {
    int& b = balance[l.index()];
    b += l.is_barred() ? -1 : 1;
    if (b < 0) return false;
  }
  return true;
}

inline bool has_cancellation(const Tableau& t) { return has_cancellation(column_word(t)); }

/// All restricted prefix weights are dominant.
inline bool is_dominant_word(const Word& w, int n) {
  WeightVector p(static_cast<std::size_t>(n), 0);
  for (Letter l : w) {
    const int i = l.index() - 1;
    p[i] += l.is_barred() ? -1 : 1;
    // Only coordinate i moved, so only its two neighbouring comparisons can fail.
    if (i > 0 && p[i - 1] < p[i]) return false;
    if (i + 1 < n && p[i] < p[i + 1]) return false;
    if (i == n - 1 && p[i] < 0) return false;
  }
  return true;
}

/// Dominance tested through the orthogonal projection onto the
/// anti-invariant subspace of σ: pr(v) = (v - σv)/2. Values are kept doubled
/// so the test stays exact; the chamber is convex, so checking every break
/// point checks every segment.
inline bool projection_dominance(const PrefixPath& path, int n) {
  auto in_chamber = [n](const WeightVector& v) {
    WeightVector doubled(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i) doubled[i] = v[i] - v[2 * n - 1 - i];
    for (int i = 0; i < n; ++i)
      if (doubled[i] != -doubled[2 * n - 1 - i]) throw InternalInconsistency("projection is not σ-anti-invariant");
    return is_dominant_weight(WeightVector(doubled.begin(), doubled.begin() + n));
  };
  for (const auto& v : path.full_prefix)
    if (!in_chamber(v)) return false;
  return true;
}

/// Calls visit(const Tableau&) on every tableau of shape λ over the barred
/// alphabet with both the cancellation and dominance properties.
template <class Visitor>
void for_each_domres(const Partition& lambda, int n, Visitor&& visit) {
  if (lambda.length() > 2 * n - 1)
    throw ShapeOutOfType("shape " + lambda.to_string() + " has more than 2n-1 rows");
  for_each_ssyt(lambda, Alphabet::barred(n), [&](const Tableau& t) {
    const Word w = column_word(t);
    if (is_dominant_word(w, n) && has_cancellation(w)) visit(t);
  });
}

/// domres(λ), optionally restricted to endpoint μ.
inline std::vector<Tableau> enumerate_domres(const Partition& lambda, int n,
                                             const std::optional<Partition>& mu = std::nullopt) {
  std::vector<Tableau> out;
  for_each_domres(lambda, n, [&](const Tableau& t) {
    if (!mu || weight_as_partition(word_weight(column_word(t), n)) == *mu) out.push_back(t);
  });
  return out;
}

/// domres(λ) grouped by endpoint.
inline std::map<Partition, std::vector<Tableau>> domres_by_endpoint(const Partition& lambda, int n) {
  std::map<Partition, std::vector<Tableau>> out;
  for_each_domres(lambda, n, [&](const Tableau& t) {
    out[weight_as_partition(word_weight(column_word(t), n))].push_back(t);
  });
  return out;
}

/// Row j (1-based) holds only the letter j and barred letters k̄ with k < j.
inline bool has_triangular_support(const Tableau& t) {
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    const int j = static_cast<int>(r) + 1;
    for (Letter l : t.rows()[r]) {
      if (!l.is_barred() && l.value() != j) return false;
      if (l.is_barred() && l.index() >= j) return false;
    }
  }
  return true;
}

}  // namespace symbranch
