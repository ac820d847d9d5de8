#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "symbranch/error.hpp"
#include "symbranch/partition.hpp"
#include "symbranch/path.hpp"
#include "symbranch/tableau.hpp"

namespace symbranch {

/// Finitely supported map from exponent vectors to integers, i.e. a Laurent
/// polynomial with integer coefficients. Zero coefficients are never stored.
/// Characters are the case where every coefficient is positive.
class LaurentPolynomial {
 public:
  using Exponent = std::vector<int>;
  using Terms = std::map<Exponent, long long>;

  LaurentPolynomial() = default;

  void add(const Exponent& e, long long c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  long long coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  /// Sum of coefficients (the dimension, for a character).
  long long mass() const {
    long long s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  bool is_nonnegative() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
  }

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  LaurentPolynomial& add_scaled(const LaurentPolynomial& other, long long factor) {
    for (const auto& [e, c] : other.terms_) add(e, c * factor);
    return *this;
  }

  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add(e, ca * cb);
      }
    return out;
  }

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  Terms terms_;
};

using LaurentWeightMultiset = LaurentPolynomial;

/// Σ x^{content(T)} over SSYT(λ) with entries in {1..m}.
inline LaurentWeightMultiset schur_character(const Partition& lambda, int m) {
  LaurentWeightMultiset out;
  for_each_ssyt(lambda, Alphabet::unbarred(m), [&](const Tableau& t) {
    std::vector<int> content(static_cast<std::size_t>(m), 0);
    for (const auto& row : t.rows())
      for (Letter l : row) ++content[l.value() - 1];
    out.add(content, 1);
  });
  return out;
}

/// Antisymmetrization Σ_w sgn(w) x^{w(α)} over S_m.
inline LaurentPolynomial alternant(const std::vector<int>& alpha) {
  const std::size_t m = alpha.size();
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPolynomial out;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (perm[i] > perm[j]) ++inversions;
    std::vector<int> e(m);
    for (std::size_t i = 0; i < m; ++i) e[perm[i]] = alpha[i];
    out.add(e, inversions % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// True when s_λ · a_δ = a_{λ+δ} as polynomials in m variables.
inline bool satisfies_bialternant_identity(const Partition& lambda, int m) {
  if (lambda.length() > m) throw ShapeOutOfType("shape has more rows than variables");
  std::vector<int> delta(static_cast<std::size_t>(m)), shifted(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    delta[i] = m - 1 - i;
    shifted[i] = lambda[i] + delta[i];
  }
  return schur_character(lambda, m) * alternant(delta) == alternant(shifted);
}

/// res(s_λ): x_j ↦ x_{2n+1-j}^{-1} for j > n.
inline LaurentWeightMultiset restricted_character(const Partition& lambda, int n) {
  const LaurentWeightMultiset full = schur_character(lambda, 2 * n);
  LaurentWeightMultiset out;
  for (const auto& [e, c] : full.terms()) out.add(restrict_weight(e), c);
  return out;
}

namespace detail {

struct Rational {
  long long num = 0;
  long long den = 1;
  void mul(long long a, long long b) {
    num *= a;
    den *= b;
    const long long g = std::gcd(num, den);
    if (g) {
      num /= g;
      den /= g;
    }
  }
};

/// Positive roots of C_n in ε coordinates: ε_i ± ε_j (i<j) and 2ε_i.
inline std::vector<std::vector<int>> positive_roots_c(int n) {
  std::vector<std::vector<int>> roots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> minus(static_cast<std::size_t>(n), 0), plus(static_cast<std::size_t>(n), 0);
      minus[i] = 1;
      minus[j] = -1;
      plus[i] = 1;
      plus[j] = 1;
      roots.push_back(minus);
      roots.push_back(plus);
    }
  for (int i = 0; i < n; ++i) {
    std::vector<int> twice(static_cast<std::size_t>(n), 0);
    twice[i] = 2;
    roots.push_back(twice);
  }
  return roots;
}

inline long long dot(const std::vector<int>& a, const std::vector<int>& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
  return s;
}

/// Dominant representative under signed permutations.
inline std::vector<int> dominant_rep_c(std::vector<int> v) {
  for (int& x : v) x = std::abs(x);
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

/// ν ≤ μ in the C_n root order: partial sums of μ-ν are >= 0 and the total
/// is even.
inline bool below_in_root_order(const std::vector<int>& nu, const std::vector<int>& mu) {
  long long partial = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    partial += mu[i] - nu[i];
    if (partial < 0) return false;
  }
  return partial % 2 == 0;
}

inline std::vector<std::vector<int>> signed_permutation_orbit(const std::vector<int>& v) {
  std::set<std::vector<int>> orbit;
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  do {
    const std::size_t k = sorted.size();
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<int> w = sorted;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1u << i)) w[i] = -w[i];
      orbit.insert(w);
    }
  } while (std::next_permutation(sorted.begin(), sorted.end()));
  return {orbit.begin(), orbit.end()};
}

}  // namespace detail

/// Weyl dimension of the sl(m) (or gl(m)) module of highest weight λ.
inline long long weyl_dimension_sl(const Partition& lambda, int m) {
  if (lambda.length() > m) return 0;
  detail::Rational r{1, 1};
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) r.mul(lambda[i] - lambda[j] + j - i, j - i);
  if (r.den != 1) throw InternalInconsistency("Weyl dimension is not an integer");
  return r.num;
}

/// Weyl dimension of the sp(2n) module of highest weight μ (ε coordinates).
inline long long weyl_dimension_sp(const Partition& mu, int n) {
  if (mu.length() > n) throw ShapeOutOfType("sp(2n) weight has more than n parts");
  std::vector<int> m(static_cast<std::size_t>(n)), rho(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rho[i] = n - i;
    m[i] = mu[i] + rho[i];
  }
  detail::Rational r{1, 1};
  for (const auto& alpha : detail::positive_roots_c(n)) r.mul(detail::dot(m, alpha), detail::dot(rho, alpha));
  if (r.den != 1) throw InternalInconsistency("Weyl dimension is not an integer");
  return r.num;
}

/// Weight multiplicities of the irreducible sp(2n) module L̃(μ), by
/// Freudenthal's recursion over the dominant weights below μ.
inline LaurentWeightMultiset sp_weight_multiplicities(const Partition& mu, int n) {
  if (mu.length() > n) throw ShapeOutOfType("sp(2n) weight has more than n parts");
  std::vector<int> top(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) top[i] = mu[i];

  // Dominant weights ν ≤ μ, visited from the top down: (ν, ρ) strictly
  // decreases along every positive root step.
  std::vector<std::vector<int>> dominant;
  for (const auto& p : partitions_up_to(mu.size(), n)) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[i] = p[i];
    if (detail::below_in_root_order(v, top)) dominant.push_back(v);
  }
  std::vector<int> rho(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rho[i] = n - i;
  std::sort(dominant.begin(), dominant.end(), [&](const auto& a, const auto& b) {
    const long long ha = detail::dot(a, rho), hb = detail::dot(b, rho);
    return ha != hb ? ha > hb : a > b;
  });

  const auto roots = detail::positive_roots_c(n);
  auto shifted_norm = [&](const std::vector<int>& v) {
    std::vector<int> s(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) s[i] = v[i] + rho[i];
    return detail::dot(s, s);
  };
  const long long top_norm = shifted_norm(top);

  std::map<std::vector<int>, long long> mult;
  auto lookup = [&](const std::vector<int>& v) -> long long {
    auto rep = detail::dominant_rep_c(v);
    if (!detail::below_in_root_order(rep, top)) return 0;
    auto it = mult.find(rep);
    return it == mult.end() ? 0 : it->second;
  };

  for (const auto& nu : dominant) {
    if (nu == top) {
      mult[nu] = 1;
      continue;
    }
    long long numer = 0;
    for (const auto& alpha : roots) {
      std::vector<int> w = nu;
      for (int k = 1;; ++k) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] += alpha[i];
        const long long m = lookup(w);
        if (m == 0 && !detail::below_in_root_order(detail::dominant_rep_c(w), top)) break;
        numer += 2 * m * detail::dot(w, alpha);
      }
    }
    const long long denom = top_norm - shifted_norm(nu);
    if (denom <= 0 || numer % denom != 0) throw InternalInconsistency("Freudenthal recursion produced a non-integer");
    mult[nu] = numer / denom;
  }

  LaurentWeightMultiset out;
  for (const auto& [nu, m] : mult) {
    if (m == 0) continue;
    for (const auto& w : detail::signed_permutation_orbit(nu)) out.add(w, m);
  }
  return out;
}

}  // namespace symbranch
