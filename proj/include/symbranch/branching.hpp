#pragma once

#include <map>
#include <string>

#include "symbranch/character.hpp"
#include "symbranch/error.hpp"
#include "symbranch/lr.hpp"
#include "symbranch/partition.hpp"
#include "symbranch/path.hpp"

namespace symbranch {

enum class Method { paths, sundaram, character };

inline std::string to_string(Method m) {
  switch (m) {
    case Method::paths: return "paths";
    case Method::sundaram: return "sundaram";
    case Method::character: return "character";
  }
  return "unknown";
}

/// Multiplicities of the sp(2n) irreducibles in res L(λ). Only nonzero
/// entries are stored.
struct BranchingTable {
  Method method = Method::paths;
  std::map<Partition, long long> multiplicities;

  long long at(const Partition& mu) const {
    auto it = multiplicities.find(mu);
    return it == multiplicities.end() ? 0 : it->second;
  }

  /// Σ_μ N_{λ,μ} dim L̃(μ).
  long long dimension(int n) const {
    long long d = 0;
    for (const auto& [mu, m] : multiplicities) d += m * weyl_dimension_sp(mu, n);
    return d;
  }

  bool same_multiplicities(const BranchingTable& other) const { return multiplicities == other.multiplicities; }
};

/// Counts domres(λ, μ) for every endpoint μ.
inline BranchingTable branch_by_paths(const Partition& lambda, int n) {
  BranchingTable table{Method::paths, {}};
  for_each_domres(lambda, n, [&](const Tableau& t) {
    ++table.multiplicities[weight_as_partition(word_weight(column_word(t), n))];
  });
  return table;
}

/// N_{λ,μ} from n-symplectic LR tableaux, over every stable μ ⊆ λ.
inline BranchingTable branch_by_sundaram(const Partition& lambda, int n) {
  if (lambda.length() > 2 * n - 1)
    throw ShapeOutOfType("shape " + lambda.to_string() + " has more than 2n-1 rows");
  BranchingTable table{Method::sundaram, {}};
  for (const auto& mu : partitions_up_to(lambda.size(), n)) {
    if (!lambda.contains(mu)) continue;
    if (const long long m = sundaram_multiplicity(lambda, mu, n); m > 0) table.multiplicities[mu] = m;
  }
  return table;
}

/// Peels irreducible sp(2n) characters off res(s_λ), always taking the
/// lexicographically largest remaining weight. That weight is dominant and
/// is a highest weight of what remains.
inline BranchingTable branch_by_character(const Partition& lambda, int n) {
  if (lambda.length() > 2 * n - 1)
    throw ShapeOutOfType("shape " + lambda.to_string() + " has more than 2n-1 rows");
  BranchingTable table{Method::character, {}};
  LaurentWeightMultiset rest = restricted_character(lambda, n);
  while (!rest.empty()) {
    const auto& [top, m] = *rest.terms().rbegin();
    if (m < 0) throw InternalInconsistency("negative multiplicity left after subtraction");
    if (!is_dominant_weight(top)) throw InternalInconsistency("largest remaining weight is not dominant");
    const Partition mu = weight_as_partition(top);
    const long long count = m;
    table.multiplicities[mu] = count;
    rest.add_scaled(sp_weight_multiplicities(mu, n), -count);
    if (!rest.is_nonnegative()) throw InternalInconsistency("negative multiplicity left after subtraction");
  }
  return table;
}

inline BranchingTable branch(const Partition& lambda, int n, Method method) {
  switch (method) {
    case Method::paths: return branch_by_paths(lambda, n);
    case Method::sundaram: return branch_by_sundaram(lambda, n);
    case Method::character: return branch_by_character(lambda, n);
  }
  throw InvalidArgument("unknown branching method");
}

}  // namespace symbranch
