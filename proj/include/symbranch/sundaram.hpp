#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <vector>

#include "symbranch/burge.hpp"
#include "symbranch/error.hpp"
#include "symbranch/partition.hpp"
#include "symbranch/path.hpp"
#include "symbranch/tableau.hpp"

namespace symbranch {

struct UpDownMove {
  enum class Kind { add, remove };
  Kind kind = Kind::add;
  int row = 0;  // 0-based
  friend bool operator==(const UpDownMove&, const UpDownMove&) = default;
};

/// Shapes after each letter of the column word, with the move that produced
/// each one.
struct UpDownSequence {
  std::vector<Partition> shapes;
  std::vector<UpDownMove> moves;
};

/// Adds a box in row i for each letter i and removes one for each ī.
/// Throws InvalidArgument at the first step that leaves the partitions.
inline UpDownSequence shape_sequence(const Tableau& t, int n) {
  UpDownSequence seq;
  WeightVector current(static_cast<std::size_t>(n), 0);
  int step = 0;
  for (Letter l : column_word(t)) {
    ++step;
    if (l.index() < 1 || l.index() > n) throw InvalidArgument("letter outside the barred alphabet");
    const int row = l.index() - 1;
    current[row] += l.is_barred() ? -1 : 1;
    if (!is_dominant_weight(current))
      throw InvalidArgument("step " + std::to_string(step) + " does not produce a partition");
    seq.moves.push_back({l.is_barred() ? UpDownMove::Kind::remove : UpDownMove::Kind::add, row});
    seq.shapes.push_back(weight_as_partition(current));
  }
  return seq;
}

/// A removal at step `step` bumped `bumped` out of row `row` of the partial
/// Q-symbol; `cell` is where the barred letter sits in T.
struct Removal {
  int step = 0;
  int bumped = 0;
  int row = 0;
  Cell cell;
};

/// Partial Q-symbol, the saved two-line array, its even tableau and the
/// final Q-symbol of a domres element.
struct QSymbolBundle {
  StandardTableau partial_q;
  SpecialTwoLineArray array;
  StandardTableau even;
  StandardTableau final_q;
  std::vector<StandardTableau> partial_steps;  // partial Q-symbol after each step
  std::vector<Removal> removals;               // in step order
};

inline QSymbolBundle q_symbols(const Tableau& t, int n) {
  const auto cells = column_reading_cells(t.shape());
  std::vector<std::vector<int>> rows;
  QSymbolBundle out;
  std::vector<int> top, bottom;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const int step = static_cast<int>(k) + 1;
    const Letter l = t.at(cells[k]);
    if (l.index() < 1 || l.index() > n) throw InvalidArgument("letter outside the barred alphabet");
    const auto row = static_cast<std::size_t>(l.index() - 1);
    if (!l.is_barred()) {
      if (rows.size() <= row) rows.resize(row + 1);
      if (row > 0 && rows[row].size() >= rows[row - 1].size())
        throw InvalidArgument("step " + std::to_string(step) + " does not produce a partition");
      rows[row].push_back(step);
    } else {
      if (rows.size() <= row || rows[row].empty() || (row + 1 < rows.size() && rows[row + 1].size() == rows[row].size()))
        throw InvalidArgument("step " + std::to_string(step) + " does not produce a partition");
      // Delete the left-most entry of the row and shift the rest left.
      const int bumped = rows[row].front();
      rows[row].erase(rows[row].begin());
      while (!rows.empty() && rows.back().empty()) rows.pop_back();
      top.push_back(step);
      bottom.push_back(bumped);
      out.removals.push_back({step, bumped, static_cast<int>(row), cells[k]});
    }
    out.partial_steps.emplace_back(rows);
  }
  out.partial_q = StandardTableau(rows);
  out.array = SpecialTwoLineArray(std::move(top), std::move(bottom));
  const auto order = burge_insertion_order(out.array);
  out.even = column_insert_all(StandardTableau{}, order);
  out.final_q = column_insert_all(out.partial_q, order);
  return out;
}

/// Writes, for each entry j of E_T, its E_T-row number into the row of Q_T
/// that holds j; each skew row is then sorted.
inline SkewTableau phi_from_bundle(const QSymbolBundle& b, const Partition& lambda) {
  const Partition mu = b.partial_q.shape();
  std::vector<SkewTableau::Row> rows(static_cast<std::size_t>(lambda.length()));
  for (std::size_t er = 0; er < b.even.rows().size(); ++er)
    for (int j : b.even.rows()[er]) {
      const int qr = row_of(b.final_q, j);
      if (qr < 0 || qr >= lambda.length()) throw InternalInconsistency("entry of E_T missing from Q_T");
      rows[qr].emplace_back(static_cast<int>(er) + 1);
    }
  for (auto& r : rows) std::sort(r.begin(), r.end());
  for (int i = 0; i < lambda.length(); ++i)
    if (static_cast<int>(rows[i].size()) != lambda[i] - mu[i])
      throw InternalInconsistency("φ filling does not match the skew shape");
  return SkewTableau(lambda, mu, std::move(rows));
}

inline SkewTableau phi(const Tableau& t, int n) { return phi_from_bundle(q_symbols(t, n), t.shape()); }

/// Numbers the boxes of λ in the order the column word of the barless
/// tableau adds them; equivalently Q_T of the tableau with row i filled by i.
inline StandardTableau canonical_q(const Partition& lambda) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda.length()));
  int step = 0;
  for (Cell c : column_reading_cells(lambda)) rows[c.row].push_back(++step);
  return StandardTableau(std::move(rows));
}

/// The finite map φ on domres(λ, μ) together with its inverse.
class PhiInverseIndex {
 public:
  PhiInverseIndex(const Partition& lambda, const Partition& mu, int n) : lambda_(lambda), mu_(mu), n_(n) {
    for (const Tableau& t : enumerate_domres(lambda, n, mu)) {
      SkewTableau image = phi(t, n);
      if (!inverse_.emplace(image, t).second) injective_ = false;
      images_.push_back(std::move(image));
    }
  }

  /// The unique T with φ(T) = L. Throws NotFound when L is not an image.
  const Tableau& invert(const SkewTableau& l) const {
    auto it = inverse_.find(l);
    if (it == inverse_.end()) throw NotFound("skew tableau is not in the image of φ");
    return it->second;
  }

  bool injective() const { return injective_; }
  std::size_t size() const { return inverse_.size(); }
  const std::vector<SkewTableau>& images() const { return images_; }

 private:
  Partition lambda_;
  Partition mu_;
  int n_;
  bool injective_ = true;
  std::vector<SkewTableau> images_;
  std::map<SkewTableau, Tableau> inverse_;
};

namespace detail {

inline std::shared_ptr<const PhiInverseIndex> phi_inverse_index(const Partition& lambda, const Partition& mu, int n) {
  using Key = std::tuple<Partition, Partition, int>;
  static std::shared_mutex mutex;
  static std::map<Key, std::shared_ptr<const PhiInverseIndex>> cache;
  const Key key{lambda, mu, n};
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const PhiInverseIndex>(lambda, mu, n);
  std::unique_lock lock(mutex);
  return cache.emplace(key, std::move(built)).first->second;
}

}  // namespace detail

/// Inverse of φ through a memoized per-(λ, μ, n) index.
inline Tableau phi_inverse(const SkewTableau& l, int n) {
  return detail::phi_inverse_index(l.outer(), l.inner(), n)->invert(l);
}

}  // namespace symbranch
