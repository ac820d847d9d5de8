#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "symbranch/error.hpp"

namespace symbranch {

/// A weakly decreasing sequence of nonnegative integers with trailing zeros
/// dropped. Doubles as a Young diagram and as a dominant weight.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0)
        throw InvalidArgument("partition has a negative part");
      if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
        throw InvalidArgument("partition parts must be weakly decreasing");
    }
  }

  const std::vector<int>& parts() const { return parts_; }

  /// Number of nonzero parts (rows of the diagram).
  int length() const { return static_cast<int>(parts_.size()); }

  /// Number of boxes.
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  bool empty() const { return parts_.empty(); }

  /// Row length, 0-based; rows past the end have length 0.
  int operator[](std::size_t row) const {
    return row < parts_.size() ? parts_[row] : 0;
  }

  /// Column lengths, left to right.
  Partition conjugate() const {
    std::vector<int> cols(parts_.empty() ? 0 : parts_.front(), 0);
    for (int len : parts_)
      for (int c = 0; c < len; ++c) ++cols[c];
    return Partition(std::move(cols));
  }

  /// True when `inner` fits inside this diagram.
  bool contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
      if (inner.parts_[i] > parts_[i]) return false;
    return true;
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(parts_[i]);
    }
    return out + ")";
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Coefficients of a dominant weight on the fundamental weights.
struct FundWeightCoeffs {
  std::vector<int> coeffs;

  FundWeightCoeffs() = default;
  explicit FundWeightCoeffs(std::vector<int> c) : coeffs(std::move(c)) {
    for (int a : coeffs)
      if (a < 0) throw InvalidArgument("fundamental weight coefficients must be >= 0");
  }

  friend bool operator==(const FundWeightCoeffs&, const FundWeightCoeffs&) = default;
};

/// The partition with exactly a_k columns of length k.
inline Partition weight_to_partition(const FundWeightCoeffs& a) {
  std::vector<int> parts(a.coeffs.size(), 0);
  int running = 0;
  for (std::size_t k = a.coeffs.size(); k-- > 0;) {
    running += a.coeffs[k];
    parts[k] = running;
  }
  return Partition(std::move(parts));
}

/// Inverse of weight_to_partition for a Lie type with `rank` fundamental
/// weights (2n-1 for sl(2n), n for sp(2n)).
inline FundWeightCoeffs partition_to_weight(const Partition& p, int rank) {
  if (p.length() > rank)
    throw ShapeOutOfType("partition " + p.to_string() + " has more than " +
                         std::to_string(rank) + " rows");
  std::vector<int> coeffs(static_cast<std::size_t>(rank), 0);
  for (int k = 0; k < rank; ++k) coeffs[k] = p[k] - p[k + 1];
  return FundWeightCoeffs(std::move(coeffs));
}

/// All columns have length at most n.
inline bool is_stable(const Partition& p, int n) { return p.length() <= n; }

/// Largest subdiagram whose columns have length at most n: the first n rows.
inline Partition stable_part(const Partition& p, int n) {
  const auto& parts = p.parts();
  const auto keep = std::min<std::size_t>(parts.size(), static_cast<std::size_t>(std::max(n, 0)));
  return Partition(std::vector<int>(parts.begin(), parts.begin() + keep));
}

/// Partitions of `size` with at most `max_parts` parts, each at most
/// `max_part`, in reverse lexicographic order (largest first part first).
inline std::vector<Partition> partitions_of(int size, int max_parts = std::numeric_limits<int>::max(),
                                            int max_part = std::numeric_limits<int>::max()) {
  std::vector<Partition> out;
  if (size < 0) return out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (static_cast<int>(current.size()) == max_parts) return;
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(size, max_part);
  return out;
}

/// All partitions with at most `max_size` boxes and `max_parts` rows, ordered
/// by size and then as in partitions_of.
inline std::vector<Partition> partitions_up_to(int max_size, int max_parts) {
  std::vector<Partition> out;
  for (int s = 0; s <= max_size; ++s) {
    auto layer = partitions_of(s, max_parts);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

/// Parses a comma separated list of integers ("" is the empty list).
inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    std::string token = text.substr(pos, next - pos);
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    if (token.empty()) throw InvalidArgument("empty entry in '" + text + "'");
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("malformed integer list '" + text + "'");
    }
    if (used != token.size()) throw InvalidArgument("malformed integer list '" + text + "'");
    values.push_back(value);
    pos = next + 1;
  }
  return values;
}

/// Parses "4,3,2,1" (empty string is the empty partition).
inline Partition parse_partition(const std::string& text) { return Partition(parse_int_list(text)); }

}  // namespace symbranch
