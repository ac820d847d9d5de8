#pragma once

#include <compare>
#include <cstdlib>
#include <string>
#include <vector>

#include "symbranch/error.hpp"

namespace symbranch {

/// A letter of the barred alphabet 1 < 2 < ... < n < n̄ < ... < 1̄, stored as
/// a nonzero integer where -k encodes k̄. Unbarred alphabets {1,...,m} use
/// only positive values; the order on those is the usual one.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr explicit Letter(int value) : value_(value) {}

  static constexpr Letter unbarred(int i) { return Letter(i); }
  static constexpr Letter barred(int i) { return Letter(-i); }

  constexpr int value() const { return value_; }
  constexpr bool is_barred() const { return value_ < 0; }
  /// k for both k and k̄.
  constexpr int index() const { return value_ < 0 ? -value_ : value_; }

  /// Position in the unbarred alphabet {1,...,2n}, with k̄ placed at 2n+1-k.
  constexpr int to_unbarred(int n) const { return value_ < 0 ? 2 * n + 1 + value_ : value_; }
  static constexpr Letter from_unbarred(int x, int n) { return x <= n ? Letter(x) : Letter(x - 2 * n - 1); }

  std::string to_string() const {
    return value_ < 0 ? std::to_string(-value_) + "̄" : std::to_string(value_);
  }

  friend constexpr bool operator==(Letter a, Letter b) { return a.value_ == b.value_; }
  friend constexpr std::strong_ordering operator<=>(Letter a, Letter b) {
    // Positives precede negatives; within a sign class the integer order
    // already matches (-3 < -2 < -1 is 3̄ < 2̄ < 1̄).
    const bool ab = a.value_ < 0;
    const bool bb = b.value_ < 0;
    if (ab != bb) return ab ? std::strong_ordering::greater : std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }

 private:
  int value_ = 0;
};

using Word = std::vector<Letter>;

/// A finite totally ordered alphabet.
class Alphabet {
 public:
  /// {1 < ... < m}
  static Alphabet unbarred(int m) {
    Alphabet a;
    for (int i = 1; i <= m; ++i) a.letters_.emplace_back(i);
    return a;
  }

  /// {1 < ... < n < n̄ < ... < 1̄}
  static Alphabet barred(int n) {
    Alphabet a;
    for (int i = 1; i <= n; ++i) a.letters_.emplace_back(i);
    for (int i = n; i >= 1; --i) a.letters_.push_back(Letter::barred(i));
    return a;
  }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }

 private:
  std::vector<Letter> letters_;
};

inline Word make_word(std::initializer_list<int> values) {
  Word w;
  for (int v : values) w.emplace_back(v);
  return w;
}

inline std::string word_to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    out += w[i].to_string();
  }
  return out;
}

}  // namespace symbranch
