#pragma once

#include <vector>

#include "symbranch/burge.hpp"
#include "symbranch/tableau.hpp"

namespace testing_helpers {

inline std::vector<std::vector<int>> as_ints(const symbranch::Tableau& t) {
  std::vector<std::vector<int>> out;
  for (const auto& row : t.rows()) {
    out.emplace_back();
    for (symbranch::Letter l : row) out.back().push_back(l.value());
  }
  return out;
}

inline std::vector<int> as_ints(const symbranch::Word& w) {
  std::vector<int> out;
  for (symbranch::Letter l : w) out.push_back(l.value());
  return out;
}

inline std::vector<std::vector<int>> skew_rows(const symbranch::SkewTableau& l) {
  std::vector<std::vector<int>> out;
  for (const auto& row : l.rows()) {
    out.emplace_back();
    for (symbranch::Letter x : row) out.back().push_back(x.value());
  }
  return out;
}

inline symbranch::SkewTableau make_skew(const symbranch::Partition& outer, const symbranch::Partition& inner,
                                        const std::vector<std::vector<int>>& rows) {
  std::vector<symbranch::SkewTableau::Row> out;
  for (const auto& r : rows) {
    out.emplace_back();
    for (int v : r) out.back().emplace_back(v);
  }
  return symbranch::SkewTableau(outer, inner, std::move(out));
}

}  // namespace testing_helpers
