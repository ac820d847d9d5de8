#pragma once

// Worked examples for n = 3, λ = (4,3,2,1), μ = (3,2,1). Barred letters are
// negative.

#include <vector>

#include "symbranch/burge.hpp"
#include "symbranch/tableau.hpp"

namespace fixtures {

using IntRows = std::vector<std::vector<int>>;

struct Worked {
  IntRows tableau;
  std::vector<std::vector<int>> shapes;  // after each step
  std::vector<IntRows> partial;          // partial Q after each step
  std::vector<int> top, bottom;
  IntRows even;
  std::vector<int> phi;  // one entry per skew row
};

inline const std::vector<Worked>& worked() {
  static const std::vector<Worked> w{
      {{{1, 1, 1, 1}, {2, 2, 2}, {3, -1}, {-2}},
       {{1}, {2}, {2, 1}, {3, 1}, {3, 2}, {2, 2}, {3, 2}, {3, 3}, {3, 3, 1}, {3, 2, 1}},
       {{{1}},
        {{1, 2}},
        {{1, 2}, {3}},
        {{1, 2, 4}, {3}},
        {{1, 2, 4}, {3, 5}},
        {{2, 4}, {3, 5}},
        {{2, 4, 7}, {3, 5}},
        {{2, 4, 7}, {3, 5, 8}},
        {{2, 4, 7}, {3, 5, 8}, {9}},
        {{2, 4, 7}, {5, 8}, {9}}},
       {6, 10},
       {1, 3},
       {{1, 3}, {6, 10}},
       {1, 1, 2, 2}},
      {{{1, 1, 1, 1}, {2, 2, -1}, {3, 3}, {-3}},
       {{1}, {2}, {1}, {2}, {2, 1}, {2, 1, 1}, {3, 1, 1}, {3, 2, 1}, {3, 2, 2}, {3, 2, 1}},
       {{{1}},
        {{1, 2}},
        {{2}},
        {{2, 4}},
        {{2, 4}, {5}},
        {{2, 4}, {5}, {6}},
        {{2, 4, 7}, {5}, {6}},
        {{2, 4, 7}, {5, 8}, {6}},
        {{2, 4, 7}, {5, 8}, {6, 9}},
        {{2, 4, 7}, {5, 8}, {9}}},
       {3, 10},
       {1, 6},
       {{1, 6}, {3, 10}},
       {1, 2, 1, 2}},
      {{{1, 1, 1, 1}, {2, 2, 2}, {3, -2}, {-1}},
       {{1}, {2}, {2, 1}, {3, 1}, {3, 2}, {3, 1}, {4, 1}, {4, 2}, {4, 2, 1}, {3, 2, 1}},
       {{{1}},
        {{1, 2}},
        {{1, 2}, {3}},
        {{1, 2, 4}, {3}},
        {{1, 2, 4}, {3, 5}},
        {{1, 2, 4}, {5}},
        {{1, 2, 4, 7}, {5}},
        {{1, 2, 4, 7}, {5, 8}},
        {{1, 2, 4, 7}, {5, 8}, {9}},
        {{2, 4, 7}, {5, 8}, {9}}},
       {6, 10},
       {3, 1},
       {{1}, {3}, {6}, {10}},
       {1, 2, 3, 4}},
  };
  return w;
}

inline const IntRows kFinalQ{{1, 2, 4, 7}, {3, 5, 8}, {6, 9}, {10}};

}  // namespace fixtures
