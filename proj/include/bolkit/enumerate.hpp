#pragma once

#include <vector>

#include "bolkit/loop.hpp"

namespace bolkit {

struct EnumOptions {
  int order = 0;
  bool nonassociative_only = false;
  bool central_squares_only = false;
  long long node_budget = 100'000'000;
  int jobs = 1;
  bool reverse_candidates = false;  // explore value choices high-to-low
};

struct EnumResult {
  std::vector<Loop> loops;  // canonical forms, sorted by table, named rbol<n>_<i>
  bool complete = false;    // the search space was exhausted within the budget
  long long nodes = 0;      // branch decisions taken
};

// All right Bol loops of the given order, one per isomorphism class.
//
// A loop is searched as its set of right translation columns. Right Bol
// says exactly R_y R_z R_y = R_{(y z) y}, so two finished columns force a
// third; columns are otherwise filled cell by cell. In a right Bol loop
// R_y^k = R_{y^k}, hence every column splits into cycles of one length (the
// element's order), which must divide the loop order. Each class is reached
// by relabeling some element of least order 'len' to 1 with R_1 the standard
// cycle product (0 1 .. len-1)(len .. 2len-1)...; the search runs one branch
// per divisor, pruning columns with any cycle shorter than that branch's
// len. With central_squares_only, every diagonal value y*y is pinned as it
// appears: it must commute pointwise, and its finished column composes with
// every other column on both sides (membership in the middle and right
// nuclei), which together pin the full center condition.
EnumResult enumerate_right_bol(const EnumOptions& opt);

}  // namespace bolkit
