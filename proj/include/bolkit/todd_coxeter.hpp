#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace bolkit {

// Finitely presented group. A relator or subgroup generator is a word over
// signed letters: +i stands for generator i-1, -i for its inverse.
struct GroupPresentation {
  int generator_count = 0;
  std::vector<std::vector<int>> relators;
};

// Renders generators as g0, g1, ... and inverses with a trailing apostrophe.
std::string presentation_to_string(const GroupPresentation& p);

struct CosetTable {
  enum class Status { complete, budget_exceeded };
  Status status = Status::complete;
  int cosets = 0;            // live cosets; the subgroup index when complete
  size_t total_defined = 0;  // all cosets ever defined, dead ones included
  // rows[c][i] = live coset c moved by generator i (fully defined only when
  // status is complete)
  std::vector<std::vector<int>> rows;
};

// Coset enumeration over the subgroup the given words generate (the trivial
// subgroup by default). Relator scans fill gaps by defining new cosets;
// coincidences collapse immediately. Gives up once max_cosets have been
// defined in total.
CosetTable todd_coxeter(const GroupPresentation& p,
                        const std::vector<std::vector<int>>& subgroup_gens = {},
                        size_t max_cosets = 1'000'000);

}  // namespace bolkit
