#pragma once

#include <optional>

#include "bolkit/loop.hpp"

namespace bolkit {

// New loop with element x renamed p(x): table'[p(x)][p(y)] = p(x*y).
Loop relabel(const Loop& l, const Permutation& p);

// Isomorphism l1 -> l2 if one exists, verified against the full tables.
std::optional<Permutation> are_isomorphic(const Loop& l1, const Loop& l2);

// Representative of the isomorphism class: the unit is relabeled to 0 and the
// flattened table is lexicographically minimal over all such relabelings.
// Idempotent; two loops are isomorphic iff their canonical tables are equal.
Loop canonical_form(const Loop& l);

}  // namespace bolkit
