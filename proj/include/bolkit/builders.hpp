#pragma once

#include "bolkit/loop.hpp"

namespace bolkit {

// Cyclic group of order n, elements 0..n-1 under addition mod n.
Loop cyclic(int n);

// Direct product; element (a, b) is encoded as a * l2.n + b.
Loop direct_product(const Loop& l1, const Loop& l2);

// Dihedral group of order 2k (k >= 1): rotations 0..k-1, reflections k..2k-1.
Loop dihedral(int k);

// Quaternion group of order 8: {1, i, j, k}, then {-1, -i, -j, -k}.
Loop quaternion8();

Loop symmetric3();

// Elementary abelian 2-group of order 2^k (xor on bit vectors).
Loop elementary_abelian2(int k);

}  // namespace bolkit
