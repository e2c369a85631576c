#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bolkit/loop.hpp"
#include "bolkit/perm.hpp"

namespace bolkit {

// The 3-net of a loop of order n: points are pairs (x, y), encoded x * n + y.
// Lines come in three pencils of n lines each:
//   horizontal  H_a = { (x, a) : x }
//   vertical    V_b = { (b, y) : y }
//   transversal T_c = { (x, y) : x * y = c }
enum class Pencil { horizontal, vertical, transversal };

int point_index(const Loop& l, int x, int y);

// Points of a line, as sorted point indices.
std::vector<int> line_points(const Loop& l, Pencil p, int label);

// Does the point map send every line of the net onto a line (of any pencil)?
bool is_collineation(const Loop& l, const Permutation& point_map);

// Image of the point (a, b) under the reflection across T_d: the point
// (a', b') with a' = (a*b)/d and a'*b' = a*d. An involution for every loop;
// a collineation for every d exactly when the loop is right Bol.
std::pair<int, int> reflection_image(const Loop& l, int d, int a, int b);

// The reflection across T_d as a permutation of all n*n points.
Permutation bol_reflection(const Loop& l, int d);

// Transversal and vertical lines carry a joint index: T_c -> c, V_a -> n + a.
// Every reflection permutes these 2n lines: V_a -> T_{a*d}, T_c -> V_{c/d}.
Permutation transversal_vertical_action(const Loop& l, int d);

// Induced permutation of the 2n transversal+vertical lines under an arbitrary
// point map; throws NotALineMap when some image is not such a line.
Permutation line_action(const Loop& l, const Permutation& point_map);

// The 2n maps A_d and A_e A_d (e the unit), where A_d is the line action of
// the reflection across T_d.
std::vector<Permutation> sigma_line_maps(const Loop& l);

// Group generated by all the A_d.
PermGroup gamma_group(const Loop& l);

// A loop folder (G, H, K): a permutation group, a subgroup, and a section of
// right cosets Hg containing the identity.
struct LoopFolder {
  PermGroup group;
  std::vector<Permutation> subgroup;
  std::vector<Permutation> section;
};

struct FolderCheck {
  bool ok = true;        // no violation found
  bool complete = true;  // all conjugacy tests ran within the budget
  std::string detail;    // first violation, when ok is false
};

// Verifies the folder axioms: H a subgroup of G, the section inside G with
// the identity, |K| * |H| = |G|, and k1 k2^-1 never conjugate into H for
// distinct section members (so cosets of every conjugate of H are hit once).
FolderCheck check_folder(const LoopFolder& f, long long budget = 100000);

// The folder of a loop: its right multiplication group, the stabilizer of
// the unit, and the right translations.
LoopFolder envelope(const Loop& l);

// Loop on the right cosets Hg, multiplied through the section
// representatives; throws NotAFolder when the section misses or doubles a
// coset or the product table is not a loop. Cosets are ordered by their
// lexicographically least member.
Loop loop_of_folder(const LoopFolder& f);

// Section closed under inversion and under (k1, k2) -> k1 k2 k1.
bool is_bol_folder(const LoopFolder& f);

// Loop on the sorted orbit of e under the group the set generates, with
// x * y = x^s for the unique s in the set sending e to y. Throws
// NotSharplyTransitive when the set is not sharply transitive on the orbit,
// NotAFolder when the member fixing e moves some orbit point.
Loop lambda_loop(const std::vector<Permutation>& s, int e);

}  // namespace bolkit
