#pragma once

#include <string>
#include <vector>

#include "bolkit/extension.hpp"
#include "bolkit/loop.hpp"
#include "bolkit/perm.hpp"
#include "bolkit/todd_coxeter.hpp"

namespace bolkit {

// Binary system on 0..n-1 written x + y = at(x, y); a quandle when it is
// idempotent, every right translation x -> x + b is a bijection, and right
// self-distributivity (x+y)+z = (x+z)+(y+z) holds.
struct Quandle {
  int n = 0;
  std::vector<int> tab;  // row-major, tab[x * n + y] = x + y
  std::string name;

  int at(int x, int y) const { return tab[x * n + y]; }
};

// Shape and range validation only; axioms are separate predicates.
Quandle quandle_from_table(const std::vector<std::vector<int>>& rows, std::string name = {});

// The core of a loop with two-sided inverses: x + y = (y * x^-1) * y.
Quandle core(const Loop& l);

bool is_quandle(const Quandle& q);
bool is_quasigroup_quandle(const Quandle& q);  // rows bijective too
bool is_involutory(const Quandle& q);          // (x + y) + y = x

// Group generated by the right translations x -> x + b.
PermGroup quandle_rmlt(const Quandle& q);

int orbit_count(const Quandle& q);
bool is_connected(const Quandle& q);

// How the core of a doubled loop decomposes over the two halves T and V:
// each half is closed and carries a copy of the base core, and the mixed
// products only twist the left operand inside its own half.
struct CoreDecomposition {
  bool t_closed = false;
  bool v_closed = false;
  bool t_equals_base_core = false;  // cell-by-cell under the inherited labels
  bool v_equals_base_core = false;
  bool mixed_tv = false;  // t_a + v_b = t_{(b a) b^-1}
  bool mixed_vt = false;  // v_a + t_b = v_{(b a) b^-1}

  bool all() const {
    return t_closed && v_closed && t_equals_base_core && v_equals_base_core &&
           mixed_tv && mixed_vt;
  }
};

CoreDecomposition core_decomposition_check(const ExtendedLoop& e);

// Involutory reflection group of a quandle: one involution per element with
// g_b g_a g_b = g_{a+b}. Throws NotInvolutory unless q is an involutory
// quandle.
GroupPresentation rstr_presentation(const Quandle& q);

// Generator count minus the GF(2) rank of the relators' exponent parities:
// the mod-2 rank of the presented group's abelianization.
int abelianized_rank2(const GroupPresentation& p);

struct RstrResult {
  bool complete = false;
  long long order = 0;  // valid when complete
  size_t cosets_defined = 0;
};

// Order of the reflection group, by coset enumeration over the trivial
// subgroup.
RstrResult rstr_order(const Quandle& q, size_t max_cosets = 1'000'000);

}  // namespace bolkit
