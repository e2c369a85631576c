#pragma once

#include <optional>
#include <vector>

#include "bolkit/loop.hpp"

namespace bolkit {

// The doubled loops below live on two copies of a base loop of order n:
// "plain" elements t_a (carrier index a) and "flipped" elements v_a
// (carrier index n + a).
enum class Tag { t, v };

struct TaggedElement {
  Tag tag;
  int index;  // base-loop element
};

struct ExtendedLoop {
  Loop carrier;  // the doubled loop, order 2 * base.n
  Loop base;
  TaggedElement label(int i) const;
  int t_index(int a) const { return a; }
  int v_index(int a) const { return base.n + a; }
};

// Doubles a loop with two-sided inverses by the rule
//   t_a t_b = t_{ab},  t_a v_b = v_{ab},  v_a t_b = v_{a b^-1},  v_a v_b = t_{a b^-1}.
// Throws TwoSidedInverseMissing when some element has none.
ExtendedLoop extend(const Loop& l);

// True exactly when the double of l comes out right Bol, decided from l
// alone: l right Bol with all squares central.
bool extension_is_right_bol_predicted(const Loop& l);

// Same table as extend(l).carrier, built from the two-cocycle view
//   (a x^d)(b x^e) = (a b^mu) x^(d+e),  mu = (-1)^d.
Loop extension_cocycle_form(const Loop& l);

// Doubled group M(G,2); throws NotAGroup when g is not associative.
//   (g1 x^d)(g2 x^e) = (g1^nu g2^mu) x^(d+e),  nu = (-1)^e, mu = (-1)^(d+e).
ExtendedLoop chein_double(const Loop& g);

// Same table as chein_double(g).carrier, written per tag pair:
//   t_g t_h = t_{gh},  t_g v_h = v_{g^-1 h^-1},  v_g t_h = v_{g h^-1},  v_g v_h = t_{g^-1 h}.
Loop chein_double_tv_form(const Loop& g);

struct IterationResult {
  std::vector<Loop> loops;     // loops[0] = input, loops[i] = double of loops[i-1]
  std::optional<int> lost_at;  // first index whose loop is not right Bol
};

// Doubles repeatedly, up to `steps` times, stopping early only if some
// iterate has an element without a two-sided inverse.
IterationResult iterate_extension(const Loop& l, int steps);

struct MoufangReport {
  bool ext_moufang;
  bool ext_associative;
  bool base_abelian_group;
  bool consistent() const {
    return ext_moufang == ext_associative && ext_associative == base_abelian_group;
  }
};

MoufangReport moufang_equivalences_report(const Loop& l);

}  // namespace bolkit
