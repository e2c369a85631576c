#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bolkit/perm.hpp"

namespace bolkit {

// Finite loop given by its Cayley table over 0-based element indices.
// Division tables and inverses are precomputed at construction; instances
// are immutable value types after that.
struct Loop {
  int n = 0;
  std::vector<int> tab;  // n*n, tab[a*n+b] = a*b
  int unit = 0;
  std::string name;

  std::vector<int> ldiv_tab;  // ldiv_tab[a*n+b] = a \ b  (unique x with a*x = b)
  std::vector<int> rdiv_tab;  // rdiv_tab[b*n+a] = b / a  (unique y with y*a = b)
  std::vector<int> inv_tab;   // two-sided inverse, -1 if one-sided only

  int mul(int a, int b) const { return tab[a * n + b]; }
  int ld(int a, int b) const { return ldiv_tab[a * n + b]; }
  int rd(int b, int a) const { return rdiv_tab[b * n + a]; }
  bool has_inverse(int a) const { return inv_tab[a] >= 0; }
  bool has_all_inverses() const;
  int inv(int a) const;  // throws TwoSidedInverseMissing

  Permutation right_translation(int a) const;  // x -> x*a
  Permutation left_translation(int a) const;   // x -> a*x

  bool operator==(const Loop& o) const { return n == o.n && tab == o.tab; }
};

// Validates rows as a Latin square with a two-sided unit. The unit is
// detected wherever it is; unit_hint, when given, must match it.
Loop from_table(const std::vector<std::vector<int>>& rows,
                std::optional<int> unit_hint = std::nullopt, std::string name = {});

int mul(const Loop& l, int a, int b);
int ldiv(const Loop& l, int a, int b);   // unique x with a*x = b
int rdiv(const Loop& l, int b, int a);   // unique y with y*a = b
int inverse(const Loop& l, int a);

enum class Identity {
  right_bol,            // ((x*y)*z)*y = x*((y*z)*y)
  moufang,              // right_bol and its mirror x*(y*(x*z)) = (x*(y*x))*z
  associative,
  commutative,
  aip,                  // (x*y)^-1 = x^-1 * y^-1
  rcc,                  // ((z*x)*y)/x = z*((x*y)/x)
  left_inverse_cancel,  // (x*y)*y^-1 = x
  bol_inverse_antihom,  // ((a*b)*a)^-1 = (a^-1*b^-1)*a^-1
  inverse_conjugacy,    // (a*b)*a^-1 = (a^-1*b)*a
};

const char* identity_name(Identity id);
std::optional<Identity> identity_from_name(const std::string& name);

// Exhaustive check; on failure *witness (if given) receives the first
// violating tuple (unused slots -1). Identities that need inverses return
// false with a witness of the inverse-less element when some are missing.
bool check_identity(const Loop& l, Identity id, std::array<int, 3>* witness = nullptr);

bool is_power_associative(const Loop& l);
int element_order(const Loop& l, int a);  // throws NotPowerAssociative
int exponent(const Loop& l);              // lcm of element orders

enum class Nucleus { left, middle, right };
std::vector<int> nucleus(const Loop& l, Nucleus side);
std::vector<int> nucleus_intersection(const Loop& l);
std::vector<int> commutant(const Loop& l);
std::vector<int> center(const Loop& l);
bool has_central_squares(const Loop& l);

std::vector<int> subloop_generated(const Loop& l, const std::vector<int>& seed);
bool is_subloop(const Loop& l, const std::vector<int>& s);
// Subloop invariance under the inner mapping generators
// R_a R_b R_{a*b}^-1, L_a L_b L_{b*a}^-1, R_a L_a^-1.
bool is_normal_subloop(const Loop& l, const std::vector<int>& s);

PermGroup right_multiplication_group(const Loop& l);

struct Autotopism {
  Permutation alpha, beta, gamma;
};
// gamma(x*y) = alpha(x)*beta(y) for all x, y.
bool is_autotopism(const Loop& l, const Autotopism& a);

}  // namespace bolkit
