#include "bolkit/loop.hpp"

#include <algorithm>
#include <numeric>

#include "bolkit/error.hpp"

namespace bolkit {

bool Loop::has_all_inverses() const {
  return std::all_of(inv_tab.begin(), inv_tab.end(), [](int v) { return v >= 0; });
}

int Loop::inv(int a) const {
  if (inv_tab[a] < 0)
    throw TwoSidedInverseMissing("element " + std::to_string(a + 1) +
                                 " has no two-sided inverse" +
                                 (name.empty() ? "" : " in loop " + name));
  return inv_tab[a];
}

Permutation Loop::right_translation(int a) const {
  std::vector<int> img(n);
  for (int x = 0; x < n; ++x) img[x] = mul(x, a);
  return Permutation(std::move(img));
}

Permutation Loop::left_translation(int a) const {
  std::vector<int> img(n);
  for (int x = 0; x < n; ++x) img[x] = mul(a, x);
  return Permutation(std::move(img));
}

Loop from_table(const std::vector<std::vector<int>>& rows, std::optional<int> unit_hint,
                std::string name) {
  const int n = static_cast<int>(rows.size());
  const std::string tag = name.empty() ? std::string() : " in loop " + name;
  if (n == 0) throw NotLatin("empty table" + tag);
  Loop l;
  l.n = n;
  l.name = std::move(name);
  l.tab.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw NotLatin("row " + std::to_string(i + 1) + " has " +
                     std::to_string(rows[i].size()) + " entries, expected " +
                     std::to_string(n) + tag);
    for (int j = 0; j < n; ++j) {
      int v = rows[i][j];
      if (v < 0 || v >= n)
        throw NotLatin("entry out of range at row " + std::to_string(i + 1) + ", column " +
                       std::to_string(j + 1) + tag);
      l.tab[i * n + j] = v;
    }
  }
  std::vector<char> seen(n);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      int v = l.tab[i * n + j];
      if (seen[v])
        throw NotLatin("row " + std::to_string(i + 1) + " repeats element " +
                       std::to_string(v + 1) + tag);
      seen[v] = 1;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < n; ++i) {
      int v = l.tab[i * n + j];
      if (seen[v])
        throw NotLatin("column " + std::to_string(j + 1) + " repeats element " +
                       std::to_string(v + 1) + tag);
      seen[v] = 1;
    }
  }

  int unit = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = l.tab[e * n + x] == x && l.tab[x * n + e] == x;
    if (ok) {
      unit = e;
      break;
    }
  }
  if (unit < 0) throw NoUnit("no two-sided unit" + tag);
  if (unit_hint && *unit_hint != unit)
    throw UnitMismatch("unit is element " + std::to_string(unit + 1) + ", not " +
                       std::to_string(*unit_hint + 1) + tag);
  l.unit = unit;

  l.ldiv_tab.assign(static_cast<size_t>(n) * n, -1);
  l.rdiv_tab.assign(static_cast<size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int p = l.tab[a * n + b];
      l.ldiv_tab[a * n + p] = b;  // a \ p = b
      l.rdiv_tab[p * n + b] = a;  // p / b = a
    }
  l.inv_tab.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    int r = l.ldiv_tab[a * n + unit];   // a * r = e
    int lft = l.rdiv_tab[unit * n + a]; // lft * a = e
    if (r == lft) l.inv_tab[a] = r;
  }
  return l;
}

int mul(const Loop& l, int a, int b) { return l.mul(a, b); }
int ldiv(const Loop& l, int a, int b) { return l.ld(a, b); }
int rdiv(const Loop& l, int b, int a) { return l.rd(b, a); }
int inverse(const Loop& l, int a) { return l.inv(a); }

const char* identity_name(Identity id) {
  switch (id) {
    case Identity::right_bol: return "right_bol";
    case Identity::moufang: return "moufang";
    case Identity::associative: return "associative";
    case Identity::commutative: return "commutative";
    case Identity::aip: return "aip";
    case Identity::rcc: return "rcc";
    case Identity::left_inverse_cancel: return "left_inverse_cancel";
    case Identity::bol_inverse_antihom: return "bol_inverse_antihom";
    case Identity::inverse_conjugacy: return "inverse_conjugacy";
  }
  return "?";
}

std::optional<Identity> identity_from_name(const std::string& name) {
  for (Identity id : {Identity::right_bol, Identity::moufang, Identity::associative,
                      Identity::commutative, Identity::aip, Identity::rcc,
                      Identity::left_inverse_cancel, Identity::bol_inverse_antihom,
                      Identity::inverse_conjugacy})
    if (name == identity_name(id)) return id;
  return std::nullopt;
}

namespace {

void set_witness(std::array<int, 3>* w, int a, int b, int c) {
  if (w) *w = {a, b, c};
}

bool inverses_or_witness(const Loop& l, std::array<int, 3>* w) {
  for (int a = 0; a < l.n; ++a)
    if (!l.has_inverse(a)) {
      set_witness(w, a, -1, -1);
      return false;
    }
  return true;
}

bool check_right_bol(const Loop& l, std::array<int, 3>* w) {
  for (int x = 0; x < l.n; ++x)
    for (int y = 0; y < l.n; ++y)
      for (int z = 0; z < l.n; ++z)
        if (l.mul(l.mul(l.mul(x, y), z), y) != l.mul(x, l.mul(l.mul(y, z), y))) {
          set_witness(w, x, y, z);
          return false;
        }
  return true;
}

bool check_left_bol(const Loop& l, std::array<int, 3>* w) {
  for (int x = 0; x < l.n; ++x)
    for (int y = 0; y < l.n; ++y)
      for (int z = 0; z < l.n; ++z)
        if (l.mul(x, l.mul(y, l.mul(x, z))) != l.mul(l.mul(x, l.mul(y, x)), z)) {
          set_witness(w, x, y, z);
          return false;
        }
  return true;
}

}  // namespace

bool check_identity(const Loop& l, Identity id, std::array<int, 3>* w) {
  switch (id) {
    case Identity::right_bol:
      return check_right_bol(l, w);
    case Identity::moufang:
      return check_right_bol(l, w) && check_left_bol(l, w);
    case Identity::associative:
      for (int x = 0; x < l.n; ++x)
        for (int y = 0; y < l.n; ++y)
          for (int z = 0; z < l.n; ++z)
            if (l.mul(l.mul(x, y), z) != l.mul(x, l.mul(y, z))) {
              set_witness(w, x, y, z);
              return false;
            }
      return true;
    case Identity::commutative:
      for (int x = 0; x < l.n; ++x)
        for (int y = 0; y < l.n; ++y)
          if (l.mul(x, y) != l.mul(y, x)) {
            set_witness(w, x, y, -1);
            return false;
          }
      return true;
    case Identity::aip:
      if (!inverses_or_witness(l, w)) return false;
      for (int x = 0; x < l.n; ++x)
        for (int y = 0; y < l.n; ++y)
          if (l.inv(l.mul(x, y)) != l.mul(l.inv(x), l.inv(y))) {
            set_witness(w, x, y, -1);
            return false;
          }
      return true;
    case Identity::rcc:
      for (int x = 0; x < l.n; ++x)
        for (int y = 0; y < l.n; ++y) {
          int t = l.rd(l.mul(x, y), x);  // (x*y)/x
          for (int z = 0; z < l.n; ++z)
            if (l.rd(l.mul(l.mul(z, x), y), x) != l.mul(z, t)) {
              set_witness(w, x, y, z);
              return false;
            }
        }
      return true;
    case Identity::left_inverse_cancel:
      if (!inverses_or_witness(l, w)) return false;
      for (int x = 0; x < l.n; ++x)
        for (int y = 0; y < l.n; ++y)
          if (l.mul(l.mul(x, y), l.inv(y)) != x) {
            set_witness(w, x, y, -1);
            return false;
          }
      return true;
    case Identity::bol_inverse_antihom:
      if (!inverses_or_witness(l, w)) return false;
      for (int a = 0; a < l.n; ++a)
        for (int b = 0; b < l.n; ++b)
          if (l.inv(l.mul(l.mul(a, b), a)) !=
              l.mul(l.mul(l.inv(a), l.inv(b)), l.inv(a))) {
            set_witness(w, a, b, -1);
            return false;
          }
      return true;
    case Identity::inverse_conjugacy:
      if (!inverses_or_witness(l, w)) return false;
      for (int a = 0; a < l.n; ++a)
        for (int b = 0; b < l.n; ++b)
          if (l.mul(l.mul(a, b), l.inv(a)) != l.mul(l.mul(l.inv(a), b), a)) {
            set_witness(w, a, b, -1);
            return false;
          }
      return true;
  }
  return false;
}

namespace {

bool associative_on(const Loop& l, const std::vector<int>& s) {
  for (int x : s)
    for (int y : s)
      for (int z : s)
        if (l.mul(l.mul(x, y), z) != l.mul(x, l.mul(y, z))) return false;
  return true;
}

}  // namespace

std::vector<int> subloop_generated(const Loop& l, const std::vector<int>& seed) {
  std::vector<char> in(l.n, 0);
  std::vector<int> s;
  auto add = [&](int v) {
    if (!in[v]) {
      in[v] = 1;
      s.push_back(v);
    }
  };
  add(l.unit);
  for (int v : seed) add(v);
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = 0; j <= i; ++j)
      for (auto [a, b] : {std::pair{s[i], s[j]}, std::pair{s[j], s[i]}}) {
        add(l.mul(a, b));
        add(l.ld(a, b));
        add(l.rd(a, b));
      }
  std::sort(s.begin(), s.end());
  return s;
}

bool is_subloop(const Loop& l, const std::vector<int>& s) {
  if (s.empty()) return false;
  std::vector<char> in(l.n, 0);
  for (int v : s) {
    if (v < 0 || v >= l.n) return false;
    in[v] = 1;
  }
  if (!in[l.unit]) return false;
  for (int a : s)
    for (int b : s)
      if (!in[l.mul(a, b)] || !in[l.ld(a, b)] || !in[l.rd(a, b)]) return false;
  return true;
}

bool is_normal_subloop(const Loop& l, const std::vector<int>& s) {
  if (!is_subloop(l, s)) return false;
  std::vector<char> in(l.n, 0);
  for (int v : s) in[v] = 1;
  for (int a = 0; a < l.n; ++a) {
    for (int x : s)  // R_a L_a^-1 : x -> a \ (x*a)
      if (!in[l.ld(a, l.mul(x, a))]) return false;
    for (int b = 0; b < l.n; ++b) {
      const int ab = l.mul(a, b), ba = l.mul(b, a);
      for (int x : s) {
        if (!in[l.rd(l.mul(l.mul(x, a), b), ab)]) return false;  // R_a R_b R_{ab}^-1
        if (!in[l.ld(ba, l.mul(b, l.mul(a, x)))]) return false;  // L_a L_b L_{ba}^-1
      }
    }
  }
  return true;
}

bool is_power_associative(const Loop& l) {
  for (int a = 0; a < l.n; ++a)
    if (!associative_on(l, subloop_generated(l, {a}))) return false;
  return true;
}

int element_order(const Loop& l, int a) {
  if (!associative_on(l, subloop_generated(l, {a})))
    throw NotPowerAssociative("element " + std::to_string(a + 1) +
                              " does not generate a cyclic group" +
                              (l.name.empty() ? "" : " in loop " + l.name));
  int p = a, k = 1;
  while (p != l.unit) {
    p = l.mul(p, a);
    ++k;
  }
  return k;
}

int exponent(const Loop& l) {
  int e = 1;
  for (int a = 0; a < l.n; ++a) e = std::lcm(e, element_order(l, a));
  return e;
}

std::vector<int> nucleus(const Loop& l, Nucleus side) {
  std::vector<int> out;
  for (int a = 0; a < l.n; ++a) {
    bool ok = true;
    for (int x = 0; x < l.n && ok; ++x)
      for (int y = 0; y < l.n && ok; ++y)
        switch (side) {
          case Nucleus::left:
            ok = l.mul(l.mul(a, x), y) == l.mul(a, l.mul(x, y));
            break;
          case Nucleus::middle:
            ok = l.mul(l.mul(x, a), y) == l.mul(x, l.mul(a, y));
            break;
          case Nucleus::right:
            ok = l.mul(l.mul(x, y), a) == l.mul(x, l.mul(y, a));
            break;
        }
    if (ok) out.push_back(a);
  }
  return out;
}

namespace {

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<int> nucleus_intersection(const Loop& l) {
  return intersect_sorted(intersect_sorted(nucleus(l, Nucleus::left), nucleus(l, Nucleus::middle)),
                          nucleus(l, Nucleus::right));
}

std::vector<int> commutant(const Loop& l) {
  std::vector<int> out;
  for (int a = 0; a < l.n; ++a) {
    bool ok = true;
    for (int x = 0; x < l.n && ok; ++x) ok = l.mul(a, x) == l.mul(x, a);
    if (ok) out.push_back(a);
  }
  return out;
}

std::vector<int> center(const Loop& l) {
  return intersect_sorted(commutant(l), nucleus_intersection(l));
}

bool has_central_squares(const Loop& l) {
  std::vector<char> in(l.n, 0);
  for (int z : center(l)) in[z] = 1;
  for (int x = 0; x < l.n; ++x)
    if (!in[l.mul(x, x)]) return false;
  return true;
}

PermGroup right_multiplication_group(const Loop& l) {
  std::vector<Permutation> gens;
  gens.reserve(l.n);
  for (int a = 0; a < l.n; ++a) gens.push_back(l.right_translation(a));
  return PermGroup(l.n, std::move(gens));
}

bool is_autotopism(const Loop& l, const Autotopism& a) {
  if (a.alpha.degree() != l.n || a.beta.degree() != l.n || a.gamma.degree() != l.n) return false;
  if (!is_permutation(a.alpha.img) || !is_permutation(a.beta.img) ||
      !is_permutation(a.gamma.img))
    return false;
  for (int x = 0; x < l.n; ++x)
    for (int y = 0; y < l.n; ++y)
      if (a.gamma(l.mul(x, y)) != l.mul(a.alpha(x), a.beta(y))) return false;
  return true;
}

}  // namespace bolkit
