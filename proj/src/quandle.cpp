#include "bolkit/quandle.hpp"

#include <bit>
#include <map>
#include <numeric>

#include "bolkit/error.hpp"

namespace bolkit {

Quandle quandle_from_table(const std::vector<std::vector<int>>& rows, std::string name) {
  Quandle q;
  q.n = static_cast<int>(rows.size());
  q.name = std::move(name);
  q.tab.reserve(static_cast<size_t>(q.n) * q.n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != q.n)
      throw Error("quandle_from_table: table is not square");
    for (int v : row) {
      if (v < 0 || v >= q.n) throw Error("quandle_from_table: entry out of range");
      q.tab.push_back(v);
    }
  }
  return q;
}

Quandle core(const Loop& l) {
  for (int a = 0; a < l.n; ++a)
    if (!l.has_inverse(a))
      throw TwoSidedInverseMissing("core: element " + std::to_string(a + 1) + " of " +
                                   (l.name.empty() ? "loop" : l.name) +
                                   " has no two-sided inverse");
  Quandle q;
  q.n = l.n;
  q.name = l.name.empty() ? "core" : "core(" + l.name + ")";
  q.tab.resize(static_cast<size_t>(l.n) * l.n);
  for (int x = 0; x < l.n; ++x)
    for (int y = 0; y < l.n; ++y)
      q.tab[x * l.n + y] = l.mul(l.mul(y, l.inv(x)), y);
  return q;
}

bool is_quandle(const Quandle& q) {
  for (int x = 0; x < q.n; ++x)
    if (q.at(x, x) != x) return false;
  for (int b = 0; b < q.n; ++b) {
    std::vector<char> hit(q.n, 0);
    for (int x = 0; x < q.n; ++x) {
      if (hit[q.at(x, b)]) return false;
      hit[q.at(x, b)] = 1;
    }
  }
  for (int x = 0; x < q.n; ++x)
    for (int y = 0; y < q.n; ++y)
      for (int z = 0; z < q.n; ++z)
        if (q.at(q.at(x, y), z) != q.at(q.at(x, z), q.at(y, z))) return false;
  return true;
}

bool is_quasigroup_quandle(const Quandle& q) {
  if (!is_quandle(q)) return false;
  for (int x = 0; x < q.n; ++x) {
    std::vector<char> hit(q.n, 0);
    for (int y = 0; y < q.n; ++y) {
      if (hit[q.at(x, y)]) return false;
      hit[q.at(x, y)] = 1;
    }
  }
  return true;
}

bool is_involutory(const Quandle& q) {
  for (int x = 0; x < q.n; ++x)
    for (int y = 0; y < q.n; ++y)
      if (q.at(q.at(x, y), y) != x) return false;
  return true;
}

PermGroup quandle_rmlt(const Quandle& q) {
  std::vector<Permutation> gens;
  gens.reserve(q.n);
  for (int b = 0; b < q.n; ++b) {
    std::vector<int> img(q.n);
    for (int x = 0; x < q.n; ++x) img[x] = q.at(x, b);
    if (!is_permutation(img)) throw Error("quandle_rmlt: a right translation is not a bijection");
    gens.push_back(Permutation(img));
  }
  return PermGroup(q.n, gens);
}

int orbit_count(const Quandle& q) {
  std::vector<int> root(q.n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&root](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (int x = 0; x < q.n; ++x)
    for (int b = 0; b < q.n; ++b) {
      int a = find(x), c = find(q.at(x, b));
      if (a != c) root[std::max(a, c)] = std::min(a, c);
    }
  int count = 0;
  for (int x = 0; x < q.n; ++x)
    if (find(x) == x) ++count;
  return count;
}

bool is_connected(const Quandle& q) { return orbit_count(q) == 1; }

CoreDecomposition core_decomposition_check(const ExtendedLoop& e) {
  const Loop& l = e.base;
  const int n = l.n;
  Quandle big = core(e.carrier);
  Quandle small = core(l);
  CoreDecomposition d;
  d.t_closed = d.v_closed = d.t_equals_base_core = d.v_equals_base_core = true;
  d.mixed_tv = d.mixed_vt = true;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int tt = big.at(a, b);
      if (tt >= n) d.t_closed = false;
      if (tt != small.at(a, b)) d.t_equals_base_core = false;
      int vv = big.at(n + a, n + b);
      if (vv < n) d.v_closed = false;
      if (vv - n != small.at(a, b)) d.v_equals_base_core = false;
      int twist = l.mul(l.mul(b, a), l.inv(b));  // (b a) b^-1
      if (big.at(a, n + b) != twist) d.mixed_tv = false;
      if (big.at(n + a, b) != n + twist) d.mixed_vt = false;
    }
  return d;
}

GroupPresentation rstr_presentation(const Quandle& q) {
  if (!is_quandle(q)) throw Error("rstr_presentation: not a quandle");
  if (!is_involutory(q))
    throw NotInvolutory("rstr_presentation: quandle is not involutory");
  GroupPresentation p;
  p.generator_count = q.n;
  for (int a = 0; a < q.n; ++a) p.relators.push_back({a + 1, a + 1});
  for (int a = 0; a < q.n; ++a)
    for (int b = 0; b < q.n; ++b) {
      if (a == b) continue;
      p.relators.push_back({b + 1, a + 1, b + 1, -(q.at(a, b) + 1)});
    }
  return p;
}

int abelianized_rank2(const GroupPresentation& p) {
  const int g = p.generator_count;
  const int words = (g + 63) / 64;
  std::map<int, std::vector<uint64_t>> by_lead;  // pivot bit -> echelon row
  for (const auto& rel : p.relators) {
    std::vector<uint64_t> row(words, 0);
    for (int letter : rel) {
      int idx = (letter > 0 ? letter : -letter) - 1;
      row[idx / 64] ^= 1ull << (idx % 64);
    }
    while (true) {
      int lead = -1;
      for (int w = 0; w < words && lead < 0; ++w)
        if (row[w]) lead = w * 64 + std::countr_zero(row[w]);
      if (lead < 0) break;
      auto it = by_lead.find(lead);
      if (it == by_lead.end()) {
        by_lead.emplace(lead, row);
        break;
      }
      for (int w = 0; w < words; ++w) row[w] ^= it->second[w];
    }
  }
  return g - static_cast<int>(by_lead.size());
}

RstrResult rstr_order(const Quandle& q, size_t max_cosets) {
  CosetTable t = todd_coxeter(rstr_presentation(q), {}, max_cosets);
  RstrResult r;
  r.complete = t.status == CosetTable::Status::complete;
  r.order = r.complete ? t.cosets : 0;
  r.cosets_defined = t.total_defined;
  return r;
}

}  // namespace bolkit
