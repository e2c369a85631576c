#include "bolkit/todd_coxeter.hpp"

#include <deque>

#include "bolkit/error.hpp"

namespace bolkit {

std::string presentation_to_string(const GroupPresentation& p) {
  std::string s = std::to_string(p.generator_count) + " generators\nrelators:\n";
  for (const auto& w : p.relators) {
    s += " ";
    for (int letter : w) {
      s += " g" + std::to_string((letter > 0 ? letter : -letter) - 1);
      if (letter < 0) s += "'";
    }
    s += "\n";
  }
  return s;
}

namespace {

// Columns come in pairs: 2k = generator k forward, 2k+1 = its inverse.
struct Enumerator {
  int ncols;
  size_t max_cosets;
  std::vector<std::vector<int>> tab;
  std::vector<int> rep;  // union-find over cosets; rep[x] == x iff live
  size_t live = 0;
  bool out_of_budget = false;

  Enumerator(int generator_count, size_t budget)
      : ncols(2 * generator_count), max_cosets(budget) {
    define_coset();
  }

  int find(int x) {
    while (rep[x] != x) {
      rep[x] = rep[rep[x]];
      x = rep[x];
    }
    return x;
  }

  int define_coset() {
    if (tab.size() >= max_cosets) {
      out_of_budget = true;
      return -1;
    }
    tab.emplace_back(ncols, -1);
    rep.push_back(static_cast<int>(rep.size()));
    ++live;
    return static_cast<int>(tab.size()) - 1;
  }

  static int column(int letter) {
    return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
  }
  static int inverse_column(int col) { return col ^ 1; }

  void merge(int a, int b, std::deque<int>& dead) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    rep[b] = a;
    --live;
    dead.push_back(b);
  }

  void coincidence(int a, int b) {
    std::deque<int> dead;
    merge(a, b, dead);
    while (!dead.empty()) {
      int y = dead.front();
      dead.pop_front();
      for (int x = 0; x < ncols; ++x) {
        int d = tab[y][x];
        if (d < 0) continue;
        tab[d][inverse_column(x)] = -1;  // drop the mirror edge into y
        int mu = find(y), nu = find(d);
        if (tab[mu][x] >= 0)
          merge(nu, find(tab[mu][x]), dead);
        else if (tab[nu][inverse_column(x)] >= 0)
          merge(mu, find(tab[nu][inverse_column(x)]), dead);
        else {
          tab[mu][x] = nu;
          tab[nu][inverse_column(x)] = mu;
        }
      }
    }
  }

  // Traces the word from coset alpha both ways, defining cosets across the
  // gap, and closes the cycle (alpha^word = alpha).
  void scan_and_fill(int alpha, const std::vector<int>& word) {
    int f = alpha, i = 0;
    int b = alpha, j = static_cast<int>(word.size()) - 1;
    while (true) {
      while (i <= j && tab[f][column(word[i])] >= 0) f = tab[f][column(word[i++])];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && tab[b][inverse_column(column(word[j]))] >= 0)
        b = tab[b][inverse_column(column(word[j--]))];
      if (j < i) {  // the scans overlapped on one edge
        coincidence(f, b);
        return;
      }
      if (j == i) {  // a single gap: deduce the edge
        tab[f][column(word[i])] = b;
        tab[b][inverse_column(column(word[i]))] = f;
        return;
      }
      int nu = define_coset();
      if (nu < 0) return;
      tab[f][column(word[i])] = nu;
      tab[nu][inverse_column(column(word[i]))] = f;
      f = nu;
      ++i;
    }
  }
};

}  // namespace

CosetTable todd_coxeter(const GroupPresentation& p,
                        const std::vector<std::vector<int>>& subgroup_gens,
                        size_t max_cosets) {
  if (p.generator_count < 0) throw Error("todd_coxeter: negative generator count");
  auto check_word = [&p](const std::vector<int>& w) {
    for (int letter : w)
      if (letter == 0 || letter > p.generator_count || -letter > p.generator_count)
        throw Error("todd_coxeter: word letter out of range");
  };
  for (const auto& w : p.relators) check_word(w);
  for (const auto& w : subgroup_gens) check_word(w);
  if (max_cosets == 0) max_cosets = 1;

  Enumerator e(p.generator_count, max_cosets);
  for (const auto& w : subgroup_gens) {
    if (e.out_of_budget) break;
    e.scan_and_fill(0, w);
  }
  for (size_t alpha = 0; alpha < e.tab.size() && !e.out_of_budget; ++alpha) {
    if (e.find(static_cast<int>(alpha)) != static_cast<int>(alpha)) continue;
    for (const auto& w : p.relators) {
      e.scan_and_fill(static_cast<int>(alpha), w);
      if (e.out_of_budget || e.find(static_cast<int>(alpha)) != static_cast<int>(alpha)) break;
    }
    if (e.out_of_budget || e.find(static_cast<int>(alpha)) != static_cast<int>(alpha)) continue;
    for (int x = 0; x < e.ncols && !e.out_of_budget; ++x) {
      if (e.tab[alpha][x] >= 0) continue;
      int nu = e.define_coset();
      if (nu < 0) break;
      e.tab[alpha][x] = nu;
      e.tab[nu][Enumerator::inverse_column(x)] = static_cast<int>(alpha);
    }
  }

  CosetTable result;
  result.status = e.out_of_budget ? CosetTable::Status::budget_exceeded
                                  : CosetTable::Status::complete;
  result.total_defined = e.tab.size();
  std::vector<int> new_id(e.tab.size(), -1);
  int next = 0;
  for (size_t c = 0; c < e.tab.size(); ++c)
    if (e.find(static_cast<int>(c)) == static_cast<int>(c)) new_id[c] = next++;
  result.cosets = next;
  result.rows.assign(next, std::vector<int>(p.generator_count, -1));
  for (size_t c = 0; c < e.tab.size(); ++c) {
    if (new_id[c] < 0) continue;
    for (int g = 0; g < p.generator_count; ++g) {
      int t = e.tab[c][2 * g];
      if (t >= 0) result.rows[new_id[c]][g] = new_id[e.find(t)];
    }
  }
  return result;
}

}  // namespace bolkit
