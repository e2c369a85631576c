#include "bolkit/iso.hpp"

#include <algorithm>
#include <map>

#include "bolkit/error.hpp"

namespace bolkit {

Loop relabel(const Loop& l, const Permutation& p) {
  const int n = l.n;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) rows[p(x)][p(y)] = p(l.mul(x, y));
  return from_table(rows, std::nullopt, l.name);
}

namespace {

// Stable element coloring under table refinement, computed jointly over
// several loops so that color ids are comparable between them.
std::vector<std::vector<int>> joint_colors(const std::vector<const Loop*>& ls) {
  std::vector<std::vector<int>> col(ls.size());
  {
    std::map<std::array<long long, 3>, int> ids;
    for (size_t k = 0; k < ls.size(); ++k) {
      const Loop& l = *ls[k];
      col[k].resize(l.n);
      for (int x = 0; x < l.n; ++x) {
        std::array<long long, 3> key = {x == l.unit ? 1 : 0,
                                        perm_order(l.right_translation(x)),
                                        perm_order(l.left_translation(x))};
        col[k][x] = ids.emplace(key, static_cast<int>(ids.size())).first->second;
      }
    }
  }
  size_t prev_count = 0;
  for (int round = 0;; ++round) {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> next(ls.size());
    for (size_t k = 0; k < ls.size(); ++k) {
      const Loop& l = *ls[k];
      next[k].resize(l.n);
      for (int x = 0; x < l.n; ++x) {
        std::vector<int> key;
        key.reserve(3 * l.n + 2);
        key.push_back(col[k][x]);
        key.push_back(col[k][l.mul(x, x)]);
        std::vector<std::array<int, 3>> prof(l.n);
        for (int y = 0; y < l.n; ++y)
          prof[y] = {col[k][y], col[k][l.mul(x, y)], col[k][l.mul(y, x)]};
        std::sort(prof.begin(), prof.end());
        for (auto& p : prof) key.insert(key.end(), p.begin(), p.end());
        next[k][x] = ids.emplace(std::move(key), static_cast<int>(ids.size())).first->second;
      }
    }
    col = std::move(next);
    if (ids.size() == prev_count) break;
    prev_count = ids.size();
  }
  return col;
}

// Extends the partial map given by images of the generator prefix to the
// subloop they generate; empty result on inconsistency.
std::optional<std::vector<int>> close_map(const Loop& l1, const Loop& l2,
                                          const std::vector<int>& gens,
                                          const std::vector<int>& images) {
  std::vector<int> f(l1.n, -1);
  std::vector<char> used(l2.n, 0);
  std::vector<int> known;
  auto assign = [&](int x, int y) {
    if (f[x] >= 0) return f[x] == y;
    if (used[y]) return false;
    f[x] = y;
    used[y] = 1;
    known.push_back(x);
    return true;
  };
  if (!assign(l1.unit, l2.unit)) return std::nullopt;
  for (size_t i = 0; i < images.size(); ++i)
    if (!assign(gens[i], images[i])) return std::nullopt;
  for (size_t i = 0; i < known.size(); ++i)
    for (size_t j = 0; j <= i; ++j) {
      const int a = known[i], b = known[j];
      if (!assign(l1.mul(a, b), l2.mul(f[a], f[b]))) return std::nullopt;
      if (!assign(l1.mul(b, a), l2.mul(f[b], f[a]))) return std::nullopt;
    }
  return f;
}

}  // namespace

std::optional<Permutation> are_isomorphic(const Loop& l1, const Loop& l2) {
  if (l1.n != l2.n) return std::nullopt;
  const int n = l1.n;
  auto colors = joint_colors({&l1, &l2});
  {
    std::vector<int> a = colors[0], b = colors[1];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  // Generating sequence of l1: extend the generated subloop greedily.
  std::vector<int> gens;
  {
    std::vector<int> closed = subloop_generated(l1, {});
    while (static_cast<int>(closed.size()) < n) {
      int pick = -1;
      for (int x = 0; x < n && pick < 0; ++x)
        if (!std::binary_search(closed.begin(), closed.end(), x)) pick = x;
      gens.push_back(pick);
      closed = subloop_generated(l1, gens);
    }
  }

  std::vector<int> images;
  std::optional<Permutation> result;
  auto dfs = [&](auto&& self, size_t i) -> bool {
    auto f = close_map(l1, l2, gens, images);
    if (!f) return false;
    if (i == gens.size()) {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if ((*f)[l1.mul(x, y)] != l2.mul((*f)[x], (*f)[y])) return false;
      result = Permutation{*f};
      return true;
    }
    for (int c = 0; c < n; ++c) {
      if (colors[1][c] != colors[0][gens[i]]) continue;
      if ((*f)[gens[i]] >= 0) {  // already forced by closure: only that image
        if ((*f)[gens[i]] != c) continue;
      } else if (std::find(f->begin(), f->end(), c) != f->end()) {
        continue;
      }
      images.push_back(c);
      if (self(self, i + 1)) return true;
      images.pop_back();
    }
    return false;
  };
  dfs(dfs, 0);
  return result;
}

namespace {

struct CanonSearch {
  const Loop& l;
  int n;
  std::vector<int> lab, inv_lab;  // old -> new, new -> old, -1 unset
  std::vector<int> flat;          // cells (r,c), r,c >= 1, row-major
  std::vector<int> best;
  bool have_best = false;
  long long version = 0;  // bumped when best improves

  explicit CanonSearch(const Loop& loop)
      : l(loop), n(loop.n), lab(loop.n, -1), inv_lab(loop.n, -1) {
    lab[l.unit] = 0;
    inv_lab[0] = l.unit;
    flat.reserve(static_cast<size_t>(n - 1) * (n - 1));
  }

  int smallest_free_label() const {
    for (int m = 0; m < n; ++m)
      if (inv_lab[m] < 0) return m;
    return -1;
  }

  void bind(int old_elem, int label) {
    lab[old_elem] = label;
    inv_lab[label] = old_elem;
  }
  void unbind(int old_elem, int label) {
    lab[old_elem] = -1;
    inv_lab[label] = -1;
  }

  // cmp: 0 = prefix equals best so far, -1 = already strictly smaller.
  void rec(size_t t, int cmp) {
    if (t == static_cast<size_t>(n - 1) * (n - 1)) {
      if (!have_best || flat < best) {
        best = flat;
        have_best = true;
        ++version;
      }
      return;
    }
    const int r = 1 + static_cast<int>(t) / (n - 1);
    const int c = 1 + static_cast<int>(t) % (n - 1);

    auto candidates_for = [&](int label, int pair_elem, bool pair_is_row) {
      std::vector<std::pair<int, int>> cand;  // (cell value, old element)
      if (inv_lab[label] >= 0) {
        cand.push_back({0, inv_lab[label]});
        return cand;
      }
      const int free_label = smallest_free_label();
      for (int u = 0; u < n; ++u) {
        if (lab[u] >= 0) continue;
        if (pair_elem >= 0) {
          int w = pair_is_row ? l.mul(pair_elem, u) : l.mul(u, pair_elem);
          cand.push_back({lab[w] >= 0 ? lab[w] : free_label, u});
        } else {
          cand.push_back({0, u});
        }
      }
      std::sort(cand.begin(), cand.end());
      return cand;
    };

    const bool row_bound = inv_lab[r] >= 0;
    for (auto [ru_val, u] : candidates_for(r, row_bound ? -1 : inv_lab[c], false)) {
      (void)ru_val;
      if (!row_bound) bind(u, r);
      const bool col_bound = inv_lab[c] >= 0;
      for (auto [cv_val, v] : candidates_for(c, u, true)) {
        (void)cv_val;
        if (!col_bound) bind(v, c);
        const int w = l.mul(u, v);
        bool bound_w = false;
        if (lab[w] < 0) {
          bind(w, smallest_free_label());
          bound_w = true;
        }
        const int val = lab[w];
        int cmp2 = cmp;
        long long ver = version;
        bool keep = true;
        if (cmp2 == 0 && have_best) {
          if (val > best[t]) keep = false;
          else if (val < best[t]) cmp2 = -1;
        }
        if (keep) {
          flat.push_back(val);
          rec(t + 1, cmp2);
          flat.pop_back();
        }
        if (bound_w) unbind(w, val);
        if (!col_bound) unbind(v, c);
        if (version != ver && cmp == -1) cmp = 0;  // best now shares our prefix
        if (col_bound) break;
      }
      if (!row_bound) unbind(u, r);
      if (row_bound) break;
    }
  }
};

}  // namespace

Loop canonical_form(const Loop& l) {
  const int n = l.n;
  if (n == 1) {
    Loop t = l;
    return t;
  }
  CanonSearch s(l);
  s.rec(0, s.have_best ? 0 : -1);
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int j = 0; j < n; ++j) rows[0][j] = j;
  for (int r = 1; r < n; ++r) {
    rows[r][0] = r;
    for (int c = 1; c < n; ++c) rows[r][c] = s.best[(r - 1) * (n - 1) + (c - 1)];
  }
  return from_table(rows, 0, l.name);
}

}  // namespace bolkit
