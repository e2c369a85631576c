#include "bolkit/perm.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "bolkit/error.hpp"

namespace bolkit {

Permutation identity_perm(int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation perm_mul(const Permutation& p, const Permutation& q) {
  std::vector<int> r(p.img.size());
  for (size_t i = 0; i < p.img.size(); ++i) r[i] = q.img[p.img[i]];
  return Permutation(std::move(r));
}

Permutation perm_inverse(const Permutation& p) {
  std::vector<int> r(p.img.size());
  for (size_t i = 0; i < p.img.size(); ++i) r[p.img[i]] = static_cast<int>(i);
  return Permutation(std::move(r));
}

bool is_permutation(const std::vector<int>& img) {
  const int n = static_cast<int>(img.size());
  std::vector<char> seen(n, 0);
  for (int v : img) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

long long perm_order(const Permutation& p) {
  const int n = p.degree();
  std::vector<char> done(n, 0);
  long long ord = 1;
  for (int i = 0; i < n; ++i) {
    if (done[i]) continue;
    long long len = 0;
    for (int j = i; !done[j]; j = p.img[j]) {
      done[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators, size_t closure_budget)
    : deg(degree), gens(std::move(generators)) {
  for (const auto& g : gens)
    if (g.degree() != deg) throw Error("generator degree mismatch");

  std::unordered_set<Permutation, PermHash> seen;
  std::vector<Permutation> queue;
  queue.push_back(identity_perm(deg));
  seen.insert(queue[0]);
  for (size_t head = 0; head < queue.size(); ++head) {
    Permutation cur = queue[head];
    for (const auto& g : gens) {
      Permutation next = perm_mul(cur, g);
      if (seen.insert(next).second) {
        if (seen.size() > closure_budget)
          throw ClosureBudgetExceeded("permutation closure exceeded " +
                                      std::to_string(closure_budget) + " elements");
        queue.push_back(std::move(next));
      }
    }
  }
  elems.assign(seen.begin(), seen.end());
  std::sort(elems.begin(), elems.end());
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elems.begin(), elems.end(), p);
}

std::vector<int> orbit_of_point(const std::vector<Permutation>& gens, int point) {
  std::vector<int> out{point};
  if (gens.empty()) return out;
  std::vector<char> seen(gens[0].degree(), 0);
  seen[point] = 1;
  for (size_t head = 0; head < out.size(); ++head)
    for (const auto& g : gens) {
      int q = g(out[head]);
      if (!seen[q]) {
        seen[q] = 1;
        out.push_back(q);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> orbit(const PermGroup& g, int point) { return orbit_of_point(g.gens, point); }

PermGroup stabilizer(const PermGroup& g, int point) {
  std::vector<Permutation> fixing;
  for (const auto& p : g.elems)
    if (p(point) == point) fixing.push_back(p);
  return PermGroup(g.deg, std::move(fixing));
}

bool is_sharply_transitive(const std::vector<Permutation>& set) {
  if (set.empty()) return false;
  const int n = set[0].degree();
  for (const auto& p : set)
    if (p.degree() != n) return false;
  if (static_cast<int>(set.size()) != n) return false;
  // Count, for each (x, y), the elements mapping x to y; all counts must be 1.
  std::vector<int> count(static_cast<size_t>(n) * n, 0);
  for (const auto& p : set)
    for (int x = 0; x < n; ++x)
      if (++count[static_cast<size_t>(x) * n + p(x)] > 1) return false;
  return true;  // n*n cells, n*n increments, none above 1: all exactly 1
}

}  // namespace bolkit
