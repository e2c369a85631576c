#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bolkit {

// Permutation of {0..deg-1}. Composition is left-to-right throughout:
// (p * q)(x) = q(p(x)), i.e. p acts first.
struct Permutation {
  std::vector<int> img;

  Permutation() = default;
  explicit Permutation(std::vector<int> images) : img(std::move(images)) {}

  int degree() const { return static_cast<int>(img.size()); }
  int operator()(int x) const { return img[x]; }

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return img < o.img; }
};

Permutation identity_perm(int degree);
Permutation perm_mul(const Permutation& p, const Permutation& q);  // p then q
inline Permutation operator*(const Permutation& p, const Permutation& q) { return perm_mul(p, q); }
Permutation perm_inverse(const Permutation& p);
bool is_permutation(const std::vector<int>& img);
long long perm_order(const Permutation& p);

struct PermHash {
  size_t operator()(const Permutation& p) const {
    uint64_t h = 1469598103934665603ull;
    for (int v : p.img) {
      h ^= static_cast<uint64_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

// Group generated by a set of permutations of a common degree.
// The full element set is materialized eagerly at construction (BFS closure),
// so instances are immutable and safe to share between threads.
struct PermGroup {
  int deg = 0;
  std::vector<Permutation> gens;
  std::vector<Permutation> elems;  // sorted; closure of gens

  PermGroup() = default;
  PermGroup(int degree, std::vector<Permutation> generators, size_t closure_budget = 10'000'000);

  size_t order() const { return elems.size(); }
  bool contains(const Permutation& p) const;
};

std::vector<int> orbit(const PermGroup& g, int point);
std::vector<int> orbit_of_point(const std::vector<Permutation>& gens, int point);
PermGroup stabilizer(const PermGroup& g, int point);

// True iff for every ordered pair of points there is exactly one s in set
// with s(x) = y. Degree taken from the permutations; points = all of them.
bool is_sharply_transitive(const std::vector<Permutation>& set);

}  // namespace bolkit
