#include "bolkit/nets.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bolkit/error.hpp"

namespace bolkit {

int point_index(const Loop& l, int x, int y) { return x * l.n + y; }

std::vector<int> line_points(const Loop& l, Pencil p, int label) {
  const int n = l.n;
  if (label < 0 || label >= n) throw Error("line_points: label out of range");
  std::vector<int> pts;
  pts.reserve(n);
  switch (p) {
    case Pencil::horizontal:
      for (int x = 0; x < n; ++x) pts.push_back(point_index(l, x, label));
      break;
    case Pencil::vertical:
      for (int y = 0; y < n; ++y) pts.push_back(point_index(l, label, y));
      break;
    case Pencil::transversal:
      for (int x = 0; x < n; ++x) pts.push_back(point_index(l, x, l.rd(label, x)));
      break;
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

namespace {

std::vector<std::vector<int>> all_lines(const Loop& l) {
  std::vector<std::vector<int>> lines;
  lines.reserve(3 * l.n);
  for (Pencil p : {Pencil::transversal, Pencil::vertical, Pencil::horizontal})
    for (int a = 0; a < l.n; ++a) lines.push_back(line_points(l, p, a));
  return lines;
}

}  // namespace

bool is_collineation(const Loop& l, const Permutation& point_map) {
  if (point_map.degree() != l.n * l.n) throw Error("is_collineation: degree mismatch");
  auto lines = all_lines(l);
  std::set<std::vector<int>> line_set(lines.begin(), lines.end());
  for (const auto& line : lines) {
    std::vector<int> image;
    image.reserve(line.size());
    for (int p : line) image.push_back(point_map(p));
    std::sort(image.begin(), image.end());
    if (!line_set.count(image)) return false;
  }
  return true;
}

std::pair<int, int> reflection_image(const Loop& l, int d, int a, int b) {
  int a2 = l.rd(l.mul(a, b), d);
  int b2 = l.ld(a2, l.mul(a, d));
  return {a2, b2};
}

Permutation bol_reflection(const Loop& l, int d) {
  const int n = l.n;
  std::vector<int> img(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto [a2, b2] = reflection_image(l, d, a, b);
      img[point_index(l, a, b)] = point_index(l, a2, b2);
    }
  return Permutation(img);
}

Permutation transversal_vertical_action(const Loop& l, int d) {
  const int n = l.n;
  std::vector<int> img(2 * n);
  for (int c = 0; c < n; ++c) img[c] = n + l.rd(c, d);
  for (int a = 0; a < n; ++a) img[n + a] = l.mul(a, d);
  return Permutation(img);
}

Permutation line_action(const Loop& l, const Permutation& point_map) {
  const int n = l.n;
  if (point_map.degree() != n * n) throw Error("line_action: degree mismatch");
  std::map<std::vector<int>, int> index_of;
  for (int c = 0; c < n; ++c) index_of[line_points(l, Pencil::transversal, c)] = c;
  for (int a = 0; a < n; ++a) index_of[line_points(l, Pencil::vertical, a)] = n + a;
  std::vector<int> img(2 * n);
  for (const auto& [pts, idx] : index_of) {
    std::vector<int> image;
    image.reserve(pts.size());
    for (int p : pts) image.push_back(point_map(p));
    std::sort(image.begin(), image.end());
    auto it = index_of.find(image);
    if (it == index_of.end())
      throw NotALineMap("line_action: image of line " + std::to_string(idx) +
                        " is not a transversal or vertical line");
    img[idx] = it->second;
  }
  if (!is_permutation(img)) throw NotALineMap("line_action: induced map is not a bijection");
  return Permutation(img);
}

std::vector<Permutation> sigma_line_maps(const Loop& l) {
  std::vector<Permutation> sigma;
  sigma.reserve(2 * l.n);
  Permutation a_unit = transversal_vertical_action(l, l.unit);
  for (int d = 0; d < l.n; ++d) sigma.push_back(transversal_vertical_action(l, d));
  for (int d = 0; d < l.n; ++d) sigma.push_back(a_unit * sigma[d]);
  return sigma;
}

PermGroup gamma_group(const Loop& l) {
  std::vector<Permutation> gens;
  gens.reserve(l.n);
  for (int d = 0; d < l.n; ++d) gens.push_back(transversal_vertical_action(l, d));
  return PermGroup(2 * l.n, gens);
}

FolderCheck check_folder(const LoopFolder& f, long long budget) {
  FolderCheck r;
  auto fail = [&r](std::string why) {
    r.ok = false;
    r.detail = std::move(why);
    return r;
  };
  const auto& g = f.group;
  if (f.subgroup.empty()) return fail("subgroup is empty");
  std::vector<Permutation> h = f.subgroup;
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  auto in_h = [&h](const Permutation& p) {
    return std::binary_search(h.begin(), h.end(), p);
  };
  if (!in_h(identity_perm(g.deg))) return fail("subgroup misses the identity");
  for (const auto& p : h) {
    if (!g.contains(p)) return fail("subgroup member outside the group");
    if (!in_h(perm_inverse(p))) return fail("subgroup not closed under inversion");
  }
  for (const auto& p : h)
    for (const auto& q : h)
      if (!in_h(p * q)) return fail("subgroup not closed under products");

  bool has_id = false;
  for (const auto& k : f.section) {
    if (!g.contains(k)) return fail("section member outside the group");
    if (k == identity_perm(g.deg)) has_id = true;
  }
  if (!has_id) return fail("section misses the identity");
  if (f.section.size() * h.size() != g.order())
    return fail("section size is not the subgroup index");

  long long spent = 0;
  for (size_t i = 0; i < f.section.size(); ++i)
    for (size_t j = 0; j < f.section.size(); ++j) {
      if (i == j) continue;
      Permutation d = f.section[i] * perm_inverse(f.section[j]);
      for (const auto& c : g.elems) {
        if (++spent > budget) {
          r.complete = false;
          return r;
        }
        if (in_h(perm_inverse(c) * d * c))
          return fail("section members " + std::to_string(i) + " and " + std::to_string(j) +
                      " land in one coset of a conjugate of the subgroup");
      }
    }
  return r;
}

LoopFolder envelope(const Loop& l) {
  PermGroup g = right_multiplication_group(l);
  PermGroup st = stabilizer(g, l.unit);
  std::vector<Permutation> section;
  section.reserve(l.n);
  for (int x = 0; x < l.n; ++x) section.push_back(l.right_translation(x));
  return LoopFolder{std::move(g), st.elems, std::move(section)};
}

Loop loop_of_folder(const LoopFolder& f) {
  if (f.subgroup.empty()) throw NotAFolder("empty subgroup");
  // Key each right coset Hg by its least member.
  auto coset_key = [&f](const Permutation& g) {
    Permutation best = f.subgroup.front() * g;
    for (const auto& h : f.subgroup) {
      Permutation c = h * g;
      if (c < best) best = c;
    }
    return best;
  };
  std::map<Permutation, int> coset_id;
  for (const auto& g : f.group.elems) coset_id.emplace(coset_key(g), 0);
  int next = 0;
  for (auto& [key, id] : coset_id) id = next++;
  const int m = next;

  std::vector<const Permutation*> rep(m, nullptr);
  for (const auto& k : f.section) {
    auto it = coset_id.find(coset_key(k));
    if (it == coset_id.end()) throw NotAFolder("section member outside the group");
    if (rep[it->second]) throw NotAFolder("two section members share one coset");
    rep[it->second] = &k;
  }
  for (int i = 0; i < m; ++i)
    if (!rep[i]) throw NotAFolder("some coset has no section member");

  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      rows[i][j] = coset_id.at(coset_key(*rep[i] * *rep[j]));
  try {
    return from_table(rows, coset_id.at(coset_key(identity_perm(f.group.deg))), "folder");
  } catch (const NotLatin& e) {
    throw NotAFolder(std::string("coset products do not form a loop: ") + e.what());
  }
}

bool is_bol_folder(const LoopFolder& f) {
  std::vector<Permutation> k = f.section;
  std::sort(k.begin(), k.end());
  auto in_k = [&k](const Permutation& p) {
    return std::binary_search(k.begin(), k.end(), p);
  };
  for (const auto& a : k) {
    if (!in_k(perm_inverse(a))) return false;
    for (const auto& b : k)
      if (!in_k(a * b * a)) return false;
  }
  return true;
}

Loop lambda_loop(const std::vector<Permutation>& s, int e) {
  if (s.empty()) throw NotSharplyTransitive("lambda_loop: empty set");
  const int deg = s.front().degree();
  for (const auto& p : s)
    if (p.degree() != deg) throw Error("lambda_loop: mixed degrees");
  if (e < 0 || e >= deg) throw Error("lambda_loop: base point out of range");
  std::vector<int> pts = orbit_of_point(s, e);  // sorted
  const int m = static_cast<int>(pts.size());
  std::vector<int> pos(deg, -1);
  for (int i = 0; i < m; ++i) pos[pts[i]] = i;

  if (static_cast<int>(s.size()) != m)
    throw NotSharplyTransitive("lambda_loop: set size differs from orbit size");
  // exactly one map per (from, to) pair of orbit points
  std::vector<int> seen(static_cast<size_t>(m) * m, 0);
  for (const auto& p : s)
    for (int i = 0; i < m; ++i) {
      int to = pos[p(pts[i])];
      if (to < 0 || seen[i * m + to]++)
        throw NotSharplyTransitive("lambda_loop: set is not sharply transitive on the orbit");
    }

  std::vector<const Permutation*> to_target(m, nullptr);  // s with e^s = pts[i]
  for (const auto& p : s) to_target[pos[p(e)]] = &p;
  for (int y = 0; y < m; ++y) {
    const Permutation& py = *to_target[y];
    if (pts[y] == e)
      for (int x = 0; x < m; ++x)
        if (py(pts[x]) != pts[x])
          throw NotAFolder("lambda_loop: the map fixing the base point moves another orbit point");
  }

  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) rows[x][y] = pos[(*to_target[y])(pts[x])];
  return from_table(rows, pos[e], "lambda");
}

}  // namespace bolkit
