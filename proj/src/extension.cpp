#include "bolkit/extension.hpp"

#include "bolkit/error.hpp"

namespace bolkit {

TaggedElement ExtendedLoop::label(int i) const {
  if (i < 0 || i >= carrier.n) throw Error("label: element out of range");
  return i < base.n ? TaggedElement{Tag::t, i} : TaggedElement{Tag::v, i - base.n};
}

namespace {

void require_inverses(const Loop& l, const char* what) {
  for (int a = 0; a < l.n; ++a)
    if (!l.has_inverse(a))
      throw TwoSidedInverseMissing(std::string(what) + ": element " + std::to_string(a + 1) +
                                   " of " + (l.name.empty() ? "loop" : l.name) +
                                   " has no two-sided inverse");
}

}  // namespace

ExtendedLoop extend(const Loop& l) {
  require_inverses(l, "extend");
  const int n = l.n;
  std::vector<std::vector<int>> rows(2 * n, std::vector<int>(2 * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      rows[a][b] = l.mul(a, b);
      rows[a][n + b] = n + l.mul(a, b);
      rows[n + a][b] = n + l.mul(a, l.inv(b));
      rows[n + a][n + b] = l.mul(a, l.inv(b));
    }
  ExtendedLoop e{from_table(rows, l.unit, l.name.empty() ? "ext" : l.name + "_ext"), l};
  return e;
}

bool extension_is_right_bol_predicted(const Loop& l) {
  return check_identity(l, Identity::right_bol) && has_central_squares(l);
}

Loop extension_cocycle_form(const Loop& l) {
  require_inverses(l, "extension_cocycle_form");
  const int n = l.n;
  std::vector<std::vector<int>> rows(2 * n, std::vector<int>(2 * n));
  for (int d = 0; d < 2; ++d)
    for (int e = 0; e < 2; ++e)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          int rhs = d == 0 ? b : l.inv(b);  // b^mu, mu = (-1)^d
          rows[d * n + a][e * n + b] = ((d + e) % 2) * n + l.mul(a, rhs);
        }
  return from_table(rows, l.unit, l.name.empty() ? "ext" : l.name + "_ext");
}

ExtendedLoop chein_double(const Loop& g) {
  if (!check_identity(g, Identity::associative))
    throw NotAGroup("chein_double: " + (g.name.empty() ? "loop" : g.name) +
                    " is not associative");
  require_inverses(g, "chein_double");
  const int n = g.n;
  std::vector<std::vector<int>> rows(2 * n, std::vector<int>(2 * n));
  for (int d = 0; d < 2; ++d)
    for (int e = 0; e < 2; ++e)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          int lhs = e == 0 ? a : g.inv(a);            // a^nu, nu = (-1)^e
          int rhs = (d + e) % 2 == 0 ? b : g.inv(b);  // b^mu, mu = (-1)^(d+e)
          rows[d * n + a][e * n + b] = ((d + e) % 2) * n + g.mul(lhs, rhs);
        }
  std::string name = "M(" + (g.name.empty() ? "G" : g.name) + ",2)";
  ExtendedLoop ch{from_table(rows, g.unit, name), g};
  return ch;
}

Loop chein_double_tv_form(const Loop& g) {
  if (!check_identity(g, Identity::associative))
    throw NotAGroup("chein_double_tv_form: " + (g.name.empty() ? "loop" : g.name) +
                    " is not associative");
  require_inverses(g, "chein_double_tv_form");
  const int n = g.n;
  std::vector<std::vector<int>> rows(2 * n, std::vector<int>(2 * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      rows[a][b] = g.mul(a, b);
      rows[a][n + b] = n + g.mul(g.inv(a), g.inv(b));
      rows[n + a][b] = n + g.mul(a, g.inv(b));
      rows[n + a][n + b] = g.mul(g.inv(a), b);
    }
  std::string name = "M(" + (g.name.empty() ? "G" : g.name) + ",2)";
  return from_table(rows, g.unit, name);
}

IterationResult iterate_extension(const Loop& l, int steps) {
  IterationResult r;
  r.loops.push_back(l);
  for (int i = 0; i <= steps; ++i) {
    const Loop& cur = r.loops[i];
    if (!r.lost_at && !check_identity(cur, Identity::right_bol)) r.lost_at = i;
    if (i == steps) break;
    if (!cur.has_all_inverses()) break;
    r.loops.push_back(extend(cur).carrier);
  }
  return r;
}

MoufangReport moufang_equivalences_report(const Loop& l) {
  Loop ext = extend(l).carrier;
  MoufangReport rep;
  rep.ext_moufang = check_identity(ext, Identity::moufang);
  rep.ext_associative = check_identity(ext, Identity::associative);
  rep.base_abelian_group = check_identity(l, Identity::associative) &&
                           check_identity(l, Identity::commutative);
  return rep;
}

}  // namespace bolkit
