#include "bolkit/builders.hpp"

#include <string>

#include "bolkit/error.hpp"

namespace bolkit {

Loop cyclic(int n) {
  if (n < 1) throw Error("cyclic: order must be positive");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = (i + j) % n;
  return from_table(rows, 0, "C" + std::to_string(n));
}

Loop direct_product(const Loop& l1, const Loop& l2) {
  const int n = l1.n * l2.n;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int a = 0; a < l1.n; ++a)
    for (int b = 0; b < l2.n; ++b)
      for (int c = 0; c < l1.n; ++c)
        for (int d = 0; d < l2.n; ++d)
          rows[a * l2.n + b][c * l2.n + d] = l1.mul(a, c) * l2.n + l2.mul(b, d);
  std::string name = (l1.name.empty() ? "?" : l1.name) + "x" + (l2.name.empty() ? "?" : l2.name);
  return from_table(rows, l1.unit * l2.n + l2.unit, name);
}

Loop dihedral(int k) {
  if (k < 1) throw Error("dihedral: need k >= 1");
  const int n = 2 * k;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  auto rot = [k](int i) { return ((i % k) + k) % k; };
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      rows[i][j] = rot(i + j);              // r^i r^j
      rows[i][k + j] = k + rot(j - i);      // r^i (s r^j) = s r^{j-i}
      rows[k + i][j] = k + rot(i + j);      // (s r^i) r^j
      rows[k + i][k + j] = rot(j - i);      // (s r^i)(s r^j) = r^{j-i}
    }
  return from_table(rows, 0, "D" + std::to_string(k));
}

Loop quaternion8() {
  // Elements: sign * 4 + axis, axis 0 = 1, 1 = i, 2 = j, 3 = k.
  std::vector<std::vector<int>> rows(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int s = (x / 4) ^ (y / 4);
      const int a = x % 4, b = y % 4;
      int axis;
      if (a == 0) axis = b;
      else if (b == 0) axis = a;
      else if (a == b) { axis = 0; s ^= 1; }       // i*i = -1
      else {
        axis = 6 - a - b;
        if (b != a % 3 + 1) s ^= 1;                // ji = -k etc.
      }
      rows[x][y] = s * 4 + axis;
    }
  return from_table(rows, 0, "Q8");
}

Loop symmetric3() {
  Loop l = dihedral(3);
  l.name = "S3";
  return l;
}

Loop elementary_abelian2(int k) {
  if (k < 0 || k > 20) throw Error("elementary_abelian2: bad exponent");
  const int n = 1 << k;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = i ^ j;
  std::string name = k == 1 ? "C2" : "C2^" + std::to_string(k);
  return from_table(rows, 0, name);
}

}  // namespace bolkit
