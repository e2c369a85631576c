#include "bolkit/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <deque>
#include <map>
#include <thread>

#include "bolkit/error.hpp"
#include "bolkit/iso.hpp"

namespace bolkit {
namespace {

struct TrailRec {
  int8_t op;  // 0 cell, 1 row bit, 2 column bit, 3 cycle length, 4 central, 5 complete, 6 active central
  int a, b;
};

struct Event {
  bool central;  // false: column a finished; true: finished column a is central
  int idx;
};

struct Search {
  int n;
  int min_len;
  bool cs;
  bool reverse;
  std::atomic<long long>* shared_nodes;
  long long node_budget;

  std::vector<std::vector<int>> col;  // col[y][x] = x*y; -1 undefined
  std::vector<uint32_t> row_used, col_used;
  std::vector<int> cyc_len, undef_count;
  std::vector<char> complete, central_req, central_active;
  std::vector<int> complete_list, central_list;
  std::deque<Event> events;
  std::vector<TrailRec> trail;
  long long nodes = 0;
  bool budget_hit = false;
  std::vector<std::vector<int>> found;  // row-major tables

  Search(const EnumOptions& opt, int branch_len, std::atomic<long long>* shared)
      : n(opt.order),
        min_len(branch_len),
        cs(opt.central_squares_only),
        reverse(opt.reverse_candidates),
        shared_nodes(shared),
        node_budget(opt.node_budget),
        col(n, std::vector<int>(n, -1)),
        row_used(n, 0),
        col_used(n, 0),
        cyc_len(n, -1),
        undef_count(n, n),
        complete(n, 0),
        central_req(n, 0),
        central_active(n, 0) {}

  void rollback(size_t mark) {
    while (trail.size() > mark) {
      const TrailRec& t = trail.back();
      switch (t.op) {
        case 0:
          col[t.a][t.b] = -1;
          ++undef_count[t.a];
          break;
        case 1: row_used[t.a] &= ~(1u << t.b); break;
        case 2: col_used[t.a] &= ~(1u << t.b); break;
        case 3: cyc_len[t.a] = t.b; break;
        case 4: central_req[t.a] = 0; break;
        case 5:
          complete[t.a] = 0;
          complete_list.pop_back();
          break;
        case 6:
          central_active[t.a] = 0;
          central_list.pop_back();
          break;
      }
      trail.pop_back();
    }
  }

  bool set_cell(int y, int x, int v) {
    if (row_used[x] >> v & 1) return false;
    if (col_used[y] >> v & 1) return false;
    if (cs && (central_req[x] || central_req[y]) && col[x][y] >= 0 && col[x][y] != v)
      return false;

    // A column is an injective partial map, so following defined successors
    // from v either reaches x (the new edge closes a cycle) or a dead end.
    int cur = v, len = 1;
    while (cur != x && col[y][cur] >= 0) {
      cur = col[y][cur];
      ++len;
    }
    if (cur == x) {
      if (n % len != 0) return false;
      if (len < min_len && y != 0) return false;
      if (cyc_len[y] >= 0 && cyc_len[y] != len) return false;
      if (cyc_len[y] < 0) {
        trail.push_back({3, y, cyc_len[y]});
        cyc_len[y] = len;
      }
    }

    col[y][x] = v;
    trail.push_back({0, y, x});
    row_used[x] |= 1u << v;
    trail.push_back({1, x, v});
    col_used[y] |= 1u << v;
    trail.push_back({2, y, v});
    if (--undef_count[y] == 0) {
      complete[y] = 1;
      complete_list.push_back(y);
      trail.push_back({5, y, 0});
      events.push_back({false, y});
    }

    if (cs) {
      if (x == y && !mark_central(v)) return false;
      if ((central_req[x] || central_req[y]) && col[x][y] < 0 && !set_cell(x, y, v))
        return false;
    }
    return true;
  }

  bool mark_central(int z) {
    if (central_req[z]) return true;
    central_req[z] = 1;
    trail.push_back({4, z, 0});
    for (int a = 0; a < n; ++a) {
      int za = col[a][z];  // z*a
      int az = col[z][a];  // a*z
      if (za >= 0 && az >= 0 && za != az) return false;
      if (za >= 0 && az < 0 && !set_cell(z, a, za)) return false;
      if (az >= 0 && za < 0 && !set_cell(a, z, az)) return false;
    }
    if (complete[z] && !central_active[z]) {
      central_active[z] = 1;
      central_list.push_back(z);
      trail.push_back({6, z, 0});
      events.push_back({true, z});
    }
    return true;
  }

  // Forces column w to be the finished permutation q.
  bool install(int w, const std::vector<int>& q) {
    if (complete[w]) return col[w] == q;
    for (int x = 0; x < n; ++x)
      if (col[w][x] >= 0 && col[w][x] != q[x]) return false;
    for (int x = 0; x < n; ++x)
      if (col[w][x] < 0 && !set_cell(w, x, q[x])) return false;
    return true;
  }

  // R_y R_z R_y = R_{(y z) y} for two finished columns.
  bool bol_force(int y, int z) {
    const std::vector<int>&cy = col[y], &cz = col[z];
    int w = cy[cz[y]];
    std::vector<int> q(n);
    for (int x = 0; x < n; ++x) q[x] = cy[cz[cy[x]]];
    return install(w, q);
  }

  // Finished central column z against finished column y:
  // R_{y z} = R_y R_z and R_{z y} = R_z R_y.
  bool central_force(int z, int y) {
    const std::vector<int>&cy = col[y], &cz = col[z];
    std::vector<int> q(n);
    for (int x = 0; x < n; ++x) q[x] = cz[cy[x]];
    if (!install(cz[y], q)) return false;
    for (int x = 0; x < n; ++x) q[x] = cy[cz[x]];
    return install(cy[z], q);
  }

  bool process_events() {
    while (!events.empty()) {
      Event ev = events.front();
      events.pop_front();
      if (!ev.central) {
        const int y = ev.idx;
        for (size_t i = 0; i < complete_list.size(); ++i) {
          int c = complete_list[i];
          if (!bol_force(y, c)) return false;
          if (c != y && !bol_force(c, y)) return false;
        }
        if (cs) {
          if (central_req[y] && !central_active[y]) {
            central_active[y] = 1;
            central_list.push_back(y);
            trail.push_back({6, y, 0});
            events.push_back({true, y});
          }
          for (size_t i = 0; i < central_list.size(); ++i)
            if (!central_force(central_list[i], y)) return false;
        }
      } else {
        const int z = ev.idx;
        for (size_t i = 0; i < complete_list.size(); ++i)
          if (!central_force(z, complete_list[i])) return false;
      }
    }
    return true;
  }

  bool setup() {
    for (int x = 0; x < n; ++x)
      if (!set_cell(0, x, x)) return false;
    for (int y = 1; y < n; ++y)  // 0 is a left unit
      if (col[y][0] < 0 && !set_cell(y, 0, y)) return false;
    if (!process_events()) return false;
    std::vector<int> q(n);
    for (int x = 0; x < n; ++x) {
      int b = x / min_len * min_len;
      q[x] = b + (x - b + 1) % min_len;
    }
    if (!install(1, q)) return false;
    return process_events();
  }

  // Most-filled incomplete column; -1 when the table is done.
  int pick_column() const {
    int y = -1, best = INT_MAX;
    for (int c = 0; c < n; ++c)
      if (!complete[c] && undef_count[c] < best) {
        best = undef_count[c];
        y = c;
      }
    return y;
  }

  void emit() {
    std::vector<int> tab(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) tab[x * n + y] = col[y][x];
    found.push_back(std::move(tab));
  }

  void dfs() {
    if (budget_hit) return;
    const int y = pick_column();
    if (y < 0) {
      emit();
      return;
    }
    int x = 0;
    while (col[y][x] >= 0) ++x;
    for (int step = 0; step < n; ++step) {
      const int v = reverse ? n - 1 - step : step;
      if (row_used[x] >> v & 1) continue;
      if (col_used[y] >> v & 1) continue;
      if (shared_nodes->fetch_add(1, std::memory_order_relaxed) >= node_budget) {
        budget_hit = true;
        return;
      }
      ++nodes;
      const size_t mark = trail.size();
      if (set_cell(y, x, v) && process_events()) dfs();
      events.clear();
      rollback(mark);
      if (budget_hit) return;
    }
  }
};

std::vector<int> divisors_from_two(int n) {
  std::vector<int> d;
  for (int k = 2; k <= n; ++k)
    if (n % k == 0) d.push_back(k);
  return d;
}

}  // namespace

EnumResult enumerate_right_bol(const EnumOptions& opt) {
  const int n = opt.order;
  if (n < 1 || n > 31) throw Error("enumerate_right_bol: order must be in 1..31");
  if (opt.node_budget < 1) throw Error("enumerate_right_bol: empty node budget");

  std::atomic<long long> shared{0};
  std::vector<std::vector<int>> tables;
  bool hit = false;

  if (n == 1) {
    tables.push_back({0});
  } else if (opt.jobs <= 1) {
    for (int len : divisors_from_two(n)) {
      Search s(opt, len, &shared);
      if (s.setup()) s.dfs();
      hit |= s.budget_hit;
      for (auto& t : s.found) tables.push_back(std::move(t));
    }
  } else {
    struct Task {
      int len, y, x, v;
    };
    std::vector<Task> tasks;
    for (int len : divisors_from_two(n)) {
      Search probe(opt, len, &shared);
      if (!probe.setup()) continue;
      const int y = probe.pick_column();
      if (y < 0) {
        probe.dfs();  // already finished; emits the single table
        hit |= probe.budget_hit;
        for (auto& t : probe.found) tables.push_back(std::move(t));
        continue;
      }
      int x = 0;
      while (probe.col[y][x] >= 0) ++x;
      for (int v = 0; v < n; ++v) {
        if (probe.row_used[x] >> v & 1) continue;
        if (probe.col_used[y] >> v & 1) continue;
        tasks.push_back({len, y, x, v});
      }
    }
    std::vector<std::vector<std::vector<int>>> results(tasks.size());
    std::vector<char> hits(tasks.size(), 0);
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        const size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        const Task& t = tasks[i];
        Search s(opt, t.len, &shared);
        if (s.setup() && s.set_cell(t.y, t.x, t.v) && s.process_events()) s.dfs();
        hits[i] = s.budget_hit;
        results[i] = std::move(s.found);
      }
    };
    std::vector<std::thread> pool;
    const size_t k = std::min<size_t>(opt.jobs, std::max<size_t>(tasks.size(), 1));
    pool.reserve(k);
    for (size_t i = 0; i < k; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (size_t i = 0; i < tasks.size(); ++i) {
      hit |= hits[i] != 0;
      for (auto& t : results[i]) tables.push_back(std::move(t));
    }
  }

  EnumResult res;
  res.nodes = shared.load();
  res.complete = !hit;

  std::map<std::vector<int>, int> seen;
  for (const auto& tab : tables) {
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) rows[x][y] = tab[x * n + y];
    Loop raw = from_table(rows, 0);
    if (!check_identity(raw, Identity::right_bol))
      throw Error("enumerate_right_bol: internal error: emitted table is not right Bol");
    if (opt.nonassociative_only && check_identity(raw, Identity::associative)) continue;
    if (opt.central_squares_only && !has_central_squares(raw)) continue;
    Loop canon = canonical_form(raw);
    if (seen.emplace(canon.tab, 1).second) res.loops.push_back(std::move(canon));
  }
  std::sort(res.loops.begin(), res.loops.end(),
            [](const Loop& a, const Loop& b) { return a.tab < b.tab; });
  for (size_t i = 0; i < res.loops.size(); ++i)
    res.loops[i].name = "rbol" + std::to_string(n) + "_" + std::to_string(i + 1);
  return res;
}

}  // namespace bolkit
