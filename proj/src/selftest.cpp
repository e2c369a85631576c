#include "bolkit/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "bolkit/builders.hpp"
#include "bolkit/catalog.hpp"
#include "bolkit/enumerate.hpp"
#include "bolkit/error.hpp"
#include "bolkit/extension.hpp"
#include "bolkit/loop.hpp"
#include "bolkit/nets.hpp"
#include "bolkit/perm.hpp"
#include "bolkit/quandle.hpp"

namespace bolkit {

const char* status_name(CriterionStatus s) {
  switch (s) {
    case CriterionStatus::pass: return "PASS";
    case CriterionStatus::fail: return "FAIL";
    case CriterionStatus::skip: return "SKIP";
    case CriterionStatus::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (r.status == CriterionStatus::fail) return false;
  return true;
}

namespace {

// Collects individual checks; the first failure message becomes the detail.
struct Tally {
  int checks = 0;
  int failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      if (first.empty()) first = what;
    }
  }

  CriterionResult result(const char* id, const char* title,
                         const std::string& extra = {}) const {
    CriterionResult r;
    r.id = id;
    r.title = title;
    std::ostringstream os;
    if (failures == 0) {
      r.status = CriterionStatus::pass;
      os << checks << " checks";
      if (!extra.empty()) os << "; " << extra;
    } else {
      r.status = CriterionStatus::fail;
      os << failures << " of " << checks << " checks failed; first: " << first;
    }
    r.detail = os.str();
    return r;
  }
};

// All fourteen groups of order at most 8, in order-then-library order.
std::vector<Loop> small_groups() {
  std::vector<Loop> gs;
  gs.push_back(cyclic(1));
  gs.push_back(cyclic(2));
  gs.push_back(cyclic(3));
  gs.push_back(cyclic(4));
  gs.push_back(elementary_abelian2(2));
  gs.push_back(cyclic(5));
  gs.push_back(cyclic(6));
  gs.push_back(symmetric3());
  gs.push_back(cyclic(7));
  gs.push_back(cyclic(8));
  gs.push_back(direct_product(cyclic(4), cyclic(2)));
  gs.push_back(elementary_abelian2(3));
  gs.push_back(dihedral(4));
  gs.push_back(quaternion8());
  return gs;
}

bool right_bol_with_central_squares(const Loop& l) {
  return check_identity(l, Identity::right_bol) && has_central_squares(l);
}

// {t_z : z in zs} with indices z, plus {v_z : z in zs} with indices n + z.
std::vector<int> both_halves(int n, const std::vector<int>& zs, bool t_half,
                             bool v_half) {
  std::vector<int> out;
  if (t_half)
    for (int z : zs) out.push_back(z);
  if (v_half)
    for (int z : zs) out.push_back(n + z);
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i] + 1;
  return os.str();
}

CriterionResult criterion1(const SelftestOptions& opt,
                           std::vector<Loop>& bol8_out) {
  auto t0 = std::chrono::steady_clock::now();
  EnumOptions eo;
  eo.order = 8;
  eo.nonassociative_only = true;
  eo.node_budget = opt.search_node_budget;
  eo.jobs = opt.jobs;
  EnumResult res = enumerate_right_bol(eo);
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();

  Tally t;
  t.expect(res.complete, "search hit the node budget");
  t.expect(res.loops.size() == 6, "expected 6 classes, found " +
                                      std::to_string(res.loops.size()));
  for (const auto& l : res.loops) {
    t.expect(check_identity(l, Identity::right_bol), l.name + ": not right Bol");
    t.expect(!check_identity(l, Identity::associative), l.name + ": associative");
    t.expect(has_central_squares(l), l.name + ": squares not all central");
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1fs", secs);
  t.expect(secs < 120.0, std::string("took ") + buf + " (limit 120s)");
  bol8_out = res.loops;
  return t.result("C1",
                  "order-8 search finds exactly the six nonassociative "
                  "classes, all with central squares, under two minutes",
                  buf);
}

CriterionResult criterion2(const std::vector<Loop>& corpus) {
  Tally t;
  for (const auto& l : corpus) {
    bool doubled_rb = check_identity(extend(l).carrier, Identity::right_bol);
    bool rb = check_identity(l, Identity::right_bol);
    bool via_squares = rb && has_central_squares(l);
    bool via_conjugacy = rb && check_identity(l, Identity::rcc) &&
                         check_identity(l, Identity::inverse_conjugacy);
    t.expect(doubled_rb == via_squares,
             l.name + ": double right Bol = " + std::to_string(doubled_rb) +
                 " but right Bol with central squares = " +
                 std::to_string(via_squares));
    t.expect(doubled_rb == via_conjugacy,
             l.name + ": double right Bol = " + std::to_string(doubled_rb) +
                 " but right Bol + rcc + inverse_conjugacy = " +
                 std::to_string(via_conjugacy));
  }
  return t.result("C2",
                  "doubling yields a right Bol loop exactly for right Bol "
                  "bases with central squares (= right Bol + rcc + "
                  "inverse-conjugacy bases)");
}

CriterionResult criterion3(const std::vector<Loop>& corpus) {
  Tally t;
  for (const auto& l : corpus) {
    MoufangReport rep = moufang_equivalences_report(l);
    std::ostringstream os;
    os << l.name << ": double Moufang = " << rep.ext_moufang
       << ", double associative = " << rep.ext_associative
       << ", base abelian group = " << rep.base_abelian_group;
    t.expect(rep.consistent(), os.str());
  }
  return t.result("C3",
                  "the double is Moufang iff it is associative iff the base "
                  "is an abelian group");
}

CriterionResult criterion4(const std::vector<Loop>& corpus) {
  Tally t;
  int applicable = 0;
  for (const auto& l : corpus) {
    if (!right_bol_with_central_squares(l)) continue;
    ++applicable;
    ExtendedLoop ext = extend(l);
    const int n = l.n;
    std::vector<int> zl = center(l);
    std::vector<int> nl = nucleus(l, Nucleus::left);
    std::vector<int> nrho = nucleus(ext.carrier, Nucleus::right);
    std::vector<int> nlam = nucleus(ext.carrier, Nucleus::left);
    std::vector<int> zext = center(ext.carrier);

    t.expect(nrho == both_halves(n, zl, true, true),
             l.name + ": right nucleus of the double is {" + join_ints(nrho) +
                 "}, not t/v over the base center {" + join_ints(zl) + "}");

    std::vector<int> lam_t, lam_v;
    for (int x : nlam) (x < n ? lam_t : lam_v).push_back(x);
    t.expect(lam_t == nl,
             l.name + ": transversal part of the double's left nucleus is {" +
                 join_ints(lam_t) + "}, base left nucleus is {" +
                 join_ints(nl) + "}");

    // v_m sits in the left nucleus of the double exactly when
    // m = ((m a) b)(a^-1 b^-1) for all a, b.
    std::vector<int> lam_v_expected;
    for (int m = 0; m < n; ++m) {
      bool member = true;
      for (int a = 0; a < n && member; ++a)
        for (int b = 0; b < n && member; ++b)
          member = m == mul(l, mul(l, mul(l, m, a), b),
                            mul(l, inverse(l, a), inverse(l, b)));
      if (member) lam_v_expected.push_back(n + m);
    }
    t.expect(lam_v == lam_v_expected,
             l.name + ": flipped part of the double's left nucleus is {" +
                 join_ints(lam_v) + "}, membership identity gives {" +
                 join_ints(lam_v_expected) + "}");

    bool group = check_identity(l, Identity::associative);
    bool abelian = group && check_identity(l, Identity::commutative);
    bool aip = check_identity(l, Identity::aip);
    if (group && !abelian) {
      std::vector<int> transversal(n);
      std::iota(transversal.begin(), transversal.end(), 0);
      t.expect(nlam == transversal,
               l.name + ": non-abelian group base, left nucleus of the "
                        "double should be the whole transversal half, got {" +
                   join_ints(nlam) + "}");
    }
    if (aip) {
      t.expect(nlam == both_halves(n, nl, true, true),
               l.name + ": inverses distribute over products in the base, "
                        "left nucleus of the double should be t/v over the "
                        "base left nucleus, got {" +
                   join_ints(nlam) + "}");
    } else {
      for (int x : lam_v)
        t.expect(std::find(nl.begin(), nl.end(), x - n) == nl.end(),
                 l.name + ": base is not AIP yet v_" + std::to_string(x - n + 1) +
                     " is left-nuclear in the double with " +
                     std::to_string(x - n + 1) + " left-nuclear in the base");
    }

    if (exponent(l) <= 2) {
      // every base element squares to the unit
      t.expect(zext == both_halves(n, zl, true, true),
               l.name + ": center of the double is {" + join_ints(zext) +
                   "}, expected t/v over the base center");
    } else {
      std::vector<int> square_roots_of_unit;
      for (int z : zl)
        if (mul(l, z, z) == l.unit) square_roots_of_unit.push_back(z);
      t.expect(zext == square_roots_of_unit,
               l.name + ": center of the double is {" + join_ints(zext) +
                   "}, expected the involutions of the base center {" +
                   join_ints(square_roots_of_unit) + "} on the transversal "
                   "half only");
    }
  }
  return t.result("C4",
                  "nuclei and center of the double match the closed-form "
                  "descriptions on every central-squares base",
                  std::to_string(applicable) + " loops in scope");
}

CriterionResult criterion5(const std::vector<Loop>& bol8) {
  std::vector<Loop> scope;
  scope.push_back(cyclic(2));
  scope.push_back(cyclic(4));
  scope.push_back(cyclic(8));
  scope.push_back(quaternion8());
  scope.push_back(elementary_abelian2(2));
  scope.push_back(elementary_abelian2(3));
  scope.push_back(elementary_abelian2(4));
  for (const auto& l : bol8) scope.push_back(l);

  Tally t;
  for (const auto& l : scope) {
    bool doubled_cs = has_central_squares(extend(l).carrier);
    bool exp_divides_4 = 4 % exponent(l) == 0;
    t.expect(doubled_cs == exp_divides_4,
             l.name + ": double has central squares = " +
                 std::to_string(doubled_cs) + ", exponent " +
                 std::to_string(exponent(l)) + " divides 4 = " +
                 std::to_string(exp_divides_4));
  }
  return t.result("C5",
                  "the double has central squares exactly when the base "
                  "exponent divides 4");
}

CriterionResult criterion6(const std::vector<Loop>& corpus) {
  Tally t;
  int applicable = 0;
  for (const auto& l : corpus) {
    if (!right_bol_with_central_squares(l)) continue;
    ++applicable;
    std::vector<Permutation> maps = sigma_line_maps(l);
    t.expect(static_cast<int>(maps.size()) == 2 * l.n,
             l.name + ": expected " + std::to_string(2 * l.n) +
                 " line maps, got " + std::to_string(maps.size()));
    bool sharp = is_sharply_transitive(maps);
    t.expect(sharp, l.name + ": reflection line maps are not sharply "
                             "transitive on the 2n lines");
    if (!sharp) continue;
    Loop lam = lambda_loop(maps, l.unit);
    t.expect(lam.tab == extend(l).carrier.tab && lam.unit == extend(l).carrier.unit,
             l.name + ": loop of the sharply transitive line maps differs "
                      "from the double");
  }
  return t.result("C6",
                  "reflection line maps act sharply transitively and "
                  "reconstruct the double",
                  std::to_string(applicable) + " loops in scope");
}

CriterionResult criterion7(const std::vector<Loop>& corpus) {
  Tally t;
  int applicable = 0;
  for (const auto& l : corpus) {
    if (!right_bol_with_central_squares(l)) continue;
    ++applicable;
    CoreDecomposition d = core_decomposition_check(extend(l));
    std::ostringstream os;
    os << l.name << ": t_closed=" << d.t_closed << " v_closed=" << d.v_closed
       << " t_copy=" << d.t_equals_base_core << " v_copy=" << d.v_equals_base_core
       << " mixed_tv=" << d.mixed_tv << " mixed_vt=" << d.mixed_vt;
    t.expect(d.all(), os.str());
  }
  return t.result("C7",
                  "the core of the double splits into two copies of the base "
                  "core with twisted mixed products",
                  std::to_string(applicable) + " loops in scope");
}

CriterionResult criterion8(const std::vector<Loop>& corpus) {
  Tally t;
  for (const auto& l : corpus) {
    Quandle q = core(l);
    int rank = abelianized_rank2(rstr_presentation(q));
    int orbits = orbit_count(q);
    t.expect(rank == orbits,
             l.name + ": mod-2 abelianized rank " + std::to_string(rank) +
                 " != core orbit count " + std::to_string(orbits));
  }
  return t.result("C8",
                  "the reflection group of the core abelianizes mod 2 to "
                  "rank = number of core orbits");
}

CriterionResult criterion9(const SelftestOptions& opt) {
  Tally t;

  std::vector<Loop> exp2;
  exp2.push_back(cyclic(2));
  exp2.push_back(elementary_abelian2(2));
  exp2.push_back(elementary_abelian2(3));
  for (const auto& l : exp2) {
    Quandle q = core(l);
    RstrResult base = rstr_order(q, opt.max_cosets);
    RstrResult prod = rstr_order(core(direct_product(l, cyclic(2))), opt.max_cosets);
    t.expect(base.complete, l.name + ": coset enumeration hit the budget");
    t.expect(prod.complete, l.name + " x C2: coset enumeration hit the budget");
    if (base.complete && prod.complete) {
      long long expected = base.order << orbit_count(q);
      t.expect(prod.order == expected,
               l.name + ": reflection group of the product core has order " +
                   std::to_string(prod.order) + ", expected " +
                   std::to_string(expected));
    }
  }

  std::vector<Loop> abelian;
  abelian.push_back(cyclic(2));
  abelian.push_back(cyclic(3));
  abelian.push_back(cyclic(4));
  abelian.push_back(elementary_abelian2(2));
  for (const auto& l : abelian) {
    RstrResult base = rstr_order(core(l), opt.max_cosets);
    RstrResult dbl = rstr_order(core(extend(l).carrier), opt.max_cosets);
    t.expect(base.complete, l.name + ": coset enumeration hit the budget");
    t.expect(dbl.complete, l.name + " double: coset enumeration hit the budget");
    if (base.complete && dbl.complete) {
      t.expect(dbl.order == base.order * base.order,
               l.name + ": reflection group of the double's core has order " +
                   std::to_string(dbl.order) + ", expected " +
                   std::to_string(base.order * base.order));
    }
  }

  return t.result("C9",
                  "reflection group orders: direct product with C2 "
                  "multiplies by 2^orbits; doubling an abelian group "
                  "squares it");
}

CriterionResult criterion10(const std::vector<Loop>& groups,
                            const std::vector<Loop>& corpus) {
  Tally t;
  ExtendedLoop m12 = chein_double(symmetric3());
  t.expect(m12.carrier.n == 12,
           "doubled S3 has order " + std::to_string(m12.carrier.n));
  t.expect(check_identity(m12.carrier, Identity::moufang),
           "doubled S3 is not Moufang");
  t.expect(!check_identity(m12.carrier, Identity::associative),
           "doubled S3 is associative");
  for (const auto& g : groups)
    t.expect(chein_double_tv_form(g).tab == chein_double(g).carrier.tab,
             g.name + ": tagged form of the group double differs from the "
                      "signed-exponent form");
  for (const auto& l : corpus)
    t.expect(extension_cocycle_form(l).tab == extend(l).carrier.tab,
             l.name + ": cocycle form of the double differs from the tagged "
                      "form");
  return t.result("C10",
                  "group doubling builds M(S3,2) and both doubling "
                  "constructions agree with their reformulations cell by "
                  "cell");
}

CriterionResult criterion11(const SelftestOptions& opt) {
  if (opt.order16_catalog_path.empty()) {
    return {"C11",
            "order-16 census counts and flipped-nucleus histogram",
            CriterionStatus::skip,
            "no catalog file; set BOLKIT_ORDER16_CATALOG or pass --catalog"};
  }
  std::vector<Loop> cat;
  try {
    cat = read_loops_file(opt.order16_catalog_path);
  } catch (const Error& e) {
    return {"C11", "order-16 census counts and flipped-nucleus histogram",
            CriterionStatus::fail, e.what()};
  }

  Tally t;
  t.expect(cat.size() == 2038,
           "expected 2038 loops, read " + std::to_string(cat.size()));
  int central = 0;
  int population = 0;
  for (const auto& l : cat) {
    if (l.n != 16 || !check_identity(l, Identity::right_bol) ||
        check_identity(l, Identity::associative)) {
      t.expect(false, l.name + ": not a proper right Bol loop of order 16");
      continue;
    }
    bool cs = has_central_squares(l);
    central += cs;
    population += cs && !check_identity(l, Identity::aip);
  }
  t.expect(central == 1940, "loops with central squares: " +
                                std::to_string(central) + ", expected 1940");
  t.expect(population == 1773,
           "central-squares loops that are neither associative nor AIP: " +
               std::to_string(population) + ", expected 1773");

  std::map<int, int> hist = nu_histogram(cat);
  std::map<int, int> expected{{0, 1145}, {2, 454}, {4, 160}, {8, 14}};
  if (hist != expected) {
    std::ostringstream os;
    os << "flipped-nucleus histogram {";
    for (auto [k, v] : hist) os << " " << k << ":" << v;
    os << " }, expected { 0:1145 2:454 4:160 8:14 }";
    t.expect(false, os.str());
  } else {
    t.expect(true, "");
  }

  if (cat.size() >= 181) {
    const Loop& spot = cat[180];
    int nu = -1;
    try {
      nu = nu_value(spot);
    } catch (const Error& e) {
      t.expect(false, std::string("loop 181: ") + e.what());
    }
    t.expect(nu == 8, "loop 181: flipped nucleus count " + std::to_string(nu) +
                          ", expected 8");
    std::vector<int> nl = nucleus(spot, Nucleus::left);
    std::vector<int> expected_nl{0, 2, 3, 6, 8, 10, 11, 14};
    t.expect(nl == expected_nl, "loop 181: left nucleus {" + join_ints(nl) +
                                    "}, expected {1 3 4 7 9 11 12 15}");
  }
  return t.result("C11", "order-16 census counts and flipped-nucleus histogram",
                  std::to_string(cat.size()) + " loops read");
}

CriterionResult criterion12(const SelftestOptions& opt) {
  const char* title = "orders 12 and 15 admit no nonassociative right Bol "
                      "loop with central squares";
  if (!opt.run_stretch)
    return {"C12", title, CriterionStatus::skip, "stretch search disabled"};

  Tally t;
  bool budget_hit = false;
  std::string budget_note;
  for (int n : {12, 15}) {
    EnumOptions eo;
    eo.order = n;
    eo.nonassociative_only = true;
    eo.central_squares_only = true;
    eo.node_budget = opt.search_node_budget;
    eo.jobs = opt.jobs;
    EnumResult res = enumerate_right_bol(eo);
    if (!res.complete) {
      budget_hit = true;
      budget_note = "order " + std::to_string(n) + " search hit the node "
                    "budget after " + std::to_string(res.nodes) + " nodes";
      continue;
    }
    t.expect(res.loops.empty(),
             "order " + std::to_string(n) + ": found " +
                 std::to_string(res.loops.size()) + " loops, expected none");
  }
  if (t.failures == 0 && budget_hit)
    return {"C12", title, CriterionStatus::inconclusive, budget_note};
  return t.result("C12", title);
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const SelftestOptions& opt) {
  std::vector<CriterionResult> out;

  std::vector<Loop> bol8;
  out.push_back(criterion1(opt, bol8));

  std::vector<Loop> groups = small_groups();
  std::vector<Loop> corpus = groups;
  for (const auto& l : bol8) corpus.push_back(l);
  corpus.push_back(elementary_abelian2(4));

  out.push_back(criterion2(corpus));
  out.push_back(criterion3(corpus));
  out.push_back(criterion4(corpus));
  out.push_back(criterion5(bol8));
  out.push_back(criterion6(corpus));
  out.push_back(criterion7(corpus));
  out.push_back(criterion8(corpus));
  out.push_back(criterion9(opt));
  out.push_back(criterion10(groups, corpus));
  out.push_back(criterion11(opt));
  out.push_back(criterion12(opt));
  return out;
}

}  // namespace bolkit
