#include <array>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bolkit/builders.hpp"
#include "bolkit/catalog.hpp"
#include "bolkit/enumerate.hpp"
#include "bolkit/error.hpp"
#include "bolkit/extension.hpp"
#include "bolkit/loop.hpp"
#include "bolkit/nets.hpp"
#include "bolkit/perm.hpp"
#include "bolkit/quandle.hpp"
#include "bolkit/selftest.hpp"

namespace {

using namespace bolkit;

constexpr int kExitOk = 0;
constexpr int kExitPartial = 1;
constexpr int kExitUsage = 2;

std::optional<long long> env_budget() {
  const char* s = std::getenv("BOLKIT_BUDGET");
  if (!s || !*s) return std::nullopt;
  char* end = nullptr;
  long long v = std::strtoll(s, &end, 10);
  if (end == s || *end != '\0' || v <= 0) return std::nullopt;
  return v;
}

const char* yn(bool b) { return b ? "yes" : "no"; }

std::string witness_string(const std::array<int, 3>& w) {
  std::string out = "(";
  for (int i = 0; i < 3; ++i) {
    if (i) out += ", ";
    out += w[i] < 0 ? std::string("-") : std::to_string(w[i] + 1);
  }
  return out + ")";
}

int run_check(const std::string& path, const std::string& name) {
  std::optional<Identity> id = identity_from_name(name);
  if (!id) {
    std::cerr << "error: unknown identity '" << name << "'; valid names:";
    for (Identity i : {Identity::right_bol, Identity::moufang,
                       Identity::associative, Identity::commutative,
                       Identity::aip, Identity::rcc,
                       Identity::left_inverse_cancel,
                       Identity::bol_inverse_antihom,
                       Identity::inverse_conjugacy})
      std::cerr << " " << identity_name(i);
    std::cerr << "\n";
    return kExitUsage;
  }
  for (const Loop& l : read_loops_file(path)) {
    std::array<int, 3> w{-1, -1, -1};
    bool ok = check_identity(l, *id, &w);
    std::cout << l.name << ": " << name << " " << (ok ? "holds" : "fails");
    if (!ok) std::cout << " at " << witness_string(w);
    std::cout << "\n";
  }
  return kExitOk;
}

void print_record(const CatalogRecord& r) {
  std::cout << r.name << ": order " << r.order << "\n"
            << "  right_bol=" << yn(r.right_bol) << " moufang=" << yn(r.moufang)
            << " associative=" << yn(r.associative)
            << " commutative=" << yn(r.commutative) << " aip=" << yn(r.aip)
            << "\n"
            << "  central squares: " << yn(r.central_squares)
            << "   power associative: " << yn(r.power_associative)
            << "   exponent: "
            << (r.exponent ? std::to_string(*r.exponent) : "-") << "\n"
            << "  nucleus sizes left/middle/right: " << r.nuc_left << "/"
            << r.nuc_middle << "/" << r.nuc_right
            << "   commutant: " << r.commutant_size
            << "   center: " << r.center_size << "\n"
            << "  core orbits: "
            << (r.core_orbits ? std::to_string(*r.core_orbits) : "-")
            << "   flipped-nucleus count: "
            << (r.nu ? std::to_string(*r.nu) : "-") << "\n";
}

int run_analyze(const std::string& path, const std::string& tsv) {
  std::vector<CatalogRecord> records;
  for (const Loop& l : read_loops_file(path)) records.push_back(analyze(l));
  for (size_t i = 0; i < records.size(); ++i) {
    if (i) std::cout << "\n";
    print_record(records[i]);
  }
  if (!tsv.empty()) {
    std::ofstream out(tsv);
    if (!out) throw Error("cannot write " + tsv);
    write_tsv(out, records);
    std::cout << "\nwrote " << records.size() << " records to " << tsv << "\n";
  }
  return kExitOk;
}

int run_extend(const std::string& path, const std::string& out_path,
               int steps) {
  std::vector<Loop> results;
  std::ostream& note = out_path.empty() ? std::cerr : std::cout;
  for (const Loop& l : read_loops_file(path)) {
    IterationResult it = iterate_extension(l, steps);
    int done = static_cast<int>(it.loops.size()) - 1;
    if (done < steps)
      note << l.name << ": stopped after " << done << " of " << steps
           << " steps (element without a two-sided inverse)\n";
    const Loop& last = it.loops.back();
    note << l.name << " -> " << last.name << ": order " << last.n
         << ", right Bol: "
         << yn(check_identity(last, Identity::right_bol));
    if (it.lost_at) note << " (right Bol lost at iterate " << *it.lost_at << ")";
    note << "\n";
    results.push_back(last);
  }
  if (out_path.empty()) {
    write_loops(std::cout, results);
  } else {
    write_loops_file(out_path, results);
    note << "wrote " << results.size() << " loops to " << out_path << "\n";
  }
  return kExitOk;
}

int run_chein(const std::string& path, const std::string& out_path) {
  std::vector<Loop> results;
  for (const Loop& l : read_loops_file(path)) {
    Loop d = chein_double(l).carrier;
    std::cout << l.name << " -> " << d.name << ": order " << d.n
              << ", moufang: " << yn(check_identity(d, Identity::moufang))
              << ", associative: "
              << yn(check_identity(d, Identity::associative)) << "\n";
    results.push_back(d);
  }
  write_loops_file(out_path, results);
  std::cout << "wrote " << results.size() << " loops to " << out_path << "\n";
  return kExitOk;
}

void write_quandle_block(std::ostream& out, const Quandle& q) {
  out << "quandle " << q.name << "\norder " << q.n << "\n";
  for (int x = 0; x < q.n; ++x) {
    for (int y = 0; y < q.n; ++y) out << (y ? " " : "") << q.at(x, y) + 1;
    out << "\n";
  }
  out << "\n";
}

int run_core(const std::string& path, const std::string& out_path) {
  std::vector<Quandle> cores;
  std::ostream& note = out_path.empty() ? std::cerr : std::cout;
  for (const Loop& l : read_loops_file(path)) {
    Quandle q = core(l);
    note << q.name << ": order " << q.n << ", involutory quandle: "
         << yn(is_quandle(q) && is_involutory(q))
         << ", orbits: " << orbit_count(q)
         << ", connected: " << yn(is_connected(q)) << "\n";
    cores.push_back(std::move(q));
  }
  if (out_path.empty()) {
    for (const Quandle& q : cores) write_quandle_block(std::cout, q);
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write " + out_path);
    for (const Quandle& q : cores) write_quandle_block(out, q);
    note << "wrote " << cores.size() << " quandles to " << out_path << "\n";
  }
  return kExitOk;
}

int run_rstr(const std::string& path, size_t max_cosets) {
  int rc = kExitOk;
  for (const Loop& l : read_loops_file(path)) {
    Quandle q = core(l);
    RstrResult r = rstr_order(q, max_cosets);
    if (r.complete) {
      std::cout << "rstr(" << q.name << "): order " << r.order << " ("
                << r.cosets_defined << " cosets defined)\n";
    } else {
      std::cout << "rstr(" << q.name << "): partial, coset budget "
                << max_cosets << " exhausted after " << r.cosets_defined
                << " definitions\n";
      rc = kExitPartial;
    }
  }
  return rc;
}

void print_line_map(const std::string& label, const Permutation& p) {
  std::cout << "  " << label << ":";
  for (int x = 0; x < p.degree(); ++x) std::cout << " " << p(x) + 1;
  std::cout << "\n";
}

int run_net(const std::string& path, bool reflections, bool sigma,
            bool gamma) {
  int rc = kExitOk;
  for (const Loop& l : read_loops_file(path)) {
    try {
      if (reflections) {
        int involutions = 0;
        int collineations = 0;
        for (int d = 0; d < l.n; ++d) {
          Permutation s = bol_reflection(l, d);
          involutions += perm_mul(s, s) == identity_perm(l.n * l.n);
          collineations += is_collineation(l, s);
        }
        std::cout << l.name << ": " << l.n << " reflections, " << involutions
                  << " involutions, " << collineations
                  << " collineations (right Bol: "
                  << yn(check_identity(l, Identity::right_bol)) << ")\n";
      } else if (sigma) {
        std::vector<Permutation> maps = sigma_line_maps(l);
        std::cout << l.name << ": " << maps.size()
                  << " line maps on t1..t" << l.n << ",v1..v" << l.n
                  << ", sharply transitive: "
                  << yn(is_sharply_transitive(maps)) << "\n";
        for (int d = 0; d < l.n; ++d)
          print_line_map("sigma_" + std::to_string(d + 1), maps[d]);
        for (int d = 0; d < l.n; ++d)
          print_line_map("sigma_1*sigma_" + std::to_string(d + 1),
                         maps[l.n + d]);
      } else if (gamma) {
        std::cout << l.name << ": |Gamma| = " << gamma_group(l).order()
                  << "\n";
      }
    } catch (const Error& e) {
      std::cout << l.name << ": " << e.what() << "\n";
      rc = kExitUsage;
    }
  }
  return rc;
}

int run_enumerate(int order, bool nonassoc, bool central, int jobs,
                  const std::string& out_path) {
  EnumOptions eo;
  eo.order = order;
  eo.nonassociative_only = nonassoc;
  eo.central_squares_only = central;
  eo.jobs = jobs;
  if (auto b = env_budget()) eo.node_budget = *b;
  EnumResult res = enumerate_right_bol(eo);

  std::ostream& note = out_path.empty() ? std::cerr : std::cout;
  note << "order " << order << ": " << res.loops.size() << " loops";
  if (nonassoc) note << ", nonassociative only";
  if (central) note << ", central squares only";
  note << "; " << res.nodes << " nodes, "
       << (res.complete ? "complete" : "PARTIAL (node budget exhausted)")
       << "\n";

  if (out_path.empty()) {
    if (!res.complete) std::cout << "# partial: node budget exhausted\n";
    write_loops(std::cout, res.loops);
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write " + out_path);
    if (!res.complete) out << "# partial: node budget exhausted\n";
    write_loops(out, res.loops);
    note << "wrote " << res.loops.size() << " loops to " << out_path << "\n";
  }
  return res.complete ? kExitOk : kExitPartial;
}

int run_histogram(const std::string& path) {
  std::vector<Loop> loops = read_loops_file(path);
  std::map<int, int> hist = nu_histogram(loops);
  int population = 0;
  for (auto [k, v] : hist) population += v;
  std::cout << "population: " << population << " of " << loops.size()
            << " loops (right Bol, central squares, neither associative nor "
               "AIP)\n";
  std::cout << "nu\tcount\n";
  for (auto [k, v] : hist) std::cout << k << "\t" << v << "\n";
  return kExitOk;
}

int run_selftest(const SelftestOptions& so) {
  std::vector<CriterionResult> results = run_acceptance(so);
  for (const CriterionResult& r : results)
    std::cout << std::left << std::setw(4) << r.id << std::setw(14)
              << status_name(r.status) << r.title << " [" << r.detail << "]\n";
  bool ok = all_passed(results);
  std::cout << "acceptance suite: " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kExitOk : kExitPartial;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation with finite loops given by Cayley tables"};
  app.require_subcommand(1);

  int rc = kExitOk;

  std::string check_file, check_identity_name;
  CLI::App* check = app.add_subcommand("check", "test an identity on every loop in a file");
  check->add_option("file", check_file, "loop file")->required();
  check->add_option("--identity", check_identity_name, "identity name (see 'check --help')")->required();
  check->callback([&] { rc = run_check(check_file, check_identity_name); });

  std::string analyze_file, analyze_tsv;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "full invariant report per loop");
  analyze_cmd->add_option("file", analyze_file, "loop file")->required();
  analyze_cmd->add_option("--tsv", analyze_tsv, "also write records to this TSV file");
  analyze_cmd->callback([&] { rc = run_analyze(analyze_file, analyze_tsv); });

  std::string extend_file, extend_out;
  int extend_steps = 1;
  CLI::App* extend_cmd = app.add_subcommand("extend", "double each loop (t/v construction)");
  extend_cmd->add_option("file", extend_file, "loop file")->required();
  extend_cmd->add_option("--out", extend_out, "write resulting loops here (default: standard output)");
  extend_cmd->add_option("--iterate", extend_steps, "number of doubling steps")->check(CLI::PositiveNumber);
  extend_cmd->callback([&] { rc = run_extend(extend_file, extend_out, extend_steps); });

  std::string chein_file, chein_out;
  CLI::App* chein_cmd = app.add_subcommand("chein", "double each group (signed-exponent construction)");
  chein_cmd->add_option("file", chein_file, "loop file of groups")->required();
  chein_cmd->add_option("--out", chein_out, "write resulting loops here")->required();
  chein_cmd->callback([&] { rc = run_chein(chein_file, chein_out); });

  std::string core_file, core_out;
  CLI::App* core_cmd = app.add_subcommand("core", "core quandle of each loop");
  core_cmd->add_option("file", core_file, "loop file")->required();
  core_cmd->add_option("--out", core_out, "write quandle tables here (default: standard output)");
  core_cmd->callback([&] { rc = run_core(core_file, core_out); });

  std::string rstr_file;
  size_t rstr_max_cosets = 1'000'000;
  CLI::App* rstr_cmd = app.add_subcommand("rstr", "order of the core's involutory reflection group");
  rstr_cmd->add_option("file", rstr_file, "loop file")->required();
  CLI::Option* rstr_budget_opt = rstr_cmd->add_option("--max-cosets", rstr_max_cosets, "coset enumeration budget");
  rstr_cmd->callback([&] {
    if (rstr_budget_opt->count() == 0)
      if (auto b = env_budget()) rstr_max_cosets = static_cast<size_t>(*b);
    rc = run_rstr(rstr_file, rstr_max_cosets);
  });

  std::string net_file;
  bool net_reflections = false, net_sigma = false, net_gamma = false;
  CLI::App* net_cmd = app.add_subcommand("net", "3-net reflection reports");
  net_cmd->add_option("file", net_file, "loop file")->required();
  CLI::Option* o1 = net_cmd->add_flag("--reflections", net_reflections, "involution/collineation status of every reflection");
  CLI::Option* o2 = net_cmd->add_flag("--sigma", net_sigma, "the 2n line maps and their sharp transitivity");
  CLI::Option* o3 = net_cmd->add_flag("--gamma-order", net_gamma, "order of the group generated by the reflections' line maps");
  o1->excludes(o2)->excludes(o3);
  o2->excludes(o3);
  net_cmd->callback([&] {
    if (!net_reflections && !net_sigma && !net_gamma)
      throw CLI::RequiredError("one of --reflections, --sigma, --gamma-order");
    rc = run_net(net_file, net_reflections, net_sigma, net_gamma);
  });

  int enum_order = 0, enum_jobs = 1;
  bool enum_nonassoc = false, enum_central = false;
  std::string enum_out;
  CLI::App* enum_cmd = app.add_subcommand("enumerate", "all right Bol loops of an order, up to isomorphism");
  enum_cmd->add_option("--order", enum_order, "loop order")->required()->check(CLI::Range(1, 31));
  enum_cmd->add_flag("--nonassoc", enum_nonassoc, "drop associative loops");
  enum_cmd->add_flag("--central-squares", enum_central, "keep only loops with all squares central");
  enum_cmd->add_option("--out", enum_out, "write loops here (default: standard output)");
  enum_cmd->add_option("--jobs", enum_jobs, "worker threads")->check(CLI::PositiveNumber);
  enum_cmd->callback([&] {
    rc = run_enumerate(enum_order, enum_nonassoc, enum_central, enum_jobs, enum_out);
  });

  std::string hist_file;
  CLI::App* hist_cmd = app.add_subcommand("histogram", "flipped-nucleus counts over a loop file");
  hist_cmd->add_option("file", hist_file, "loop file")->required();
  hist_cmd->callback([&] { rc = run_histogram(hist_file); });

  SelftestOptions so;
  if (const char* cat = std::getenv("BOLKIT_ORDER16_CATALOG"))
    so.order16_catalog_path = cat;
  if (auto b = env_budget()) so.search_node_budget = *b;
  CLI::App* self_cmd = app.add_subcommand("selftest", "run the acceptance suite on built-in fixtures");
  self_cmd->add_option("--catalog", so.order16_catalog_path, "order-16 loop catalog file (default: $BOLKIT_ORDER16_CATALOG)");
  self_cmd->add_flag("--stretch", so.run_stretch, "also search orders 12 and 15");
  self_cmd->add_option("--jobs", so.jobs, "worker threads for the searches")->check(CLI::PositiveNumber);
  self_cmd->add_option("--max-cosets", so.max_cosets, "coset enumeration budget");
  self_cmd->callback([&] { rc = run_selftest(so); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const ClosureBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPartial;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return rc;
}
