#include "bolkit/catalog.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "bolkit/error.hpp"
#include "bolkit/extension.hpp"
#include "bolkit/quandle.hpp"

namespace bolkit {

CatalogRecord analyze(const Loop& l) {
  CatalogRecord r;
  r.name = l.name;
  r.order = l.n;
  r.right_bol = check_identity(l, Identity::right_bol);
  r.moufang = check_identity(l, Identity::moufang);
  r.associative = check_identity(l, Identity::associative);
  r.commutative = check_identity(l, Identity::commutative);
  r.aip = check_identity(l, Identity::aip);
  r.central_squares = has_central_squares(l);
  r.power_associative = is_power_associative(l);
  if (r.power_associative) r.exponent = exponent(l);
  r.nuc_left = static_cast<int>(nucleus(l, Nucleus::left).size());
  r.nuc_middle = static_cast<int>(nucleus(l, Nucleus::middle).size());
  r.nuc_right = static_cast<int>(nucleus(l, Nucleus::right).size());
  r.commutant_size = static_cast<int>(commutant(l).size());
  r.center_size = static_cast<int>(center(l).size());
  if (l.has_all_inverses()) r.core_orbits = orbit_count(core(l));
  if (r.right_bol && r.central_squares && !r.associative && !r.aip) r.nu = nu_value(l);
  return r;
}

int nu_value(const Loop& l) {
  if (!check_identity(l, Identity::right_bol) || !has_central_squares(l) ||
      check_identity(l, Identity::associative) || check_identity(l, Identity::aip))
    throw PopulationFilterViolated(
        "nu_value: loop must be right Bol with central squares, neither "
        "associative nor AIP");
  const int n = l.n;
  Loop ext = extend(l).carrier;
  std::vector<int> nl = nucleus(ext, Nucleus::left);
  int direct = 0;
  for (int x : nl)
    if (x >= n) ++direct;

  int derived = 0;  // m with ((m a) b)(a^-1 b^-1) = m for all a, b
  for (int m = 0; m < n; ++m) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        ok = l.mul(l.mul(l.mul(m, a), b), l.mul(l.inv(a), l.inv(b))) == m;
    if (ok) ++derived;
  }
  if (derived != direct)
    throw Error("nu_value: direct count " + std::to_string(direct) +
                " disagrees with the membership identity count " + std::to_string(derived));
  return direct;
}

std::map<int, int> nu_histogram(const std::vector<Loop>& loops) {
  std::map<int, int> h;
  for (const auto& l : loops) {
    if (!check_identity(l, Identity::right_bol) || !has_central_squares(l) ||
        check_identity(l, Identity::associative) || check_identity(l, Identity::aip))
      continue;
    ++h[nu_value(l)];
  }
  return h;
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

std::vector<Loop> read_loops(std::istream& in) {
  std::vector<Loop> out;
  int lineno = 0;
  std::string raw;
  std::optional<std::string> pending_name;

  auto next_content_line = [&](std::string& content) {
    while (std::getline(in, raw)) {
      ++lineno;
      content = trim(raw);
      if (content.empty() || content[0] == '#') continue;
      return true;
    }
    return false;
  };

  std::string line;
  while (next_content_line(line)) {
    std::istringstream head(line);
    std::string keyword;
    head >> keyword;
    if (keyword == "loop") {
      if (pending_name) throw ParseError(lineno, "'loop' repeated without a table");
      std::string rest;
      std::getline(head, rest);
      rest = trim(rest);
      if (rest.empty()) throw ParseError(lineno, "missing name after 'loop'");
      pending_name = rest;
    } else if (keyword == "order") {
      int n = 0;
      if (!(head >> n) || n < 1 || n > 4096)
        throw ParseError(lineno, "bad order");
      std::string tail;
      if (head >> tail) throw ParseError(lineno, "trailing text after order");
      const int block_line = lineno;
      std::vector<std::vector<int>> rows;
      rows.reserve(n);
      for (int i = 0; i < n; ++i) {
        std::string row_line;
        if (!next_content_line(row_line))
          throw ParseError(lineno, "table ends after " + std::to_string(i) + " of " +
                                       std::to_string(n) + " rows");
        std::istringstream rs(row_line);
        std::vector<int> row;
        row.reserve(n);
        int v;
        while (rs >> v) {
          if (v < 1 || v > n)
            throw ParseError(lineno, "entry " + std::to_string(v) + " outside 1.." +
                                         std::to_string(n));
          row.push_back(v - 1);
        }
        if (!rs.eof()) throw ParseError(lineno, "non-numeric table entry");
        if (static_cast<int>(row.size()) != n)
          throw ParseError(lineno, "row has " + std::to_string(row.size()) +
                                       " entries, expected " + std::to_string(n));
        rows.push_back(std::move(row));
      }
      std::string name = pending_name ? *pending_name : "L" + std::to_string(out.size() + 1);
      pending_name.reset();
      try {
        out.push_back(from_table(rows, std::nullopt, name));
      } catch (const Error& e) {
        throw ParseError(block_line, std::string("not a loop table: ") + e.what());
      }
    } else {
      throw ParseError(lineno, "expected 'loop' or 'order', got '" + keyword + "'");
    }
  }
  if (pending_name) throw ParseError(lineno, "'loop' without a following table");
  return out;
}

std::vector<Loop> read_loops_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_loops(in);
}

void write_loops(std::ostream& out, const std::vector<Loop>& loops) {
  for (size_t i = 0; i < loops.size(); ++i) {
    const Loop& l = loops[i];
    out << "loop " << (l.name.empty() ? "L" + std::to_string(i + 1) : l.name) << "\n";
    out << "order " << l.n << "\n";
    for (int r = 0; r < l.n; ++r) {
      for (int c = 0; c < l.n; ++c) {
        if (c) out << ' ';
        out << l.tab[r * l.n + c] + 1;
      }
      out << "\n";
    }
    out << "\n";
  }
}

void write_loops_file(const std::string& path, const std::vector<Loop>& loops) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  write_loops(out, loops);
  if (!out) throw Error("write to " + path + " failed");
}

void write_tsv(std::ostream& out, const std::vector<CatalogRecord>& records) {
  out << "name\torder\tright_bol\tmoufang\tassociative\tcommutative\taip"
         "\tcentral_squares\tpower_associative\texponent\tnuc_left\tnuc_middle"
         "\tnuc_right\tcommutant\tcenter\tcore_orbits\tnu\n";
  auto opt = [](const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  for (const auto& r : records) {
    out << r.name << '\t' << r.order << '\t' << r.right_bol << '\t' << r.moufang << '\t'
        << r.associative << '\t' << r.commutative << '\t' << r.aip << '\t'
        << r.central_squares << '\t' << r.power_associative << '\t' << opt(r.exponent) << '\t'
        << r.nuc_left << '\t' << r.nuc_middle << '\t' << r.nuc_right << '\t'
        << r.commutant_size << '\t' << r.center_size << '\t' << opt(r.core_orbits) << '\t'
        << opt(r.nu) << '\n';
  }
}

}  // namespace bolkit
