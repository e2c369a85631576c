#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bolkit/loop.hpp"

namespace bolkit {

struct CatalogRecord {
  std::string name;
  int order = 0;
  bool right_bol = false;
  bool moufang = false;
  bool associative = false;
  bool commutative = false;
  bool aip = false;
  bool central_squares = false;
  bool power_associative = false;
  std::optional<int> exponent;     // power-associative loops only
  int nuc_left = 0;
  int nuc_middle = 0;
  int nuc_right = 0;
  int commutant_size = 0;
  int center_size = 0;
  std::optional<int> core_orbits;  // needs two-sided inverses
  std::optional<int> nu;           // see nu_value
};

CatalogRecord analyze(const Loop& l);

// For a right Bol loop with central squares that is neither associative nor
// AIP: the number of flipped elements in the left nucleus of its double.
// Computed directly and re-derived from the membership identity
//   v_m left-nuclear  iff  m = ((m a) b)(a^-1 b^-1) for all a, b;
// throws PopulationFilterViolated outside that population.
int nu_value(const Loop& l);

// nu tallies over the population members of the list (others are skipped).
std::map<int, int> nu_histogram(const std::vector<Loop>& loops);

// Text format, 1-based entries:
//   # comment
//   loop <name>      (optional; defaults to L1, L2, ...)
//   order <n>
//   <n rows of n integers>
// separated by blank lines.
std::vector<Loop> read_loops(std::istream& in);
std::vector<Loop> read_loops_file(const std::string& path);
void write_loops(std::ostream& out, const std::vector<Loop>& loops);
void write_loops_file(const std::string& path, const std::vector<Loop>& loops);

// Tab-separated records, one line per loop; booleans as 0/1, absent optionals
// as '-'.
void write_tsv(std::ostream& out, const std::vector<CatalogRecord>& records);

}  // namespace bolkit
