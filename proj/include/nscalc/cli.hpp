#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "nscalc/ns_lattice.hpp"

namespace nscalc::cli {

enum class Format { Text, Csv, Json };

Format parse_format(std::string_view name);

/// Class literal "a,b,c", each coordinate a rational literal.
NSClass parse_class(Genus g, std::string_view literal);

/// "(a,b,c)" with canonical rationals.
std::string render_class(const NSClass& x);

/// One row of the genus table for the standard polarization. The rational
/// columns are exact; the *_dec columns are display-only.
struct TableRow {
  int g;
  std::string e1;
  std::string e2;
  std::string h;
  std::string mean;
  std::string margin;
  std::string e1_dec;
  std::string h_dec;
};

TableRow table_row(Genus g);

/// Renders rows g_min..g_max. Throws std::invalid_argument unless
/// 2 <= g_min <= g_max; nothing is produced on failure.
std::string render_table(int g_min, int g_max, Format format);

/// Entry point shared by the executable and the tests. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nscalc::cli
