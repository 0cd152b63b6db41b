// Minimal CSV emission with stable number formatting so identical runs
// produce byte-identical files.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wgt {

// Shortest round-trip decimal representation of x ("%.17g" fallback is
// never needed: uses std::to_chars).
std::string format_number(double x);

void write_csv_row(std::ostream& os, const std::vector<std::string>& cells);
void write_csv_row(std::ostream& os, const std::vector<double>& cells);

}  // namespace wgt
