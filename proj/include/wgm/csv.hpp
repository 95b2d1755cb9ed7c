#pragma once

#include <iosfwd>
#include <string>

#include "wgm/params.hpp"
#include "wgm/sweep.hpp"

namespace wgm {

/// Malformed or mismatching CSV input.
class CsvError : public Error {
 public:
  using Error::Error;
};

/// Shortest decimal that parses back to the same double.
std::string format_double(double v);

// Layout: a `#`-prefixed metadata block of `key = value` lines (every base
// parameter with a unit suffix, the axis description, the tool version), then
// a header row, then one data row per grid point.
//
// 1D header: <axis>_<unit>,R_f,R_b,T_f,T_b,contrast_R,contrast_T
// 2D header: axis1,axis2,value   (row-major, axis1 outer)
//
// Stream failures are reported as std::ios_base::failure.
void write_csv(std::ostream& os, const SpectrumTable& table);
void write_csv(std::ostream& os, const GridTable& table);

std::string spectrum_header(Parameter axis);

/// Throws CsvError on any schema mismatch.
SpectrumTable read_spectrum_csv(std::istream& is);
GridTable read_grid_csv(std::istream& is);

}  // namespace wgm
