#pragma once

#include <filesystem>
#include <stdexcept>
#include <vector>

#include "eikonal/grid.hpp"

namespace eikonal {

/// Raised on malformed, truncated, or unreadable grid/time files.
class io_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Both file kinds share one layout: a four-line text header followed by a
/// raw binary payload.
///
///   line 1: magic and version  ("EIKGRID 1" for velocity, "EIKTIME 1" for
///           arrival times)
///   line 2: N, the dimension count
///   line 3: N cell extents separated by single spaces
///   line 4: h, the cell edge length (decimal, full round-trip precision)
///   then:   product(dims) IEEE-754 binary64 values, little-endian,
///           row-major with axis 0 fastest.
///
/// A velocity payload must be non-negative and NaN-free; an arrival-time
/// payload may contain +inf for unreached cells but no NaN or negatives.

/// Arrival times with their grid geometry, as stored in an EIKTIME file.
struct TimeField {
  std::vector<std::size_t> dims;
  double h = 0.0;
  std::vector<double> values;

  std::size_t ndims() const { return dims.size(); }
};

Grid read_grid(const std::filesystem::path& path);
void write_grid(const std::filesystem::path& path, const Grid& grid);

TimeField read_time_field(const std::filesystem::path& path);
void write_time_field(const std::filesystem::path& path, const TimeField& field);
/// Convenience: writes the grid's current arrival times.
void write_time_field(const std::filesystem::path& path, const Grid& grid);

}  // namespace eikonal
