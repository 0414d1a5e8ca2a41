#include "eikonal/grid_io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

namespace eikonal {

namespace {

constexpr const char* kGridMagic = "EIKGRID 1";
constexpr const char* kTimeMagic = "EIKTIME 1";

// Payloads are little-endian on disk; swap on big-endian hosts.
void to_little_endian(std::vector<double>& values) {
  if constexpr (std::endian::native == std::endian::big) {
    for (double& v : values) {
      auto bits = std::bit_cast<std::uint64_t>(v);
      bits = __builtin_bswap64(bits);
      v = std::bit_cast<double>(bits);
    }
  }
}

struct Header {
  std::vector<std::size_t> dims;
  double h = 0.0;
  std::size_t cell_count = 0;
};

Header read_header(std::istream& in, const std::filesystem::path& path,
                   const char* magic) {
  std::string line;
  if (!std::getline(in, line) || line != magic)
    throw io_error(path.string() + ": missing magic line \"" + magic + "\"");

  std::size_t ndims = 0;
  if (!std::getline(in, line))
    throw io_error(path.string() + ": missing dimension-count line");
  {
    std::istringstream ls(line);
    if (!(ls >> ndims) || ndims == 0 || !(ls >> std::ws).eof())
      throw io_error(path.string() + ": invalid dimension count \"" + line + "\"");
  }

  Header hdr;
  if (!std::getline(in, line))
    throw io_error(path.string() + ": missing extents line");
  {
    std::istringstream ls(line);
    std::size_t extent = 0;
    while (ls >> extent) {
      if (extent == 0)
        throw io_error(path.string() + ": zero extent in header");
      hdr.dims.push_back(extent);
    }
    if (!ls.eof() || hdr.dims.size() != ndims)
      throw io_error(path.string() + ": extents line does not match dimension count");
  }

  if (!std::getline(in, line))
    throw io_error(path.string() + ": missing spacing line");
  {
    std::istringstream ls(line);
    if (!(ls >> hdr.h) || !(ls >> std::ws).eof() || !(hdr.h > 0.0) ||
        !std::isfinite(hdr.h))
      throw io_error(path.string() + ": invalid spacing \"" + line + "\"");
  }

  std::size_t n = 1;
  for (std::size_t extent : hdr.dims) {
    if (extent > std::numeric_limits<std::size_t>::max() / n)
      throw io_error(path.string() + ": cell count overflows");
    n *= extent;
  }
  hdr.cell_count = n;
  return hdr;
}

std::vector<double> read_payload(std::istream& in,
                                 const std::filesystem::path& path,
                                 std::size_t cell_count) {
  std::vector<double> values(cell_count);
  in.read(reinterpret_cast<char*>(values.data()),
          static_cast<std::streamsize>(cell_count * sizeof(double)));
  if (static_cast<std::size_t>(in.gcount()) != cell_count * sizeof(double))
    throw io_error(path.string() + ": truncated payload");
  if (in.get() != std::char_traits<char>::eof())
    throw io_error(path.string() + ": trailing bytes after payload");
  to_little_endian(values);  // involution: decodes on big-endian hosts
  return values;
}

void write_file(const std::filesystem::path& path, const char* magic,
                const std::vector<std::size_t>& dims, double h,
                std::vector<double> values) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error(path.string() + ": cannot open for writing");
  out << magic << '\n' << dims.size() << '\n';
  for (std::size_t d = 0; d < dims.size(); ++d)
    out << (d ? " " : "") << dims[d];
  out << '\n';
  // Enough digits that reading the header reproduces h exactly.
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", h);
  out << buf << '\n';
  to_little_endian(values);
  out.write(reinterpret_cast<const char*>(values.data()),
            static_cast<std::streamsize>(values.size() * sizeof(double)));
  if (!out) throw io_error(path.string() + ": write failed");
}

}  // namespace

Grid read_grid(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error(path.string() + ": cannot open");
  const Header hdr = read_header(in, path, kGridMagic);
  std::vector<double> velocity = read_payload(in, path, hdr.cell_count);
  for (double f : velocity)
    if (std::isnan(f) || f < 0.0)
      throw io_error(path.string() + ": velocity payload must be non-negative");
  return Grid(hdr.dims, hdr.h, std::move(velocity));
}

void write_grid(const std::filesystem::path& path, const Grid& grid) {
  write_file(path, kGridMagic, grid.dims(), grid.spacing(),
             std::vector<double>(grid.velocities().begin(),
                                 grid.velocities().end()));
}

TimeField read_time_field(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error(path.string() + ": cannot open");
  const Header hdr = read_header(in, path, kTimeMagic);
  TimeField field;
  field.dims = hdr.dims;
  field.h = hdr.h;
  field.values = read_payload(in, path, hdr.cell_count);
  for (double t : field.values)
    if (std::isnan(t) || t < 0.0)
      throw io_error(path.string() + ": time payload must be non-negative");
  return field;
}

void write_time_field(const std::filesystem::path& path, const TimeField& field) {
  write_file(path, kTimeMagic, field.dims, field.h, field.values);
}

void write_time_field(const std::filesystem::path& path, const Grid& grid) {
  write_file(path, kTimeMagic, grid.dims(), grid.spacing(),
             std::vector<double>(grid.times().begin(), grid.times().end()));
}

}  // namespace eikonal
