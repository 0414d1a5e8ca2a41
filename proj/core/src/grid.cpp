#include "eikonal/grid.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace eikonal {

namespace {

std::size_t checked_cell_count(const std::vector<std::size_t>& dims) {
  if (dims.empty()) throw std::invalid_argument("grid: dims must not be empty");
  std::size_t n = 1;
  for (std::size_t extent : dims) {
    if (extent == 0) throw std::invalid_argument("grid: zero extent");
    if (extent > std::numeric_limits<std::size_t>::max() / n)
      throw std::invalid_argument("grid: cell count overflows size_t");
    n *= extent;
  }
  return n;
}

}  // namespace

Grid::Grid(std::vector<std::size_t> dims, double h)
    : Grid(std::move(dims), h, {}) {}

Grid::Grid(std::vector<std::size_t> dims, double h, std::vector<double> velocity)
    : dims_(std::move(dims)), h_(h) {
  const std::size_t n = checked_cell_count(dims_);
  if (!(h > 0.0)) throw std::invalid_argument("grid: spacing must be positive");

  strides_.resize(dims_.size());
  std::size_t stride = 1;
  for (std::size_t d = 0; d < dims_.size(); ++d) {
    strides_[d] = stride;
    stride *= dims_[d];
  }

  if (velocity.empty()) {
    velocity_.assign(n, 1.0);
  } else {
    if (velocity.size() != n)
      throw std::invalid_argument("grid: velocity size does not match cell count");
    for (double f : velocity)
      if (std::isnan(f) || f < 0.0)
        throw std::invalid_argument("grid: velocity values must be non-negative");
    velocity_ = std::move(velocity);
  }

  time_.assign(n, kInf);
  state_.assign(n, CellState::Unknown);
}

Index Grid::flat_index(std::span<const std::size_t> coords) const {
  if (coords.size() != dims_.size())
    throw std::out_of_range("grid: coordinate count does not match ndims");
  Index i = 0;
  for (std::size_t d = 0; d < dims_.size(); ++d) {
    if (coords[d] >= dims_[d])
      throw std::out_of_range("grid: coordinate exceeds extent");
    i += coords[d] * strides_[d];
  }
  return i;
}

std::vector<std::size_t> Grid::coords_of(Index i) const {
  if (i >= size()) throw std::out_of_range("grid: flat index exceeds cell count");
  std::vector<std::size_t> coords(dims_.size());
  for (std::size_t d = 0; d < dims_.size(); ++d) {
    coords[d] = i % dims_[d];
    i /= dims_[d];
  }
  return coords;
}

std::vector<Index> Grid::neighbors(Index i) const {
  if (i >= size()) throw std::out_of_range("grid: flat index exceeds cell count");
  std::vector<Index> out;
  out.reserve(2 * dims_.size());
  for_each_neighbor(i, [&out](Index j) { out.push_back(j); });
  return out;
}

void Grid::reset_for_solve() {
  const std::size_t n = size();
  time_.assign(n, kInf);
  state_.assign(n, CellState::Unknown);
  for (std::size_t i = 0; i < n; ++i)
    if (is_obstacle(i)) state_[i] = CellState::Frozen;
}

}  // namespace eikonal
