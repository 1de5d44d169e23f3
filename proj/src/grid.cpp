#include "nlt/grid.hpp"

#include <cmath>
#include <numbers>

#include "nlt/errors.hpp"

namespace nlt {

namespace {
bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }
} // namespace

Grid::Grid(std::size_t n_points, double domain_length)
    : n_(n_points), length_(domain_length) {
    if (n_ < 8 || !is_power_of_two(n_)) {
        throw parameter_error("grid: n_points must be a power of two >= 8, got " +
                              std::to_string(n_points));
    }
    if (!(domain_length > 0.0) || !std::isfinite(domain_length)) {
        throw parameter_error("grid: domain_length must be positive and finite");
    }
    spacing_ = length_ / static_cast<double>(n_);
    nodes_.resize(n_);
    wavenumbers_.resize(n_);
    const double k0 = 2.0 * std::numbers::pi / length_;
    for (std::size_t i = 0; i < n_; ++i) {
        nodes_[i] = -0.5 * length_ + static_cast<double>(i) * spacing_;
        wavenumbers_[i] = k0 * static_cast<double>(mode_index(i));
    }
}

double Grid::max_wavenumber() const {
    return std::numbers::pi * static_cast<double>(n_) / length_;
}

GridPtr make_grid(std::size_t n_points, double domain_length) {
    return std::make_shared<Grid>(n_points, domain_length);
}

} // namespace nlt
