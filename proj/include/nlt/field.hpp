#pragma once

#include <complex>
#include <vector>

#include "nlt/grid.hpp"

namespace nlt {

/// Real-valued samples on a Grid.
struct Field {
    GridPtr grid;
    std::vector<double> values;

    Field() = default;
    explicit Field(GridPtr g, double fill = 0.0)
        : grid(std::move(g)), values(grid->size(), fill) {}
    Field(GridPtr g, std::vector<double> v)
        : grid(std::move(g)), values(std::move(v)) {}

    std::size_t size() const { return values.size(); }
    double& operator[](std::size_t i) { return values[i]; }
    double operator[](std::size_t i) const { return values[i]; }
};

/// Complex Fourier coefficients c_j in FFT storage order, under the
/// convention f(x) = sum_j c_j exp(i k_j x).
struct Spectrum {
    GridPtr grid;
    std::vector<std::complex<double>> coeffs;

    Spectrum() = default;
    explicit Spectrum(GridPtr g)
        : grid(std::move(g)), coeffs(grid->size(), 0.0) {}

    std::size_t size() const { return coeffs.size(); }
    std::complex<double>& operator[](std::size_t i) { return coeffs[i]; }
    const std::complex<double>& operator[](std::size_t i) const { return coeffs[i]; }
};

bool all_finite(const Field& f);
bool all_finite(const Spectrum& s);

/// Grids of both operands must match.
void require_same_grid(const Field& a, const Field& b);

Field operator+(const Field& a, const Field& b);
Field operator-(const Field& a, const Field& b);
Field operator*(double c, const Field& f);

/// Pointwise product on the grid (no dealiasing).
Field multiply(const Field& a, const Field& b);

double max_abs(const Field& f);

} // namespace nlt
