#include "nlt/field.hpp"

#include <algorithm>
#include <cmath>

#include "nlt/errors.hpp"

namespace nlt {

bool all_finite(const Field& f) {
    return std::all_of(f.values.begin(), f.values.end(),
                       [](double v) { return std::isfinite(v); });
}

bool all_finite(const Spectrum& s) {
    return std::all_of(s.coeffs.begin(), s.coeffs.end(), [](const std::complex<double>& c) {
        return std::isfinite(c.real()) && std::isfinite(c.imag());
    });
}

void require_same_grid(const Field& a, const Field& b) {
    if (!a.grid || !b.grid || !a.grid->compatible(*b.grid)) {
        throw parameter_error("fields live on incompatible grids");
    }
}

Field operator+(const Field& a, const Field& b) {
    require_same_grid(a, b);
    Field out(a.grid);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Field operator-(const Field& a, const Field& b) {
    require_same_grid(a, b);
    Field out(a.grid);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Field operator*(double c, const Field& f) {
    Field out(f.grid);
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = c * f[i];
    return out;
}

Field multiply(const Field& a, const Field& b) {
    require_same_grid(a, b);
    Field out(a.grid);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
    return out;
}

double max_abs(const Field& f) {
    double m = 0.0;
    for (double v : f.values) m = std::max(m, std::abs(v));
    return m;
}

} // namespace nlt
