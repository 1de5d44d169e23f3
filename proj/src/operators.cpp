#include "nlt/operators.hpp"

#include <numbers>

#include "nlt/errors.hpp"
#include "nlt/fft.hpp"

namespace nlt {

namespace {

using cd = std::complex<double>;

template <typename PerMode>
Spectrum map_modes(const Spectrum& s, PerMode&& fn) {
    Spectrum out(s.grid);
    const auto& k = s.grid->wavenumbers();
    const std::size_t nyq = s.grid->nyquist_index();
    for (std::size_t i = 0; i < s.size(); ++i) {
        out[i] = fn(k[i], i == nyq) * s[i];
    }
    return out;
}

} // namespace

Spectrum hilbert(const Spectrum& s) {
    return map_modes(s, [](double k, bool nyquist) -> cd {
        if (nyquist || k == 0.0) return 0.0;
        return cd(0.0, k > 0.0 ? -1.0 : 1.0);
    });
}

Field hilbert(const Field& f) {
    return synthesize(hilbert(forward_transform(f)));
}

Spectrum fractional_laplacian(const Spectrum& s, double gamma) {
    if (!(gamma > 0.0) || gamma > 2.0) {
        throw parameter_error("fractional_laplacian: gamma must lie in (0,2], got " +
                              std::to_string(gamma));
    }
    return map_modes(s, [gamma](double k, bool) -> cd { return lambda_multiplier(k, gamma); });
}

Field fractional_laplacian(const Field& f, double gamma) {
    return synthesize(fractional_laplacian(forward_transform(f), gamma));
}

Spectrum bessel_potential(const Spectrum& s, double alpha) {
    if (alpha < 0.0) {
        throw parameter_error("bessel_potential: alpha must be >= 0, got " +
                              std::to_string(alpha));
    }
    return map_modes(s, [alpha](double k, bool) -> cd { return bessel_multiplier(k, alpha); });
}

Field bessel_potential(const Field& f, double alpha) {
    if (alpha == 0.0) return f;
    return synthesize(bessel_potential(forward_transform(f), alpha));
}

Spectrum derivative(const Spectrum& s) {
    return map_modes(s, [](double k, bool nyquist) -> cd {
        return nyquist ? cd(0.0) : cd(0.0, k);
    });
}

Field derivative(const Field& f) {
    return synthesize(derivative(forward_transform(f)));
}

Field heat_semigroup(const Field& f, double tau) {
    if (tau < 0.0) {
        throw parameter_error("heat_semigroup: tau must be >= 0, got " + std::to_string(tau));
    }
    if (tau == 0.0) return f;
    Spectrum s = forward_transform(f);
    s = map_modes(s, [tau](double k, bool) -> cd { return heat_multiplier(k, tau); });
    return synthesize(s);
}

Field mollify(const Field& f, double eps) {
    if (!(eps > 0.0)) {
        throw parameter_error("mollify: eps must be positive, got " + std::to_string(eps));
    }
    return heat_semigroup(f, 0.5 * eps * eps);
}

Field wiener_window(const Field& f, double eps) {
    if (!(eps > 0.0)) {
        throw parameter_error("wiener_window: eps must be positive, got " +
                              std::to_string(eps));
    }
    Field smooth = heat_semigroup(f, eps);
    Field out(f.grid);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double x = f.grid->node(i);
        out[i] = std::exp(-eps * x * x) * smooth[i];
    }
    return out;
}

Field lambda_quadrature_oracle(const Field& f, bool* resolution_warning) {
    if (!f.grid) throw parameter_error("lambda_quadrature_oracle: field has no grid");
    const std::size_t n = f.size();
    if (n > 1024) {
        throw oracle_size_error("lambda_quadrature_oracle: N = " + std::to_string(n) +
                                " exceeds the 1024 oracle guard");
    }
    if (!all_finite(f)) {
        throw invalid_field_error("lambda_quadrature_oracle: non-finite field values");
    }

    const double L = f.grid->length();
    const double dx = f.grid->spacing();
    const double pi = std::numbers::pi;

    // Kernel weights for the regular nodes s = m*dx, m = 1..N-1.
    std::vector<double> kernel(n, 0.0);
    for (std::size_t m = 1; m < n; ++m) {
        const double sn = std::sin(pi * static_cast<double>(m) * dx / L);
        kernel[m] = (pi * dx / (L * L)) / (sn * sn);
    }

    // Closed-form periodic second-difference weights (period 2*pi, step h),
    // rescaled to the cell length. Supplies the p.v. limit at the singular
    // node through -f''(x) (L/pi)^2.
    const double h = 2.0 * pi / static_cast<double>(n);
    const double scale2 = (2.0 * pi / L) * (2.0 * pi / L);
    std::vector<double> second_diff(n);
    second_diff[0] = scale2 * (-pi * pi / (3.0 * h * h) - 1.0 / 6.0);
    for (std::size_t m = 1; m < n; ++m) {
        const double sn = std::sin(0.5 * static_cast<double>(m) * h);
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        second_diff[m] = scale2 * (-sign / (2.0 * sn * sn));
    }

    Field out(f.grid);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        double fpp = second_diff[0] * f[i];
        for (std::size_t m = 1; m < n; ++m) {
            const std::size_t idx = (i + m) % n;
            acc += kernel[m] * (f[i] - f[idx]);
            fpp += second_diff[m] * f[idx];
        }
        out[i] = acc - dx / (2.0 * pi) * fpp;
    }

    if (resolution_warning) {
        Spectrum s = forward_transform(f);
        double total = 0.0, tail = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double e = std::norm(s[i]);
            total += e;
            if (4 * std::abs(s.grid->mode_index(i)) > static_cast<int>(n)) tail += e;
        }
        *resolution_warning = total > 0.0 && tail > 1e-12 * total;
    }
    return out;
}

} // namespace nlt
