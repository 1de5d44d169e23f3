#pragma once

#include <cmath>

#include "nlt/field.hpp"

namespace nlt {

/// Velocity law u = N(theta): Hilbert transform or Bessel potential.
struct VelocityKind {
    enum class Tag { hilbert_transform, bessel_potential };
    Tag tag = Tag::hilbert_transform;
    double alpha = 0.0; // Bessel exponent, >= 0

    static VelocityKind hilbert() { return {Tag::hilbert_transform, 0.0}; }
    static VelocityKind bessel(double alpha) { return {Tag::bessel_potential, alpha}; }
    bool is_hilbert() const { return tag == Tag::hilbert_transform; }
    bool is_bessel() const { return tag == Tag::bessel_potential; }
};

// Scalar multiplier values, shared with the mode-wise verification checks.
inline double lambda_multiplier(double k, double gamma) {
    return k == 0.0 ? 0.0 : std::pow(std::abs(k), gamma);
}
inline double bessel_multiplier(double k, double alpha) {
    return std::pow(1.0 + k * k, -alpha);
}
inline double heat_multiplier(double k, double tau) {
    return std::exp(-tau * k * k);
}
inline double velocity_multiplier(double k, const VelocityKind& v) {
    // Hilbert carries an extra factor -i*sgn(k); this is its magnitude action
    // used where only |u_hat| matters.
    return v.is_hilbert() ? (k == 0.0 ? 0.0 : 1.0) : bessel_multiplier(k, v.alpha);
}

/// Multiplier -i*sgn(k). Mean and Nyquist modes are annihilated.
Field hilbert(const Field& f);
Spectrum hilbert(const Spectrum& s);

/// Lambda^gamma = (-d^2/dx^2)^(gamma/2), multiplier |k|^gamma, gamma in (0,2].
Field fractional_laplacian(const Field& f, double gamma);
Spectrum fractional_laplacian(const Spectrum& s, double gamma);

/// (1 - d^2/dx^2)^(-alpha), multiplier (1+k^2)^(-alpha), alpha >= 0.
Field bessel_potential(const Field& f, double alpha);
Spectrum bessel_potential(const Spectrum& s, double alpha);

/// d/dx, multiplier i*k with the Nyquist mode zeroed.
Field derivative(const Field& f);
Spectrum derivative(const Spectrum& s);

/// exp(tau * d^2/dx^2), multiplier exp(-tau k^2), tau >= 0.
Field heat_semigroup(const Field& f, double tau);

/// Gaussian mollification rho_eps * f, realized as the heat semigroup at
/// tau = eps^2/2. Preserves the mean exactly; preserves sign for eps large
/// enough that the smoothing kernel is resolved on the grid.
Field mollify(const Field& f, double eps);

/// Smooth-and-localize approximation map: g_eps(x) * heat(f, eps) with
/// g_eps(x) = exp(-eps x^2) in cell-centered coordinates. Does not increase
/// the discrete A^0 norm.
Field wiener_window(const Field& f, double eps);

/// Lambda (gamma = 1) by direct trapezoidal quadrature of the periodized
/// singular kernel, entirely in physical space:
///
///   Lambda f(x) = (pi/L^2) p.v. int [f(x) - f(x+s)] / sin^2(pi s / L) ds
///
/// with the singular node handled by the symmetric principal-value limit,
/// whose value -f''(x) (L/pi)^2 is supplied by the closed-form periodic
/// second-difference kernel. The result is an O(N^2), FFT-free reference
/// path. N is guarded to 1024. If the field carries noticeable spectral
/// mass above |j| = N/4 the optional warning flag is set.
Field lambda_quadrature_oracle(const Field& f, bool* resolution_warning = nullptr);

} // namespace nlt
