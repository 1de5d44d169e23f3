#pragma once

#include <cstdint>

#include "nlt/field.hpp"
#include "nlt/operators.hpp"

namespace nlt {

/// Parameter set of the transport equation
///   theta_t + u theta_x + delta u_x theta + nu Lambda^gamma theta
///     = epsilon_visc theta_xx,   u = N(theta).
struct ModelParams {
    double gamma = 1.0;        // dissipation order, (0, 2]
    double delta = 0.0;        // stretching coefficient
    double nu = 1.0;           // dissipation strength, >= 0
    double epsilon_visc = 0.0; // regularizing viscosity, >= 0
    VelocityKind velocity = VelocityKind::hilbert();
    bool critical_coupling = false; // Bessel kind with alpha = 1/2 - gamma/4
    bool linear_only = false;       // drop the quadratic terms (diagnostic runs)

    void validate() const;
    /// alpha = 1/2 - gamma/4, the coupling that closes the energy estimate.
    double critical_alpha() const { return 0.5 - 0.25 * gamma; }
};

/// Initial-data library.
struct InitialDataSpec {
    enum class Kind { positive_bump, gaussian, trig_polynomial, slow_decay };
    Kind kind = Kind::positive_bump;

    // positive_bump: base + amplitude * cos(2 pi x / L); needs base > |amplitude|
    double base = 2.0;
    double amplitude = 1.0;

    // gaussian: height * exp(-(x-center)^2 / (2 width^2))
    double center = 0.0;
    double width = 1.0;
    double height = 1.0;

    // trig_polynomial: random modes 1..degree, rescaled to the target
    // discrete A^0 norm
    std::uint64_t seed = 1;
    int degree = 5;
    double target_a0 = 0.5;

    // slow_decay: (1 + x^2)^(-eta/2)
    double eta = 0.3;

    // optional post-processing; 0 disables
    double mollify_eps = 0.0;
    double window_eps = 0.0;

    void validate() const;
};

/// Split of the quadratic terms.
enum class RhsForm {
    advective,  // -u theta_x - delta u_x theta
    divergence, // -(u theta)_x + (1 - delta) u_x theta
};

/// u = N(theta) for the given velocity law.
Field velocity_field(const Field& theta, const VelocityKind& v);
Spectrum velocity_field(const Spectrum& theta, const VelocityKind& v);

/// Full right-hand side
///   -u theta_x - delta u_x theta - nu Lambda^gamma theta + eps theta_xx
/// with 2/3 dealiasing applied to every pointwise product. Throws
/// blow_up_error if the evaluation produces non-finite values.
Field rhs(const Field& theta, const ModelParams& p, RhsForm form = RhsForm::advective);

/// Quadratic (transport + stretching) part of the right-hand side in
/// spectral variables; the linear dissipation is handled separately by the
/// integrating-factor stepper.
Spectrum nonlinear_rhs(const Spectrum& theta, const ModelParams& p,
                       RhsForm form = RhsForm::advective);

Field make_initial_data(const InitialDataSpec& spec, const GridPtr& g);

/// || d/dx H(theta) - Lambda theta ||_inf; zero up to rounding for fields
/// without Nyquist content.
double hilbert_consistency_residual(const Field& theta);

} // namespace nlt
