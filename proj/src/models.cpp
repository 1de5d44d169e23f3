#include "nlt/models.hpp"

#include <cmath>
#include <numbers>

#include "nlt/errors.hpp"
#include "nlt/fft.hpp"
#include "nlt/random.hpp"

namespace nlt {

void ModelParams::validate() const {
    if (!(gamma > 0.0) || gamma > 2.0) {
        throw parameter_error("model: gamma must lie in (0,2], got " + std::to_string(gamma));
    }
    if (!(nu >= 0.0)) throw parameter_error("model: nu must be >= 0");
    if (!(epsilon_visc >= 0.0)) throw parameter_error("model: epsilon_visc must be >= 0");
    if (!std::isfinite(delta)) throw parameter_error("model: delta must be finite");
    if (velocity.is_bessel() && !(velocity.alpha >= 0.0 && std::isfinite(velocity.alpha))) {
        throw parameter_error("model: Bessel alpha must be finite and >= 0");
    }
    if (critical_coupling) {
        if (!velocity.is_bessel()) {
            throw parameter_error("model: critical_coupling requires the Bessel velocity");
        }
        if (std::abs(velocity.alpha - critical_alpha()) >= 1e-12) {
            throw parameter_error("model: critical_coupling requires alpha = 1/2 - gamma/4 = " +
                                  std::to_string(critical_alpha()) + ", got " +
                                  std::to_string(velocity.alpha));
        }
    }
}

void InitialDataSpec::validate() const {
    switch (kind) {
    case Kind::positive_bump:
        if (!(base > 0.0) || !(base > std::abs(amplitude))) {
            throw parameter_error("initial: positive_bump needs base > |amplitude|");
        }
        break;
    case Kind::gaussian:
        if (!(width > 0.0)) throw parameter_error("initial: gaussian width must be positive");
        break;
    case Kind::trig_polynomial:
        if (degree < 1) throw parameter_error("initial: trig_polynomial degree must be >= 1");
        if (!(target_a0 > 0.0)) {
            throw parameter_error("initial: trig_polynomial target_a0 must be positive");
        }
        break;
    case Kind::slow_decay:
        if (!(eta > 0.0)) throw parameter_error("initial: slow_decay eta must be positive");
        break;
    }
    if (mollify_eps < 0.0 || window_eps < 0.0) {
        throw parameter_error("initial: smoothing parameters must be >= 0");
    }
}

Spectrum velocity_field(const Spectrum& theta, const VelocityKind& v) {
    return v.is_hilbert() ? hilbert(theta) : bessel_potential(theta, v.alpha);
}

Field velocity_field(const Field& theta, const VelocityKind& v) {
    return synthesize(velocity_field(forward_transform(theta), v));
}

Spectrum nonlinear_rhs(const Spectrum& theta, const ModelParams& p, RhsForm form) {
    if (p.linear_only) return Spectrum(theta.grid);
    const Spectrum u_hat = velocity_field(theta, p.velocity);
    const Field u = synthesize(u_hat);
    const Field ux = synthesize(derivative(u_hat));
    const Field th = synthesize(theta);

    Spectrum out(theta.grid);
    if (form == RhsForm::advective) {
        const Field thx = synthesize(derivative(theta));
        const Spectrum advection = dealias(forward_transform(multiply(u, thx)));
        const Spectrum stretching = dealias(forward_transform(multiply(ux, th)));
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = -advection[i] - p.delta * stretching[i];
        }
    } else {
        const Spectrum flux = derivative(dealias(forward_transform(multiply(u, th))));
        const Spectrum stretching = dealias(forward_transform(multiply(ux, th)));
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = -flux[i] + (1.0 - p.delta) * stretching[i];
        }
    }
    return out;
}

Field rhs(const Field& theta, const ModelParams& p, RhsForm form) {
    p.validate();
    if (!all_finite(theta)) {
        throw blow_up_error("rhs: non-finite state", std::nan(""));
    }
    const Spectrum th_hat = forward_transform(theta);
    Spectrum total = nonlinear_rhs(th_hat, p, form);
    const auto& k = theta.grid->wavenumbers();
    for (std::size_t i = 0; i < total.size(); ++i) {
        const double damp = p.nu * lambda_multiplier(k[i], p.gamma) + p.epsilon_visc * k[i] * k[i];
        total[i] -= damp * th_hat[i];
    }
    Field out = synthesize(total);
    if (!all_finite(out)) {
        throw blow_up_error("rhs: evaluation produced non-finite values", std::nan(""));
    }
    return out;
}

Field make_initial_data(const InitialDataSpec& spec, const GridPtr& g) {
    spec.validate();
    Field f(g);
    const double L = g->length();

    switch (spec.kind) {
    case InitialDataSpec::Kind::positive_bump: {
        const double k1 = 2.0 * std::numbers::pi / L;
        for (std::size_t i = 0; i < f.size(); ++i) {
            f[i] = spec.base + spec.amplitude * std::cos(k1 * g->node(i));
        }
        break;
    }
    case InitialDataSpec::Kind::gaussian: {
        for (std::size_t i = 0; i < f.size(); ++i) {
            const double d = g->node(i) - spec.center;
            f[i] = spec.height * std::exp(-0.5 * d * d / (spec.width * spec.width));
        }
        break;
    }
    case InitialDataSpec::Kind::trig_polynomial: {
        const int max_degree = static_cast<int>(g->size()) / 2 - 1;
        if (spec.degree > max_degree) {
            throw parameter_error("initial: trig_polynomial degree exceeds grid modes");
        }
        SplitMix64 rng(spec.seed);
        Spectrum s(g);
        for (int j = 1; j <= spec.degree; ++j) {
            const std::complex<double> c(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
            s[g->storage_index(j)] = c;
            s[g->storage_index(-j)] = std::conj(c);
        }
        double a0 = 0.0;
        for (const auto& c : s.coeffs) a0 += std::abs(c);
        if (!(a0 > 0.0)) {
            throw parameter_error("initial: trig_polynomial degenerated to zero; rescaling infeasible");
        }
        const double scale = spec.target_a0 / a0;
        for (auto& c : s.coeffs) c *= scale;
        f = synthesize(s);
        break;
    }
    case InitialDataSpec::Kind::slow_decay: {
        for (std::size_t i = 0; i < f.size(); ++i) {
            const double x = g->node(i);
            f[i] = std::pow(1.0 + x * x, -0.5 * spec.eta);
        }
        break;
    }
    }

    if (spec.mollify_eps > 0.0) f = mollify(f, spec.mollify_eps);
    if (spec.window_eps > 0.0) f = wiener_window(f, spec.window_eps);
    return f;
}

double hilbert_consistency_residual(const Field& theta) {
    const Spectrum s = forward_transform(theta);
    const Field ux = synthesize(derivative(hilbert(s)));
    const Field lam = synthesize(fractional_laplacian(s, 1.0));
    return max_abs(ux - lam);
}

} // namespace nlt
