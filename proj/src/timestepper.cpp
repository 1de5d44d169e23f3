#include "nlt/timestepper.hpp"

#include <cmath>

#include "nlt/errors.hpp"
#include "nlt/fft.hpp"

namespace nlt {

void RunConfig::validate() const {
    if (!grid) throw parameter_error("run config: no grid");
    params.validate();
    initial.validate();
    weight.validate();
    if (!(t_final > 0.0)) throw parameter_error("run config: t_final must be positive");
    if (dt_policy.kind == DtPolicy::Kind::fixed && !(dt_policy.value > 0.0)) {
        throw parameter_error("run config: fixed dt must be positive");
    }
    if (dt_policy.kind == DtPolicy::Kind::cfl &&
        (!(dt_policy.value > 0.0) || dt_policy.value > 1.0)) {
        throw parameter_error("run config: cfl fraction must lie in (0,1]");
    }
    if (record_every < 1) throw parameter_error("run config: record_every must be >= 1");
}

namespace {

// exp(-dt * (nu |k|^gamma + eps k^2)) per mode
std::vector<double> decay_factors(const Grid& g, const ModelParams& p, double dt) {
    const auto& k = g.wavenumbers();
    std::vector<double> e(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) {
        e[i] = std::exp(-dt * (p.nu * lambda_multiplier(k[i], p.gamma) +
                               p.epsilon_visc * k[i] * k[i]));
    }
    return e;
}

Spectrum scaled(const Spectrum& s, const std::vector<double>& factors) {
    Spectrum out(s.grid);
    for (std::size_t i = 0; i < s.size(); ++i) out[i] = factors[i] * s[i];
    return out;
}

Spectrum if_rk2_step(const Spectrum& v, const ModelParams& p, double dt, RhsForm form,
                     const std::vector<double>& e_full) {
    const Spectrum k1 = nonlinear_rhs(v, p, form);
    Spectrum pred(v.grid);
    for (std::size_t i = 0; i < v.size(); ++i) pred[i] = e_full[i] * (v[i] + dt * k1[i]);
    const Spectrum k2 = nonlinear_rhs(pred, p, form);
    Spectrum out(v.grid);
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = e_full[i] * v[i] + 0.5 * dt * (e_full[i] * k1[i] + k2[i]);
    }
    return out;
}

Spectrum if_rk4_step(const Spectrum& v, const ModelParams& p, double dt, RhsForm form,
                     const std::vector<double>& e_full, const std::vector<double>& e_half) {
    const std::size_t n = v.size();
    const Spectrum k1 = nonlinear_rhs(v, p, form);
    Spectrum stage(v.grid);
    for (std::size_t i = 0; i < n; ++i) stage[i] = e_half[i] * (v[i] + 0.5 * dt * k1[i]);
    const Spectrum k2 = nonlinear_rhs(stage, p, form);
    for (std::size_t i = 0; i < n; ++i) stage[i] = e_half[i] * v[i] + 0.5 * dt * k2[i];
    const Spectrum k3 = nonlinear_rhs(stage, p, form);
    for (std::size_t i = 0; i < n; ++i) stage[i] = e_full[i] * v[i] + dt * e_half[i] * k3[i];
    const Spectrum k4 = nonlinear_rhs(stage, p, form);
    Spectrum out(v.grid);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = e_full[i] * v[i] +
                 dt / 6.0 * (e_full[i] * k1[i] + 2.0 * e_half[i] * (k2[i] + k3[i]) + k4[i]);
    }
    return out;
}

} // namespace

Spectrum step(const Spectrum& theta, const ModelParams& p, double dt, Scheme scheme,
              RhsForm form) {
    if (!(dt > 0.0)) throw parameter_error("step: dt must be positive");
    const std::vector<double> e_full = decay_factors(*theta.grid, p, dt);
    if (scheme == Scheme::if_rk2) {
        return if_rk2_step(theta, p, dt, form, e_full);
    }
    const std::vector<double> e_half = decay_factors(*theta.grid, p, 0.5 * dt);
    return if_rk4_step(theta, p, dt, form, e_full, e_half);
}

Field step(const Field& theta, const ModelParams& p, double dt, Scheme scheme, RhsForm form) {
    p.validate();
    if (!all_finite(theta)) throw invalid_field_error("step: non-finite input state");
    Spectrum next;
    try {
        next = step(forward_transform(theta), p, dt, scheme, form);
    } catch (const invalid_field_error&) {
        // a stage product already left the finite range
        throw blow_up_error("step: state left the finite range", std::nan(""));
    }
    if (!all_finite(next)) {
        throw blow_up_error("step: state left the finite range", std::nan(""));
    }
    return synthesize(next);
}

double choose_dt(const Field& theta, const ModelParams& p, double c) {
    if (!(c > 0.0) || c > 1.0) throw parameter_error("choose_dt: c must lie in (0,1]");
    const Field u = velocity_field(theta, p.velocity);
    const double umax = std::max(max_abs(u), 1e-8);
    const double dx = theta.grid->spacing();
    return std::min(c * dx / umax, c * dx);
}

namespace {

// Per-record minimum/maximum-principle monitor used when fatal_min_max is set.
bool min_max_violated(const DiagnosticsRecord& rec, const DiagnosticsRecord& first,
                      const ModelParams& p, double* margin) {
    const double tol = 1e-6 * first.linf;
    if (p.velocity.is_hilbert()) {
        if (p.delta < 0.0) return false; // principle not asserted
        const double floor_val = std::min(0.0, first.min_val);
        const double m = std::min(rec.min_val - floor_val, first.max_val - rec.max_val);
        *margin = m;
        return m < -tol;
    }
    *margin = first.linf - rec.linf;
    return *margin < -tol;
}

} // namespace

TimeSeries run(const RunConfig& cfg) {
    cfg.validate();
    TimeSeries ts;

    Field theta = make_initial_data(cfg.initial, cfg.grid);
    ts.records.push_back(compute_diagnostics(theta, 0.0, cfg.params, cfg.weight, nullptr));
    if (cfg.store_fields) ts.snapshots.push_back(theta);
    ts.final_state = theta;

    const double linf0 = ts.records.front().linf;
    const double blow_up_threshold = 1e6 * std::max(linf0, 1e-300);

    Spectrum state = forward_transform(theta);
    double t = 0.0;
    long step_count = 0;
    const double t_end = cfg.t_final;
    const double t_eps = 1e-12 * t_end;

    while (t < t_end - t_eps) {
        double dt;
        if (cfg.dt_policy.kind == DtPolicy::Kind::fixed) {
            dt = cfg.dt_policy.value;
        } else {
            theta = synthesize(state);
            dt = choose_dt(theta, cfg.params, cfg.dt_policy.value);
        }
        dt = std::min(dt, t_end - t);

        try {
            state = step(state, cfg.params, dt, cfg.scheme, cfg.form);
        } catch (const invalid_field_error&) {
            ts.status = {RunStatus::Kind::blow_up, t + dt, "", 0.0};
            return ts;
        } catch (const blow_up_error&) {
            ts.status = {RunStatus::Kind::blow_up, t + dt, "", 0.0};
            return ts;
        }
        t += dt;
        ++step_count;

        if (!all_finite(state)) {
            ts.status = {RunStatus::Kind::blow_up, t, "", 0.0};
            return ts;
        }

        const bool at_end = t >= t_end - t_eps;
        if (step_count % cfg.record_every == 0 || at_end) {
            theta = synthesize(state);
            if (!all_finite(theta) || max_abs(theta) > blow_up_threshold) {
                ts.status = {RunStatus::Kind::blow_up, t, "", 0.0};
                return ts;
            }
            ts.records.push_back(
                compute_diagnostics(theta, t, cfg.params, cfg.weight, &ts.records.back()));
            if (cfg.store_fields) ts.snapshots.push_back(theta);
            ts.final_state = theta;

            if (cfg.fatal_min_max) {
                double margin = 0.0;
                if (min_max_violated(ts.records.back(), ts.records.front(), cfg.params,
                                     &margin)) {
                    ts.status = {RunStatus::Kind::check_failed, t, "min_max", margin};
                    return ts;
                }
            }
        }
    }

    ts.status = {RunStatus::Kind::completed, t, "", 0.0};
    return ts;
}

} // namespace nlt
