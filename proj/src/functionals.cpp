#include "nlt/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nlt/errors.hpp"
#include "nlt/fft.hpp"
#include "nlt/littlewood.hpp"
#include "nlt/operators.hpp"

namespace nlt {

void WeightParams::validate() const {
    if (!(beta > 0.0) || !(beta < 1.0)) {
        throw parameter_error("weight: beta must lie in (0,1), got " + std::to_string(beta));
    }
}

const std::vector<std::string>& DiagnosticsRecord::column_names() {
    static const std::vector<std::string> names = {
        "t", "min_val", "max_val", "l1", "l2", "linf", "mass",
        "sobolev_half", "sobolev_one", "gamma_half_l2", "gamma_plus_half_l2",
        "lambda_three_half_l2", "u_x_l2",
        "sobolev_dissipation_running", "l2_dissipation_running",
        "visc_l2_dissipation_running", "visc_hhalf_dissipation_running",
        "half_flux_running",
        "a0", "a1_dot", "a1", "a2_dot", "a1_dissipation_running",
        "w_l2", "w_h_half", "w_h1",
        "hilbert_identity_residual", "cordoba_min_gap",
    };
    return names;
}

std::vector<double> DiagnosticsRecord::to_row() const {
    return {t, min_val, max_val, l1, l2, linf, mass,
            sobolev_half, sobolev_one, gamma_half_l2, gamma_plus_half_l2,
            lambda_three_half_l2, u_x_l2,
            sobolev_dissipation_running, l2_dissipation_running,
            visc_l2_dissipation_running, visc_hhalf_dissipation_running,
            half_flux_running,
            a0, a1_dot, a1, a2_dot, a1_dissipation_running,
            w_l2, w_h_half, w_h1,
            hilbert_identity_residual, cordoba_min_gap};
}

DiagnosticsRecord DiagnosticsRecord::from_row(const std::vector<double>& row) {
    if (row.size() != column_names().size()) {
        throw parameter_error("diagnostics row has wrong column count");
    }
    DiagnosticsRecord r;
    std::size_t i = 0;
    r.t = row[i++]; r.min_val = row[i++]; r.max_val = row[i++];
    r.l1 = row[i++]; r.l2 = row[i++]; r.linf = row[i++]; r.mass = row[i++];
    r.sobolev_half = row[i++]; r.sobolev_one = row[i++]; r.gamma_half_l2 = row[i++];
    r.gamma_plus_half_l2 = row[i++]; r.lambda_three_half_l2 = row[i++]; r.u_x_l2 = row[i++];
    r.sobolev_dissipation_running = row[i++]; r.l2_dissipation_running = row[i++];
    r.visc_l2_dissipation_running = row[i++]; r.visc_hhalf_dissipation_running = row[i++];
    r.half_flux_running = row[i++];
    r.a0 = row[i++]; r.a1_dot = row[i++]; r.a1 = row[i++]; r.a2_dot = row[i++];
    r.a1_dissipation_running = row[i++];
    r.w_l2 = row[i++]; r.w_h_half = row[i++]; r.w_h1 = row[i++];
    r.hilbert_identity_residual = row[i++]; r.cordoba_min_gap = row[i++];
    return r;
}

double lp_norm(const Field& f, double p) {
    if (!(p >= 1.0)) throw parameter_error("lp_norm: p must be >= 1");
    if (std::isinf(p)) return max_abs(f);
    const double dx = f.grid->spacing();
    double acc = 0.0;
    if (p == 1.0) {
        for (double v : f.values) acc += std::abs(v);
        return dx * acc;
    }
    if (p == 2.0) {
        for (double v : f.values) acc += v * v;
        return std::sqrt(dx * acc);
    }
    for (double v : f.values) acc += std::pow(std::abs(v), p);
    return std::pow(dx * acc, 1.0 / p);
}

double sobolev_seminorm(const Spectrum& s_hat, double s) {
    if (!(s >= 0.0)) throw parameter_error("sobolev_seminorm: s must be >= 0");
    const double L = s_hat.grid->length();
    const auto& k = s_hat.grid->wavenumbers();
    double acc = 0.0;
    for (std::size_t i = 0; i < s_hat.size(); ++i) {
        if (k[i] == 0.0) continue;
        acc += std::pow(std::abs(k[i]), 2.0 * s) * std::norm(s_hat[i]);
    }
    return std::sqrt(L * acc);
}

double sobolev_seminorm(const Field& f, double s) {
    return sobolev_seminorm(forward_transform(f), s);
}

double wiener_norm(const Spectrum& s_hat, double alpha, bool homogeneous) {
    if (!(alpha >= 0.0)) throw parameter_error("wiener_norm: alpha must be >= 0");
    const auto& k = s_hat.grid->wavenumbers();
    double plain = 0.0, weighted = 0.0;
    for (std::size_t i = 0; i < s_hat.size(); ++i) {
        const double a = std::abs(s_hat[i]);
        plain += a;
        if (alpha > 0.0 && k[i] != 0.0) weighted += std::pow(std::abs(k[i]), alpha) * a;
    }
    if (alpha == 0.0) return plain;
    return homogeneous ? weighted : plain + weighted;
}

double wiener_norm(const Field& f, double alpha, bool homogeneous) {
    return wiener_norm(forward_transform(f), alpha, homogeneous);
}

Field weight_field(const WeightParams& w, const GridPtr& g) {
    w.validate();
    Field out(g);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double x = g->node(i);
        out[i] = std::pow(1.0 + x * x, -0.5 * w.beta);
    }
    return out;
}

namespace {

double weighted_l2(const Field& f, const Field& weight) {
    const double dx = f.grid->spacing();
    double acc = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * f[i] * weight[i];
    return std::sqrt(dx * acc);
}

} // namespace

double weighted_sobolev_norm(const Field& f, double s, const WeightParams& w) {
    static constexpr std::array<double, 5> supported = {0.0, 0.5, 1.0, 1.5, 2.0};
    if (std::find(supported.begin(), supported.end(), s) == supported.end()) {
        throw parameter_error("weighted_sobolev_norm: s must be one of {0, 1/2, 1, 3/2, 2}");
    }
    const Field weight = weight_field(w, f.grid);
    const double base = weighted_l2(f, weight);
    if (s == 0.0) return base;
    const Field lam = fractional_laplacian(f, s);
    const double high = weighted_l2(lam, weight);
    return std::sqrt(base * base + high * high);
}

double hilbert_identity_residual(const Field& f) {
    const Spectrum s = forward_transform(f);
    const Field fx = synthesize(derivative(s));
    const Field hfx = synthesize(hilbert(derivative(s)));
    const Field lam = synthesize(fractional_laplacian(s, 1.0));

    const Field lhs = hilbert(dealiased_product(fx, hfx));
    const Field rhs = 0.5 * (dealiased_product(lam, lam) - dealiased_product(fx, fx));
    return max_abs(lhs - rhs);
}

double cordoba_gap(const Field& f, double alpha) {
    if (!(alpha > 0.0) || alpha > 2.0) {
        throw parameter_error("cordoba_gap: alpha must lie in (0,2]");
    }
    const Field lam_f = fractional_laplacian(f, alpha);
    const Field lam_f2 = fractional_laplacian(multiply(f, f), alpha);
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < f.size(); ++i) {
        gap = std::min(gap, f[i] * lam_f[i] - 0.5 * lam_f2[i]);
    }
    return gap;
}

double cordoba_gap_cubic(const Field& f) {
    const Field lam_f = fractional_laplacian(f, 1.0);
    const Field f2 = multiply(f, f);
    const Field lam_f3 = fractional_laplacian(multiply(f2, f), 1.0);
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < f.size(); ++i) {
        gap = std::min(gap, f2[i] * lam_f[i] - lam_f3[i] / 3.0);
    }
    return gap;
}

Field commutator_half(const Field& psi, const Field& f) {
    require_same_grid(psi, f);
    const Field term1 = fractional_laplacian(dealiased_product(psi, f), 0.5);
    const Field lam_f = fractional_laplacian(f, 0.5);
    return term1 - dealiased_product(psi, lam_f);
}

double littlewood_paley_seminorm(const Field& f, double s) {
    if (!(std::abs(s) < 2.0)) {
        throw parameter_error("littlewood_paley_seminorm: need |s| < 2");
    }
    const Spectrum s_hat = forward_transform(f);
    const double L = f.grid->length();
    const auto& k = f.grid->wavenumbers();
    // shell energies keyed by shell index, accumulated directly in Fourier space
    std::map<int, double> shell_energy;
    for (std::size_t i = 0; i < s_hat.size(); ++i) {
        if (k[i] == 0.0) continue;
        shell_energy[dyadic_shell_index(std::abs(k[i]))] += L * std::norm(s_hat[i]);
    }
    double acc = 0.0;
    for (const auto& [j, e] : shell_energy) {
        acc += std::pow(2.0, 2.0 * static_cast<double>(j) * s) * e;
    }
    return std::sqrt(acc);
}

DiagnosticsRecord compute_diagnostics(const Field& theta, double t, const ModelParams& p,
                                      const WeightParams& w,
                                      const DiagnosticsRecord* prev) {
    DiagnosticsRecord r;
    r.t = t;

    const double dx = theta.grid->spacing();
    double mn = std::numeric_limits<double>::infinity();
    double mx = -std::numeric_limits<double>::infinity();
    double sum_abs = 0.0, sum_sq = 0.0, sum = 0.0;
    for (double v : theta.values) {
        mn = std::min(mn, v);
        mx = std::max(mx, v);
        sum_abs += std::abs(v);
        sum_sq += v * v;
        sum += v;
    }
    r.min_val = mn;
    r.max_val = mx;
    r.l1 = dx * sum_abs;
    r.l2 = std::sqrt(dx * sum_sq);
    r.linf = std::max(std::abs(mn), std::abs(mx));
    r.mass = dx * sum;

    const Spectrum s = forward_transform(theta);
    const double L = theta.grid->length();
    const auto& k = theta.grid->wavenumbers();
    const std::size_t nyq = theta.grid->nyquist_index();
    double e_half = 0.0, e_one = 0.0, e_gh = 0.0, e_gph = 0.0, e_32 = 0.0, e_ux = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double ak = std::abs(k[i]);
        const double c2 = std::norm(s[i]);
        const double ac = std::abs(s[i]);
        r.a0 += ac;
        if (ak == 0.0) continue;
        r.a1_dot += ak * ac;
        r.a2_dot += ak * ak * ac;
        e_half += ak * c2;
        if (i != nyq) e_one += ak * ak * c2; // matches the Nyquist-zeroed derivative
        e_gh += std::pow(ak, p.gamma) * c2;
        e_gph += std::pow(ak, p.gamma + 1.0) * c2;
        e_32 += ak * ak * ak * c2;
        const double uxm = ak * velocity_multiplier(k[i], p.velocity);
        if (i != nyq) e_ux += uxm * uxm * c2;
    }
    r.sobolev_half = std::sqrt(L * e_half);
    r.sobolev_one = std::sqrt(L * e_one);
    r.gamma_half_l2 = std::sqrt(L * e_gh);
    r.gamma_plus_half_l2 = std::sqrt(L * e_gph);
    r.lambda_three_half_l2 = std::sqrt(L * e_32);
    r.u_x_l2 = std::sqrt(L * e_ux);
    r.a1 = r.a0 + r.a1_dot;

    const Field weight = weight_field(w, theta.grid);
    const Field lam_half = synthesize(fractional_laplacian(s, 0.5));
    const Field lam_one = synthesize(fractional_laplacian(s, 1.0));
    r.w_l2 = weighted_l2(theta, weight);
    const double wh = weighted_l2(lam_half, weight);
    const double w1 = weighted_l2(lam_one, weight);
    r.w_h_half = std::sqrt(r.w_l2 * r.w_l2 + wh * wh);
    r.w_h1 = std::sqrt(r.w_l2 * r.w_l2 + w1 * w1);

    r.hilbert_identity_residual = hilbert_identity_residual(theta);
    r.cordoba_min_gap = cordoba_gap(theta, 1.0);

    if (prev) {
        const double h = 0.5 * (t - prev->t);
        auto trap = [h](double running, double a, double b) { return running + h * (a + b); };
        r.sobolev_dissipation_running =
            trap(prev->sobolev_dissipation_running, prev->gamma_plus_half_l2 * prev->gamma_plus_half_l2,
                 r.gamma_plus_half_l2 * r.gamma_plus_half_l2);
        r.l2_dissipation_running =
            trap(prev->l2_dissipation_running, prev->gamma_half_l2 * prev->gamma_half_l2,
                 r.gamma_half_l2 * r.gamma_half_l2);
        r.visc_l2_dissipation_running =
            trap(prev->visc_l2_dissipation_running, prev->sobolev_one * prev->sobolev_one,
                 r.sobolev_one * r.sobolev_one);
        r.visc_hhalf_dissipation_running =
            trap(prev->visc_hhalf_dissipation_running,
                 prev->lambda_three_half_l2 * prev->lambda_three_half_l2,
                 r.lambda_three_half_l2 * r.lambda_three_half_l2);
        r.half_flux_running = trap(prev->half_flux_running, prev->sobolev_half * prev->sobolev_half,
                                   r.sobolev_half * r.sobolev_half);
        r.a1_dissipation_running = trap(prev->a1_dissipation_running, prev->a1_dot + prev->a2_dot,
                                        r.a1_dot + r.a2_dot);
    }
    return r;
}

} // namespace nlt
