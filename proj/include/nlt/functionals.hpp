#pragma once

#include <array>
#include <string>
#include <vector>

#include "nlt/field.hpp"
#include "nlt/models.hpp"

namespace nlt {

/// Parameters of the weight w_beta(x) = (1 + x^2)^(-beta/2).
struct WeightParams {
    double beta = 0.5; // must lie in (0,1)
    void validate() const;
};

/// One snapshot of every tracked norm and running dissipation integral.
/// Running integrals are accumulated with the trapezoidal rule on the record
/// cadence and are zero at t = 0.
struct DiagnosticsRecord {
    double t = 0.0;

    // pointwise range
    double min_val = 0.0;
    double max_val = 0.0;

    // Lebesgue norms and the (signed) mass integral
    double l1 = 0.0;
    double l2 = 0.0;
    double linf = 0.0;
    double mass = 0.0;

    // homogeneous Sobolev data
    double sobolev_half = 0.0;          // ||Lambda^{1/2} theta||_{L2}
    double sobolev_one = 0.0;           // ||theta_x||_{L2}
    double gamma_half_l2 = 0.0;         // ||Lambda^{gamma/2} theta||_{L2}
    double gamma_plus_half_l2 = 0.0;    // ||Lambda^{(gamma+1)/2} theta||_{L2}
    double lambda_three_half_l2 = 0.0;  // ||Lambda^{3/2} theta||_{L2}
    double u_x_l2 = 0.0;                // ||u_x||_{L2} for the model velocity

    // running dissipation integrals
    double sobolev_dissipation_running = 0.0;    // int ||Lambda^{(gamma+1)/2} theta||^2
    double l2_dissipation_running = 0.0;         // int ||Lambda^{gamma/2} theta||^2
    double visc_l2_dissipation_running = 0.0;    // int ||theta_x||^2
    double visc_hhalf_dissipation_running = 0.0; // int ||Lambda^{3/2} theta||^2
    double half_flux_running = 0.0;              // int ||Lambda^{1/2} theta||^2

    // Wiener-scale data
    double a0 = 0.0;     // sum |c_j|
    double a1_dot = 0.0; // sum |k_j| |c_j|
    double a1 = 0.0;     // a0 + a1_dot
    double a2_dot = 0.0; // sum k_j^2 |c_j|
    double a1_dissipation_running = 0.0; // int ||theta_x||_{A^1} = int (a1_dot + a2_dot)

    // weighted norms
    double w_l2 = 0.0;
    double w_h_half = 0.0;
    double w_h1 = 0.0;

    // structural residuals
    double hilbert_identity_residual = 0.0;
    double cordoba_min_gap = 0.0;

    static const std::vector<std::string>& column_names();
    std::vector<double> to_row() const;
    static DiagnosticsRecord from_row(const std::vector<double>& row);
};

/// Riemann-sum L^p norm; p = infinity gives max |f|.
double lp_norm(const Field& f, double p);

/// Homogeneous Sobolev seminorm (L sum_{j != 0} |k_j|^{2s} |c_j|^2)^{1/2}.
double sobolev_seminorm(const Field& f, double s);
double sobolev_seminorm(const Spectrum& s_hat, double s);

/// Discrete Wiener norms. alpha = 0 gives sum_j |c_j| for either flavour;
/// for alpha > 0 the homogeneous norm is sum |k_j|^alpha |c_j| and the
/// inhomogeneous norm adds sum |c_j|.
double wiener_norm(const Field& f, double alpha, bool homogeneous);
double wiener_norm(const Spectrum& s_hat, double alpha, bool homogeneous);

/// Samples of w_beta on the grid.
Field weight_field(const WeightParams& w, const GridPtr& g);

/// Weighted Sobolev norm for s in {0, 1/2, 1, 3/2, 2}:
/// s = 0 is L^2(w dx); s > 0 combines it with ||Lambda^s f||_{L^2(w dx)}.
double weighted_sobolev_norm(const Field& f, double s, const WeightParams& w);

/// sup-norm defect of H(f_x H f_x) = [(Lambda f)^2 - (f_x)^2] / 2 with
/// dealiased products.
double hilbert_identity_residual(const Field& f);

/// min over the grid of f Lambda^alpha f - Lambda^alpha(f^2)/2. Nonnegative
/// in the continuum; slightly negative values measure discretization error.
double cordoba_gap(const Field& f, double alpha);

/// Cubic variant: min of f^2 Lambda f - Lambda(f^3)/3, meaningful for f >= 0.
double cordoba_gap_cubic(const Field& f);

/// [Lambda^{1/2}, psi] f = Lambda^{1/2}(psi f) - psi Lambda^{1/2} f with
/// dealiased products.
Field commutator_half(const Field& psi, const Field& f);

/// Dyadic-block seminorm (sum_j 2^{2js} ||Delta_j f||^2_{L2})^{1/2} over
/// sharp shells 2^{j-1} < |k| <= 2^j, |s| < 2.
double littlewood_paley_seminorm(const Field& f, double s);

/// Assemble the full record for one snapshot. `prev` feeds the trapezoidal
/// accumulation of the running integrals; pass nullptr at t = 0.
DiagnosticsRecord compute_diagnostics(const Field& theta, double t, const ModelParams& p,
                                      const WeightParams& w,
                                      const DiagnosticsRecord* prev);

} // namespace nlt
