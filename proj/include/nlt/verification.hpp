#pragma once

#include <string>
#include <vector>

#include "nlt/timestepper.hpp"

namespace nlt {

/// Outcome of one inequality check over a TimeSeries.
///
/// worst_margin is the most negative slack seen over the series (positive =
/// satisfied); the verdict holds when worst_margin >= -tolerance. When the
/// hypotheses of the estimate are not met, applicable is false and holds
/// carries no meaning (reported as "not asserted").
struct EstimateVerdict {
    std::string name;
    bool applicable = false;
    bool holds = false;
    double worst_margin = 0.0;
    double tolerance = 0.0;
    double metric = 0.0; // check-specific measured scalar (rate, constant, ...)
    std::string note;

    bool failed() const { return applicable && !holds; }
};

/// Minimum/maximum principle. Hilbert kind (delta >= 0): the minimum never
/// drops below min(0, min theta_0) and the maximum never exceeds max theta_0.
/// Bessel kind: ||theta||_inf nonincreasing. Tolerance 1e-6 * ||theta_0||_inf.
EstimateVerdict check_min_max(const TimeSeries& series, const ModelParams& p,
                              double tol_rel = 1e-6);
EstimateVerdict check_min_max(const TimeSeries& series, const Field& theta0,
                              const ModelParams& p, double tol_rel = 1e-6);

/// H^{1/2} energy inequality: ||theta||^2_{H^{1/2}} plus twice the running
/// dissipation (viscous contribution credited to the dissipation side) stays
/// below its initial value. Applicable for the Hilbert kind with theta_0 >= 0
/// and delta >= 1/2.
EstimateVerdict check_energy(const TimeSeries& series, const ModelParams& p,
                             double tol_rel = 1e-4);

/// Discrete mass identity
///   ||theta(t)||_L1 = ||theta_0||_L1 + (1-delta) int ||Lambda^{1/2} theta||^2.
/// Applicable for the Hilbert kind, theta_0 >= 0, epsilon_visc = 0. The
/// default tolerance is 1e-8 for delta = 1 (exact conservation) and 1e-6
/// otherwise; it reflects time discretization only.
EstimateVerdict check_mass_identity(const TimeSeries& series, const ModelParams& p,
                                    double tol_abs = -1.0);

/// Wiener-norm decay at gamma = 1 under the discrete smallness threshold
/// ||theta_0||_{A^0} < 1/(2(1+|delta|)) (Bessel kind: delta = 0, threshold
/// 1/2): A^1 nonincreasing per record, and
///   A^1(t) + (1 - 2(1+|delta|)||theta_0||_{A^0}) int ||theta_x||_{A^1}
/// bounded by A^1(0).
EstimateVerdict check_wiener_decay(const TimeSeries& series, const ModelParams& p,
                                   double tol_rel = 1e-3, double mono_tol_rel = 1e-6);

/// At-most-exponential growth of the weighted norm (H^{1/2}(w dx) for the
/// Hilbert kind, H^1(w dx) for the Bessel kind), checked as slope stability:
/// later per-record log-slopes may not exceed twice the largest slope seen in
/// the first tenth of the run (clamped at zero so decaying runs pass) plus
/// slope_tol. metric reports the mean log-slope over the whole run.
EstimateVerdict check_weighted_growth(const TimeSeries& series, const ModelParams& p,
                                      double slope_tol = 0.05);

/// Critical-coupling velocity gradient bound at alpha = 1/2 - gamma/4:
/// mode-wise |k| (1+k^2)^(-alpha) <= max(1, |k|^{gamma/2}) over the whole
/// wavenumber grid, and the measured constant in
/// ||u_x|| <= C (||theta|| + ||Lambda^{gamma/2} theta||) stays <= 1 and
/// within twice its initial value.
EstimateVerdict check_critical_coupling(const TimeSeries& series, const ModelParams& p,
                                        const Grid& grid);

/// Continuity-in-data proxy: two runs of the same model from data eta apart
/// in L^2 stay within eta * exp(t + int(||theta_1x||^2 + ||theta_2x||^2)).
/// Requires both runs to carry field snapshots. metric reports the terminal
/// L^2 difference.
EstimateVerdict two_run_stability(const TimeSeries& run1, const TimeSeries& run2,
                                  double tol_rel = 0.01);

/// Names accepted in RunConfig::checks.
const std::vector<std::string>& known_checks();

/// Evaluate the named single-run checks with default tolerances.
std::vector<EstimateVerdict> run_checks(const TimeSeries& series, const ModelParams& p,
                                        const Grid& grid,
                                        const std::vector<std::string>& names);

} // namespace nlt
