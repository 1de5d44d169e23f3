#pragma once

#include <string>
#include <vector>

#include "nlt/functionals.hpp"
#include "nlt/models.hpp"

namespace nlt {

enum class Scheme { if_rk2, if_rk4 };

/// Either a fixed step or an advective CFL fraction c in (0,1].
struct DtPolicy {
    enum class Kind { fixed, cfl };
    Kind kind = Kind::fixed;
    double value = 1e-3;

    static DtPolicy fixed(double dt) { return {Kind::fixed, dt}; }
    static DtPolicy cfl(double c) { return {Kind::cfl, c}; }
};

struct RunConfig {
    GridPtr grid;
    ModelParams params;
    InitialDataSpec initial;
    double t_final = 1.0;
    DtPolicy dt_policy = DtPolicy::fixed(1e-3);
    int record_every = 10;
    WeightParams weight{0.5};
    std::vector<std::string> checks; // evaluated after the run
    bool fatal_min_max = false;      // abort the run when the principle fails
    Scheme scheme = Scheme::if_rk2;
    RhsForm form = RhsForm::advective;
    bool store_fields = false;

    void validate() const;
};

struct RunStatus {
    enum class Kind { completed, blow_up, check_failed };
    Kind kind = Kind::completed;
    double t = 0.0;          // blow-up / failure time
    std::string check_name;  // for check_failed
    double margin = 0.0;     // for check_failed

    bool completed() const { return kind == Kind::completed; }
};

struct TimeSeries {
    std::vector<DiagnosticsRecord> records;
    RunStatus status;
    Field final_state;          // last finite state
    std::vector<Field> snapshots; // one per record when store_fields is set
};

/// One integrating-factor step: the multiplier exp(-dt (nu|k|^gamma + eps k^2))
/// is applied exactly, the quadratic terms explicitly (RK2 by default).
Field step(const Field& theta, const ModelParams& p, double dt,
           Scheme scheme = Scheme::if_rk2, RhsForm form = RhsForm::advective);
Spectrum step(const Spectrum& theta, const ModelParams& p, double dt,
              Scheme scheme = Scheme::if_rk2, RhsForm form = RhsForm::advective);

/// dt = c dx / max(||u||_inf, 1e-8), capped at c dx.
double choose_dt(const Field& theta, const ModelParams& p, double c);

TimeSeries run(const RunConfig& cfg);

} // namespace nlt
