#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nlt/errors.hpp"
#include "nlt/fft.hpp"
#include "nlt/functionals.hpp"
#include "nlt/timestepper.hpp"
#include "test_util.hpp"

using namespace nlt;
constexpr double pi = std::numbers::pi;

namespace {

Field cosine(const GridPtr& g, double mode = 1.0) {
    Field f(g);
    for (std::size_t i = 0; i < f.size(); ++i) {
        f[i] = std::cos(mode * 2.0 * pi * g->node(i) / g->length());
    }
    return f;
}

} // namespace

TEST_CASE("pure dissipation reproduces the exact mode decay") {
    auto g = make_grid(64, 2.0 * pi);
    ModelParams p;
    p.linear_only = true; // quadratic terms off
    const Field c = cosine(g);

    Field theta = step(c, p, 0.1);
    for (std::size_t i = 0; i < theta.size(); ++i) {
        CHECK(theta[i] == doctest::Approx(std::exp(-0.1) * c[i]).epsilon(1e-12));
    }

    // long-horizon exactness of the linear flow
    for (int n = 1; n < 100; ++n) theta = step(theta, p, 0.1);
    for (std::size_t i = 0; i < theta.size(); ++i) {
        CHECK(std::abs(theta[i] - std::exp(-10.0) * c[i]) <= 1e-10);
    }
}

TEST_CASE("constants are fixed points of the stepper") {
    auto g = make_grid(64, 2.0 * pi);
    ModelParams p;
    p.delta = 1.0;
    const Field c(g, 2.0);
    const Field next = step(c, p, 0.05);
    CHECK(max_abs(next - c) < 1e-13);
}

TEST_CASE("step rejects non-positive dt") {
    auto g = make_grid(64, 2.0 * pi);
    ModelParams p;
    CHECK_THROWS_AS(step(Field(g, 1.0), p, 0.0), parameter_error);
}

TEST_CASE("Richardson order estimate is at least two") {
    auto g = make_grid(128, 2.0 * pi);
    ModelParams p;
    p.delta = 1.0;
    const Field theta0 = test::random_positive(g, 10, 3, 1.0, 0.5);

    auto advance = [&](double dt, int n) {
        Field f = theta0;
        for (int i = 0; i < n; ++i) f = step(f, p, dt);
        return f;
    };
    const double T = 0.4;
    const Field s1 = advance(T / 8.0, 8);
    const Field s2 = advance(T / 16.0, 16);
    const Field s3 = advance(T / 32.0, 32);
    const double e1 = lp_norm(s1 - s2, 2.0);
    const double e2 = lp_norm(s2 - s3, 2.0);
    const double order = std::log2(e1 / e2);
    CHECK(order >= 1.9);

    // RK4 should be at least as accurate
    auto advance4 = [&](double dt, int n) {
        Field f = theta0;
        for (int i = 0; i < n; ++i) f = step(f, p, dt, Scheme::if_rk4);
        return f;
    };
    const Field r1 = advance4(T / 8.0, 8);
    const Field r2 = advance4(T / 16.0, 16);
    const Field r3 = advance4(T / 32.0, 32);
    const double f1 = lp_norm(r1 - r2, 2.0);
    const double f2 = lp_norm(r2 - r3, 2.0);
    CHECK(std::log2(f1 / f2) >= 3.5);
}

TEST_CASE("CFL step selection") {
    // grid with dx = 0.1 and a velocity of sup-norm 2 attained at a node
    auto g = make_grid(64, 6.4);
    ModelParams p;

    Field theta(g);
    for (std::size_t i = 0; i < theta.size(); ++i) {
        theta[i] = 2.0 * std::sin(2.0 * pi * g->node(i) / g->length());
    }
    CHECK(choose_dt(theta, p, 0.5) == doctest::Approx(0.025).epsilon(1e-12));

    // u = 0: capped at c dx
    CHECK(choose_dt(Field(g, 3.0), p, 0.5) == doctest::Approx(0.5 * g->spacing()));

    // halving dx halves dt on the same data
    auto g2 = make_grid(128, 6.4);
    Field theta2(g2);
    for (std::size_t i = 0; i < theta2.size(); ++i) {
        theta2[i] = 2.0 * std::sin(2.0 * pi * g2->node(i) / g2->length());
    }
    CHECK(choose_dt(theta2, p, 0.5) == doctest::Approx(0.0125).epsilon(1e-12));

    CHECK_THROWS_AS(choose_dt(theta, p, 1.5), parameter_error);
}

TEST_CASE("zero data stays zero") {
    RunConfig cfg;
    cfg.grid = make_grid(64, 2.0 * pi);
    cfg.initial.kind = InitialDataSpec::Kind::gaussian;
    cfg.initial.height = 0.0;
    cfg.t_final = 0.5;
    cfg.dt_policy = DtPolicy::fixed(0.05);

    const TimeSeries ts = run(cfg);
    CHECK(ts.status.completed());
    for (const auto& r : ts.records) {
        CHECK(r.linf == 0.0);
        CHECK(r.l2 == 0.0);
    }
}

TEST_CASE("positive bump run: cadence, positivity, determinism") {
    RunConfig cfg;
    cfg.grid = make_grid(256, 32.0 * pi);
    cfg.params.delta = 1.0;
    cfg.initial.base = 1.0;
    cfg.initial.amplitude = 0.5;
    cfg.t_final = 1.0;
    cfg.dt_policy = DtPolicy::fixed(0.01);
    cfg.record_every = 10;

    const TimeSeries ts = run(cfg);
    CHECK(ts.status.completed());
    CHECK(ts.records.front().t == 0.0);
    CHECK(ts.records.back().t == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t r = 0; r + 1 < ts.records.size(); ++r) {
        CHECK(ts.records[r].t < ts.records[r + 1].t);
    }
    for (const auto& r : ts.records) CHECK(r.min_val >= -1e-8);

    // bit-identical rerun
    const TimeSeries again = run(cfg);
    REQUIRE(again.records.size() == ts.records.size());
    for (std::size_t r = 0; r < ts.records.size(); ++r) {
        const auto a = ts.records[r].to_row();
        const auto b = again.records[r].to_row();
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    }
}

TEST_CASE("running dissipation integrals are nondecreasing") {
    RunConfig cfg;
    cfg.grid = make_grid(256, 32.0 * pi);
    cfg.params.delta = 0.5;
    cfg.params.epsilon_visc = 1e-3;
    cfg.initial.base = 1.0;
    cfg.initial.amplitude = 0.5;
    cfg.t_final = 0.5;
    cfg.dt_policy = DtPolicy::fixed(0.01);

    const TimeSeries ts = run(cfg);
    CHECK(ts.status.completed());
    for (std::size_t r = 0; r + 1 < ts.records.size(); ++r) {
        const auto& a = ts.records[r];
        const auto& b = ts.records[r + 1];
        CHECK(b.sobolev_dissipation_running >= a.sobolev_dissipation_running);
        CHECK(b.l2_dissipation_running >= a.l2_dissipation_running);
        CHECK(b.half_flux_running >= a.half_flux_running);
        CHECK(b.a1_dissipation_running >= a.a1_dissipation_running);
    }
}

TEST_CASE("CFL-driven run completes") {
    RunConfig cfg;
    cfg.grid = make_grid(128, 32.0 * pi);
    cfg.params.delta = 1.0;
    cfg.initial.base = 1.0;
    cfg.initial.amplitude = 0.5;
    cfg.t_final = 0.5;
    cfg.dt_policy = DtPolicy::cfl(0.5);

    const TimeSeries ts = run(cfg);
    CHECK(ts.status.completed());
    CHECK(ts.records.back().t == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("inviscid steep data trips the blow-up detector") {
    RunConfig cfg;
    cfg.grid = make_grid(128, 2.0 * pi);
    cfg.params.nu = 0.0;
    cfg.params.delta = 0.0;
    cfg.initial.kind = InitialDataSpec::Kind::gaussian;
    cfg.initial.width = 0.25;
    cfg.initial.height = 2.0;
    cfg.t_final = 20.0;
    cfg.dt_policy = DtPolicy::fixed(0.02);
    cfg.record_every = 5;

    const TimeSeries ts = run(cfg);
    CHECK(ts.status.kind == RunStatus::Kind::blow_up);
    CHECK(ts.status.t > 0.0);
    CHECK(ts.status.t < 20.0);
}

TEST_CASE("fatal in-run monitor terminates with check_failed") {
    // Bessel kind with a strongly negative stretching coefficient and no
    // dissipation: the sup norm grows, so the monitored principle fails.
    RunConfig cfg;
    cfg.grid = make_grid(256, 32.0 * pi);
    cfg.params.velocity = VelocityKind::bessel(0.25);
    cfg.params.delta = -3.0;
    cfg.params.nu = 0.0;
    cfg.initial.base = 1.0;
    cfg.initial.amplitude = 0.5;
    cfg.t_final = 10.0;
    cfg.dt_policy = DtPolicy::fixed(0.02);
    cfg.record_every = 5;
    cfg.fatal_min_max = true;

    const TimeSeries ts = run(cfg);
    CHECK(ts.status.kind == RunStatus::Kind::check_failed);
    CHECK(ts.status.check_name == "min_max");
    CHECK(ts.status.t > 0.0);
    CHECK(ts.status.margin < 0.0);
}

TEST_CASE("snapshots follow the record cadence") {
    RunConfig cfg;
    cfg.grid = make_grid(128, 32.0 * pi);
    cfg.params.delta = 1.0;
    cfg.initial.base = 1.0;
    cfg.initial.amplitude = 0.3;
    cfg.t_final = 0.2;
    cfg.dt_policy = DtPolicy::fixed(0.01);
    cfg.record_every = 4;
    cfg.store_fields = true;

    const TimeSeries ts = run(cfg);
    CHECK(ts.status.completed());
    CHECK(ts.snapshots.size() == ts.records.size());
    CHECK(max_abs(ts.snapshots.back() - ts.final_state) == 0.0);
}
