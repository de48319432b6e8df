#include "pdmosc/integrate.hpp"
#include "pdmosc/errors.hpp"
#include "pdmosc/transform.hpp"

#include <doctest.h>

#include <cmath>

using namespace pdmosc;

namespace {

PdmScenario uniform_scenario(double eta, double amp = 0.9) {
    return PdmScenario(ProfilePair::uniform(), DhoParams(1.0, eta),
                       AmplitudeVector(Vec{amp}));
}


} // namespace

TEST_SUITE("integrate") {

TEST_CASE("zero acceleration keeps the state constant") {
    AccelFn rhs = [](double, const Vec& x, const Vec&) { return Vec(x.size(), 0.0); };
    const Trajectory traj = integrate(rhs, PhaseState{0.0, {1.5}, {0.0}}, 4.0);
    CHECK(traj.t_end() == 4.0);
    for (double t : {0.3, 1.9, 3.999}) {
        CHECK(traj.position(t, 0) == doctest::Approx(1.5).epsilon(1e-15));
        CHECK(traj.velocity(t, 0) == doctest::Approx(0.0));
    }
}

TEST_CASE("under-damped oscillator matches the analytic solution") {
    const PdmScenario s = uniform_scenario(0.05);
    const PdmState init = pdm_solution(s, 0.0);
    const Trajectory traj =
        integrate(s.profile, s.params, PhaseState{0.0, init.x, init.xdot}, 20.0);
    // RMS over a uniform grid
    double sum2 = 0.0;
    const int n = 2000;
    for (int i = 0; i <= n; ++i) {
        const double t = 20.0 * i / double(n);
        const double err = traj.position(t, 0) - pdm_solution(s, t).x[0];
        sum2 += err * err;
    }
    CHECK(std::sqrt(sum2 / (n + 1)) <= 1e-7);
}

TEST_CASE("dense output reproduces samples exactly and interpolates accurately") {
    const PdmScenario s = uniform_scenario(0.05);
    const PdmState init = pdm_solution(s, 0.0);
    IntegratorConfig cfg;
    cfg.rel_tol = 1e-8;
    cfg.abs_tol = 1e-10;
    const Trajectory traj =
        integrate(s.profile, s.params, PhaseState{0.0, init.x, init.xdot}, 20.0, cfg);

    double sample_err = 0.0, dense_err = 0.0, ymax = 0.0;
    for (std::size_t k = 0; k < traj.sample_count(); ++k) {
        const PhaseState& smp = traj.sample(k);
        const PhaseState back = traj.at(smp.t);
        CHECK(back.x[0] == smp.x[0]);  // exact reproduction at sample times
        CHECK(back.xdot[0] == smp.xdot[0]);
        sample_err = std::max(sample_err,
                              std::abs(smp.x[0] - pdm_solution(s, smp.t).x[0]));
        ymax = std::max(ymax, std::abs(smp.x[0]));
        if (k + 1 < traj.sample_count()) {
            const double tm = 0.5 * (smp.t + traj.sample(k + 1).t);
            dense_err = std::max(dense_err,
                                 std::abs(traj.position(tm, 0) - pdm_solution(s, tm).x[0]));
        }
    }
    // interpolation must not degrade the solution by more than ~10x
    CHECK(dense_err <= 10.0 * (sample_err + cfg.abs_tol + cfg.rel_tol * ymax));
}

TEST_CASE("observed convergence order of the embedded pair is ~5") {
    const PdmScenario s = uniform_scenario(0.05);
    const PdmState init = pdm_solution(s, 0.0);
    auto error_with_step = [&](double h) {
        IntegratorConfig cfg;
        cfg.rel_tol = 1e30;  // defeat the error control: fixed steps of max_step
        cfg.abs_tol = 1e30;
        cfg.max_step = h;
        cfg.initial_step = h;
        const Trajectory traj =
            integrate(s.profile, s.params, PhaseState{0.0, init.x, init.xdot}, 5.0, cfg);
        double worst = 0.0;
        for (std::size_t k = 0; k < traj.sample_count(); ++k) {
            const PhaseState& smp = traj.sample(k);
            worst = std::max(worst, std::abs(smp.x[0] - pdm_solution(s, smp.t).x[0]));
        }
        return worst;
    };
    const double e1 = error_with_step(0.2);
    const double e2 = error_with_step(0.1);
    const double order = std::log2(e1 / e2);
    CHECK(order >= 4.5);
}

TEST_CASE("time reversal through velocity flip returns to the start") {
    const PdmScenario s = uniform_scenario(0.0);
    const PdmState init = pdm_solution(s, 0.0);
    const Trajectory fwd =
        integrate(s.profile, s.params, PhaseState{0.0, init.x, init.xdot}, 7.0);
    const PhaseState end = fwd.at(7.0);
    const Trajectory bwd = integrate(s.profile, s.params,
                                     PhaseState{0.0, end.x, {-end.xdot[0]}}, 7.0);
    const PhaseState home = bwd.at(7.0);
    CHECK(std::abs(home.x[0] - init.x[0]) <= 1e-7);
    CHECK(std::abs(-home.xdot[0] - init.xdot[0]) <= 1e-7);
}

TEST_CASE("zero crossings of the undamped cosine") {
    const PdmScenario s = uniform_scenario(0.0, 1.0);
    const Trajectory traj =
        integrate(s.profile, s.params, PhaseState{0.0, {1.0}, {0.0}}, 10.0);
    const auto crossings = find_zero_crossings(traj, 0);
    REQUIRE(crossings.size() == 3);
    for (std::size_t k = 0; k < crossings.size(); ++k)
        CHECK(std::abs(crossings[k] - (M_PI / 2 + k * M_PI)) <= 1e-9);
}

TEST_CASE("critically damped decay never crosses zero") {
    const PdmScenario s = uniform_scenario(1.0, 1.0);
    const PdmState init = pdm_solution(s, 0.0);
    const Trajectory traj =
        integrate(s.profile, s.params, PhaseState{0.0, init.x, init.xdot}, 20.0);
    CHECK(find_zero_crossings(traj, 0).empty());
}

TEST_CASE("first crossing of an integrated PDM trajectory matches the q-frame") {
    PdmScenario s(ProfilePair::mathews_lakshmanan(2.0), DhoParams(1.0, 0.05),
                  AmplitudeVector(Vec{1.0}));
    const PdmState init = pdm_solution(s, 0.0);
    const Trajectory traj =
        integrate(s.profile, s.params, PhaseState{0.0, init.x, init.xdot}, 10.0);
    const auto crossings = find_zero_crossings(traj, 0);
    REQUIRE(!crossings.empty());
    // analytic oracle: first zero of e^{-eta w t} cos(w_d t)
    const double wd = std::sqrt(1.0 - 0.05 * 0.05);
    CHECK(std::abs(crossings[0] - M_PI / (2.0 * wd)) <= 1e-9);
}

TEST_CASE("domain boundary guard terminates a blow-up scenario") {
    // push a singular-rational state toward lambda x = 1 with enough energy
    // to come within the 1e-9 guard distance of the pole
    const ProfilePair sr = ProfilePair::singular_rational(1.0);
    const DhoParams p(1.0, 0.0);
    const Trajectory traj = integrate(sr, p, PhaseState{0.0, {0.999}, {3.0}}, 1.0);
    CHECK(traj.terminated_early());
    REQUIRE(traj.events().size() == 1);
    CHECK(traj.events()[0].kind == EventKind::DomainBoundary);
    CHECK(traj.t_end() < 1.0);
    const double gap = 1.0 - traj.sample(traj.sample_count() - 1).x[0];
    CHECK(gap == doctest::Approx(1e-9).epsilon(0.5));
    CHECK(gap > 0.0);
}

TEST_CASE("step budget is enforced") {
    const PdmScenario s = uniform_scenario(0.05);
    IntegratorConfig cfg;
    cfg.max_steps = 5;
    CHECK_THROWS_AS(
        integrate(s.profile, s.params, PhaseState{0.0, {0.9}, {0.0}}, 20.0, cfg),
        StepBudgetExceeded);
}

TEST_CASE("persistent domain rejections underflow the step") {
    AccelFn rhs = [](double t, const Vec&, const Vec&) -> Vec {
        if (t > 0.0)
            throw DomainError("nothing past t = 0");
        return {0.0};
    };
    CHECK_THROWS_AS(integrate(rhs, PhaseState{0.0, {1.0}, {1.0}}, 1.0), StepUnderflow);
}

TEST_CASE("an initial state outside the domain propagates DomainError") {
    const ProfilePair sr = ProfilePair::singular_rational(1.0);
    CHECK_THROWS_AS(integrate(sr, DhoParams(1.0, 0.0), PhaseState{0.0, {1.5}, {0.0}}, 1.0),
                    DomainError);
}

TEST_CASE("argument validation") {
    const PdmScenario s = uniform_scenario(0.0);
    CHECK_THROWS_AS(
        integrate(s.profile, s.params, PhaseState{1.0, {1.0}, {0.0}}, 1.0),
        std::invalid_argument);
    const Trajectory traj =
        integrate(s.profile, s.params, PhaseState{0.0, {1.0}, {0.0}}, 1.0);
    CHECK_THROWS_AS(traj.at(1.5), std::out_of_range);
    CHECK_THROWS_AS(find_zero_crossings(traj, 3), std::invalid_argument);
}

TEST_CASE("max_step caps every accepted step") {
    const PdmScenario s = uniform_scenario(0.05);
    IntegratorConfig cfg;
    cfg.max_step = 0.01;
    const Trajectory traj =
        integrate(s.profile, s.params, PhaseState{0.0, {0.9}, {0.0}}, 2.0, cfg);
    for (std::size_t k = 0; k + 1 < traj.sample_count(); ++k)
        CHECK(traj.sample(k + 1).t - traj.sample(k).t <= 0.01 * 1.01 + 1e-12);
}

} // TEST_SUITE
