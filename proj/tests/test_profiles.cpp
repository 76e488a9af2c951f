#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "solitonlab/errors.hpp"
#include "solitonlab/profiles/closed_form.hpp"
#include "solitonlab/profiles/integrate.hpp"
#include "solitonlab/profiles/rhs.hpp"
#include "solitonlab/profiles/trajectory_io.hpp"

using namespace solitonlab;
using namespace solitonlab::profiles;

namespace {

OdeSpec catenary_spec(double end = 1.0) {
    OdeSpec spec;
    spec.family = OdeFamily::rotational;
    spec.gamma = 0.0;
    spec.start = 0.0;
    spec.end = end;
    spec.value0 = 1.0;
    spec.deriv0 = 0.0;
    return spec;
}

// Samples strictly inside the profile's domain, clipped to [lo_cap, hi_cap].
std::vector<double> interior_grid(const Profile1D& p, double lo_cap, double hi_cap, int n) {
    const double lo = std::max(p.lo(), lo_cap);
    const double hi = std::min(p.hi(), hi_cap);
    std::vector<double> xs;
    for (int i = 1; i < n; ++i) xs.push_back(lo + (hi - lo) * i / n);
    return xs;
}

double ode_residual(const OdeSpec& spec, const Jet1& j) { return j.d2 - spec.second_derivative(0.0, j.value, j.d1); }

}  // namespace

TEST_CASE("rotational rhs") {
    CHECK(rotational_rhs(0, 1, 0) == 1.0);
    CHECK(rotational_rhs(1, 1, 1) == 0.0);
    CHECK(rotational_rhs(3, 2, 0) == 0.5);
    CHECK_THROWS_AS(rotational_rhs(0, 0, 0), DomainError);
    CHECK_THROWS_AS(rotational_rhs(0, -1, 0), DomainError);
}

TEST_CASE("translation rhs") {
    CHECK(translation_rhs(0, 0, 2.5, 0, 7, 0) == 2.5);
    CHECK(translation_rhs(2, 5, 6, 3, 1, 0) == 0.0);
    CHECK(translation_rhs(0, 0, 2, 1, 0, 1) == 3.0);
}

TEST_CASE("planar rhs") {
    CHECK(planar_rhs(1, 0) == 1.0);
    CHECK(planar_rhs(0, 5) == 0.0);
}

TEST_CASE("catenary endpoint") {
    const ProfileTrajectory tr = integrate(catenary_spec());
    CHECK(tr.stop_reason() == StopReason::span_end);
    CHECK(tr.hi() == 1.0);
    CHECK(std::abs(tr.last().value - std::cosh(1.0)) < 1e-8);
    CHECK(std::abs(tr.last().deriv - std::sinh(1.0)) < 1e-8);
    for (double s : {0.013, 0.37, 0.5, 0.91}) {
        const Jet1 j = tr.at(s);
        CHECK(std::abs(j.value - std::cosh(s)) < 1e-8);
        CHECK(std::abs(j.d1 - std::sinh(s)) < 1e-8);
        CHECK(std::abs(j.d2 - std::cosh(s)) < 1e-8);
    }
    CHECK_THROWS_AS(tr.at(1.5), DomainError);
}

TEST_CASE("dense output hits the nodes exactly") {
    const ProfileTrajectory tr = integrate(catenary_spec());
    for (const auto& s : tr.samples()) {
        const Jet1 j = tr.at(s.param);
        CHECK(j.value == s.value);
        CHECK(j.d1 == s.deriv);
    }
}

TEST_CASE("catenary: no stop on [-3, 3]") {
    OdeSpec spec = catenary_spec(3.0);
    spec.start = -3.0;
    spec.value0 = std::cosh(3.0);
    spec.deriv0 = -std::sinh(3.0);
    const ProfileTrajectory tr = integrate(spec);
    CHECK(tr.stop_reason() == StopReason::span_end);
    CHECK(tr.hi() == 3.0);
    CHECK(std::abs(tr.last().value - std::cosh(3.0)) < 1e-7);
}

TEST_CASE("rk4 self-convergence") {
    // Error in the endpoint state (r, r'); the r error alone crosses zero near 30 steps.
    const OdeSpec spec = catenary_spec();
    double previous = 0.0;
    for (std::size_t steps : {10u, 20u, 40u, 80u}) {
        const auto [r, dr] = integrate_rk4(spec, steps);
        const double err = std::max(std::abs(r - std::cosh(1.0)), std::abs(dr - std::sinh(1.0)));
        if (previous > 0.0) CHECK(previous / err >= 14.0);
        previous = err;
    }
}

TEST_CASE("log-cosine translation profile") {
    ClosedFormParams p;
    p.gamma = 1.0;
    const Profile1D g = closed_form(ClosedFormFamily::log_cosine, p);
    const OdeSpec spec = matching_ode(ClosedFormFamily::log_cosine, p, -1.0, 2.0);
    const ProfileTrajectory tr = integrate(spec);
    CHECK(tr.stop_reason() == StopReason::blowup);
    CHECK(tr.hi() < std::numbers::pi / 2);
    CHECK(tr.hi() > std::numbers::pi / 2 - 1e-4);
    for (const auto& s : tr.samples()) {
        if (s.param > 1.5) break;
        CHECK(std::abs(s.value - g(s.param).value) < 1e-7);
    }
}

TEST_CASE("log-cosine with tilt and offset") {
    ClosedFormParams p;
    p.gamma = -0.7;
    p.a1 = 1.3;
    p.b1 = 0.2;
    p.b2 = 0.5;
    const Profile1D g = closed_form(ClosedFormFamily::log_cosine, p);
    const OdeSpec spec = matching_ode(ClosedFormFamily::log_cosine, p, g.lo() + 0.5, g.hi() - 0.5);
    const ProfileTrajectory tr = integrate(spec);
    CHECK(tr.stop_reason() == StopReason::span_end);
    for (const auto& s : tr.samples()) CHECK(std::abs(s.value - g(s.param).value) < 1e-7);
}

TEST_CASE("arcsin-exp translation profile") {
    ClosedFormParams p;
    p.alpha = 2.0;
    p.a1 = 0.5;
    p.gamma = 1.0;
    p.beta = 1.5;
    p.b1 = 0.3;
    p.b2 = -0.2;
    const Profile1D g = closed_form(ClosedFormFamily::arcsin_exp, p);
    const double start = g.lo() + 0.05;
    const OdeSpec spec = matching_ode(ClosedFormFamily::arcsin_exp, p, start, start + 4.0);
    const ProfileTrajectory tr = integrate(spec);
    CHECK(tr.stop_reason() == StopReason::span_end);
    for (const auto& s : tr.samples()) {
        CHECK(std::abs(s.value - g(s.param).value) < 1e-7);
        CHECK(std::abs(s.deriv - g(s.param).d1) < 1e-6);
    }
}

TEST_CASE("planar profile stops before the cosine zero") {
    OdeSpec spec;
    spec.family = OdeFamily::planar;
    spec.gamma = 1.0;
    spec.start = 0.0;
    spec.end = 3.0;
    spec.value0 = 0.0;
    spec.deriv0 = 0.0;
    const ProfileTrajectory tr = integrate(spec);
    CHECK(tr.stop_reason() == StopReason::blowup);
    CHECK(tr.hi() < std::numbers::pi / 2);
    CHECK(tr.hi() > std::numbers::pi / 2 - 1e-4);
}

TEST_CASE("rotational soliton stays regular") {
    OdeSpec spec;
    spec.family = OdeFamily::rotational;
    spec.gamma = 1.0;
    spec.start = 0.0;
    spec.end = 4.0;
    spec.value0 = 1.0;
    spec.deriv0 = 0.0;
    const ProfileTrajectory tr = integrate(spec);
    CHECK(tr.stop_reason() == StopReason::span_end);
    CHECK(tr.last().value > 1.0);
}

TEST_CASE("shrinking rotational profile reports a domain exit") {
    OdeSpec spec;
    spec.family = OdeFamily::rotational;
    spec.gamma = 0.0;
    spec.start = 0.0;
    spec.end = 5.0;
    spec.value0 = 0.5;
    spec.deriv0 = -50.0;
    spec.blowup_threshold = 1e300;
    const ProfileTrajectory tr = integrate(spec);
    CHECK(tr.stop_reason() != StopReason::span_end);
    CHECK(tr.hi() < 5.0);
}

TEST_CASE("closed forms satisfy their equations") {
    struct Item {
        ClosedFormFamily family;
        ClosedFormParams params;
    };
    const Item items[] = {
        {ClosedFormFamily::horizontal_plane, {0, 0, 0, 0.4, 0, 0, 0, 1.5}},
        {ClosedFormFamily::tilted_plane, {1, 1, 3, 0, 2, 0.5, 1, 0}},
        {ClosedFormFamily::log_cosine, {0, 0, 1, 0, 0, 0, 0, 0}},
        {ClosedFormFamily::log_cosine, {0, 0, -2.5, 0, 0.8, 0, 0.4, 1}},
        {ClosedFormFamily::arcsin_exp, {2, 1.5, 1, 0, 0.5, 0, 0.3, -0.2}},
        {ClosedFormFamily::arcsin_exp, {1, -0.5, -1, 0, -1, 0, 0, 0.4}},
        {ClosedFormFamily::grim_reaper, {0, 0, 1, 0, 0, 0, 0, 0}},
        {ClosedFormFamily::grim_reaper, {0, 0, -2, 0, 0, 0, 0, 0}},
    };
    for (const auto& item : items) {
        CAPTURE(closed_form_name(item.family));
        const Profile1D g = closed_form(item.family, item.params);
        const OdeSpec spec = matching_ode(item.family, item.params, std::max(g.lo(), -5.0) + 1e-3,
                                          std::min(g.hi(), 5.0) - 1e-3);
        // keep away from the singular ends, where g' is unbounded
        const double margin = g.open() ? 0.1 * std::min(1.0, g.hi() - g.lo()) : 0.0;
        for (double x : interior_grid(g, g.lo() + margin, g.hi() - margin, 200)) {
            if (!std::isfinite(x)) continue;
            const Jet1 j = g(x);
            const double scale = std::max(1.0, std::abs(j.d2));
            CHECK(std::abs(ode_residual(spec, j)) < 1e-9 * scale);
        }
    }
}

TEST_CASE("grim reaper residual on |gamma x| < 1.4") {
    ClosedFormParams p;
    for (double gamma : {1.0, 0.3, -2.0}) {
        p.gamma = gamma;
        const Profile1D y = closed_form(ClosedFormFamily::grim_reaper, p);
        for (int i = -140; i <= 140; ++i) {
            const double x = (i / 100.0) / std::abs(gamma);
            const Jet1 j = y(x);
            CHECK(std::abs(j.d2 / (1 + j.d1 * j.d1) - gamma) < 1e-10);
        }
    }
}

TEST_CASE("closed-form derivatives match finite differences") {
    const ClosedFormParams sets[] = {{0, 0, 1, 0, 0, 0, 0, 0}, {2, 1.5, 1, 0, 0.5, 0, 0.3, -0.2}};
    const ClosedFormFamily families[] = {ClosedFormFamily::log_cosine, ClosedFormFamily::arcsin_exp};
    const double h = 1e-4;
    for (int k = 0; k < 2; ++k) {
        const Profile1D g = closed_form(families[k], sets[k]);
        for (double x : interior_grid(g, -1.2, 1.2 + (g.lo() > -5 ? g.lo() : 0), 20)) {
            if (!g.contains(x - h) || !g.contains(x + h)) continue;
            const Jet1 j = g(x);
            const double fd1 = (g(x + h).value - g(x - h).value) / (2 * h);
            const double fd2 = (g(x + h).d1 - g(x - h).d1) / (2 * h);
            CHECK(std::abs(fd1 - j.d1) < 1e-5 * std::max(1.0, std::abs(j.d1)));
            CHECK(std::abs(fd2 - j.d2) < 1e-5 * std::max(1.0, std::abs(j.d2)));
        }
    }
}

TEST_CASE("closed-form constraints") {
    ClosedFormParams p;
    p.gamma = 1.0;
    CHECK_THROWS_AS(closed_form(ClosedFormFamily::horizontal_plane, p), InvalidInput);
    p.alpha = 1.0;
    CHECK_THROWS_AS(closed_form(ClosedFormFamily::log_cosine, p), InvalidInput);
    CHECK_THROWS_AS(closed_form(ClosedFormFamily::arcsin_exp, p), InvalidInput);  // gamma != alpha a1
    p.a1 = 1.0;
    CHECK_THROWS_AS(closed_form(ClosedFormFamily::arcsin_exp, p), InvalidInput);  // beta = 0
    p.beta = 2.0;
    p.b1 = 1.0;
    CHECK_THROWS_AS(closed_form(ClosedFormFamily::tilted_plane, p), InvalidInput);
    const Profile1D g = closed_form(ClosedFormFamily::arcsin_exp, p);
    CHECK_THROWS_AS(g(g.lo()), DomainError);
    CHECK_THROWS_AS(parse_closed_form("th7-case9"), InvalidInput);
    CHECK(parse_closed_form("th7-case3") == ClosedFormFamily::log_cosine);
}

TEST_CASE("invalid specs") {
    OdeSpec spec = catenary_spec();
    spec.value0 = 0.0;
    CHECK_THROWS_AS(integrate(spec), DomainError);
    spec = catenary_spec();
    spec.end = -1.0;
    CHECK_THROWS_AS(integrate(spec), InvalidInput);
    spec = catenary_spec();
    spec.rtol = 0.0;
    CHECK_THROWS_AS(integrate(spec), InvalidInput);
    CHECK_THROWS_AS(parse_family("elliptic"), InvalidInput);
}

TEST_CASE("trajectory output") {
    const ProfileTrajectory tr = integrate(catenary_spec());
    std::ostringstream csv;
    write_trajectory_csv(csv, tr);
    const std::string text = csv.str();
    CHECK(text.rfind("param,value,deriv\n0,1,0\n", 0) == 0);
    std::size_t rows = 0;
    for (char ch : text) rows += ch == '\n';
    CHECK(rows == tr.samples().size() + 1);

    const auto meta = trajectory_metadata(tr);
    CHECK(meta["family"] == "rotational");
    CHECK(meta["stop_reason"] == "span_end");
    CHECK(meta["span"][1] == 1.0);
    CHECK(meta["parameters"]["gamma"] == 0.0);
}
