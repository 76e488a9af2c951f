#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "solitonlab/errors.hpp"

namespace solitonlab::profiles {

template <std::size_t N>
using State = std::array<double, N>;

struct StepControl {
    double rtol = 1e-10;
    double atol = 1e-10;
    double initial_step = 0.0;  ///< 0 picks a step from the span length
    double max_step = std::numeric_limits<double>::infinity();
    double min_step = 1e-14;
    std::size_t max_steps = 2'000'000;
};

/// Accepted point of an integration: parameter, state and state derivative.
template <std::size_t N>
struct OdeNode {
    double t = 0.0;
    State<N> y{};
    State<N> dy{};
};

template <std::size_t N>
struct OdeRun {
    std::vector<OdeNode<N>> nodes;
    bool stopped_by_observer = false;
    bool domain_exit = false;
    std::size_t accepted = 0;
    std::size_t rejected = 0;
};

struct NoProjection {
    template <std::size_t N>
    void operator()(State<N>&) const {}
};

/// Dormand-Prince 5(4) with local extrapolation and mixed absolute/relative error control.
///
/// `rhs(t, y)` returns dy/dt and may throw DomainError, which rejects the trial
/// step; if the step then collapses below `min_step` the run ends with
/// `domain_exit`. `observe(node)` runs after every accepted step (including the
/// initial point) and returns false to stop. `project(y)` may modify each accepted
/// state before it is stored (e.g. re-orthonormalization).
template <std::size_t N, class Rhs, class Observer, class Projection = NoProjection>
OdeRun<N> dormand_prince(Rhs&& rhs, double t0, double t1, State<N> y0, const StepControl& control,
                         Observer&& observe, Projection&& project = {}) {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                            e6 = 22.0 / 525, e7 = -1.0 / 40;

    if (!(t1 > t0)) throw InvalidInput("integration span must be increasing");
    if (!(control.rtol > 0.0) || !(control.atol > 0.0)) throw InvalidInput("tolerances must be positive");

    OdeRun<N> run;
    project(y0);
    OdeNode<N> node{t0, y0, rhs(t0, y0)};
    run.nodes.push_back(node);
    if (!observe(node)) {
        run.stopped_by_observer = true;
        return run;
    }

    const double span = t1 - t0;
    double h = control.initial_step > 0.0 ? control.initial_step : std::min(1e-3 * span, 1e-2);
    h = std::min(h, control.max_step);

    auto axpy = [](const State<N>& y, double h_, std::initializer_list<std::pair<double, const State<N>*>> terms) {
        State<N> out = y;
        for (const auto& [coef, k] : terms) {
            if (coef == 0.0) continue;
            for (std::size_t i = 0; i < N; ++i) out[i] += h_ * coef * (*k)[i];
        }
        return out;
    };

    bool last_failure_domain = false;
    while (node.t < t1) {
        if (run.accepted + run.rejected >= control.max_steps) throw NumericFailure("step budget exhausted");
        const bool final_step = node.t + h >= t1;
        if (final_step) h = t1 - node.t;

        const double t = node.t;
        const State<N>& y = node.y;
        const State<N>& k1 = node.dy;
        State<N> k2, k3, k4, k5, k6, k7, y5;
        bool ok = true;
        try {
            k2 = rhs(t + c2 * h, axpy(y, h, {{a21, &k1}}));
            k3 = rhs(t + c3 * h, axpy(y, h, {{a31, &k1}, {a32, &k2}}));
            k4 = rhs(t + c4 * h, axpy(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
            k5 = rhs(t + c5 * h, axpy(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
            k6 = rhs(t + h, axpy(y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
            y5 = axpy(y, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
            k7 = rhs(t + h, y5);
        } catch (const DomainError&) {
            ok = false;
        }

        double err = std::numeric_limits<double>::infinity();
        if (ok) {
            double sum = 0.0;
            for (std::size_t i = 0; i < N; ++i) {
                const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
                const double scale = control.atol + control.rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
                sum += (e / scale) * (e / scale);
            }
            err = std::sqrt(sum / static_cast<double>(N));
            if (!std::isfinite(err)) ok = false;
        }

        if (!ok || err > 1.0) {
            ++run.rejected;
            last_failure_domain = !ok;
            h *= ok ? std::max(0.1, 0.9 * std::pow(err, -0.2)) : 0.25;
            if (h < control.min_step * std::max(1.0, std::abs(t))) {
                if (last_failure_domain) {
                    run.domain_exit = true;
                    return run;
                }
                throw NumericFailure("step size underflow at t = " + std::to_string(t));
            }
            continue;
        }

        ++run.accepted;
        State<N> y_new = y5;
        project(y_new);
        node = OdeNode<N>{final_step ? t1 : t + h, y_new, rhs(final_step ? t1 : t + h, y_new)};
        run.nodes.push_back(node);
        if (!observe(node)) {
            run.stopped_by_observer = true;
            return run;
        }
        const double grow = err == 0.0 ? 5.0 : std::min(5.0, std::max(0.2, 0.9 * std::pow(err, -0.2)));
        h = std::min(h * grow, control.max_step);
    }
    return run;
}

/// Classical fixed-step RK4 from t0 to t1 in `steps` equal steps; returns the final state.
template <std::size_t N, class Rhs>
State<N> rk4_fixed(Rhs&& rhs, double t0, double t1, State<N> y, std::size_t steps) {
    const double h = (t1 - t0) / static_cast<double>(steps);
    auto shifted = [](const State<N>& base, double scale, const State<N>& k) {
        State<N> out = base;
        for (std::size_t i = 0; i < N; ++i) out[i] += scale * k[i];
        return out;
    };
    double t = t0;
    for (std::size_t s = 0; s < steps; ++s) {
        const State<N> k1 = rhs(t, y);
        const State<N> k2 = rhs(t + 0.5 * h, shifted(y, 0.5 * h, k1));
        const State<N> k3 = rhs(t + 0.5 * h, shifted(y, 0.5 * h, k2));
        const State<N> k4 = rhs(t + h, shifted(y, h, k3));
        for (std::size_t i = 0; i < N; ++i) y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        t = t0 + static_cast<double>(s + 1) * h;
    }
    return y;
}

/// Cubic Hermite interpolation between (x0, y0, m0) and (x1, y1, m1).
inline double hermite(double x0, double y0, double m0, double x1, double y1, double m1, double x) {
    const double h = x1 - x0;
    const double u = (x - x0) / h;
    const double u2 = u * u;
    const double u3 = u2 * u;
    return (2 * u3 - 3 * u2 + 1) * y0 + (u3 - 2 * u2 + u) * h * m0 + (-2 * u3 + 3 * u2) * y1 + (u3 - u2) * h * m1;
}

}  // namespace solitonlab::profiles
