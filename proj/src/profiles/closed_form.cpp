#include "solitonlab/profiles/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "solitonlab/errors.hpp"

namespace solitonlab::profiles {

namespace {

bool nearly(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)}); }

}  // namespace

std::string_view closed_form_name(ClosedFormFamily family) {
    switch (family) {
        case ClosedFormFamily::horizontal_plane: return "th7-case1";
        case ClosedFormFamily::tilted_plane: return "th7-case2";
        case ClosedFormFamily::log_cosine: return "th7-case3";
        case ClosedFormFamily::arcsin_exp: return "th7-case4";
        case ClosedFormFamily::grim_reaper: return "grim-reaper";
    }
    return "?";
}

ClosedFormFamily parse_closed_form(std::string_view name) {
    for (auto f : {ClosedFormFamily::horizontal_plane, ClosedFormFamily::tilted_plane, ClosedFormFamily::log_cosine,
                   ClosedFormFamily::arcsin_exp, ClosedFormFamily::grim_reaper}) {
        if (closed_form_name(f) == name) return f;
    }
    throw InvalidInput("unknown closed-form family '" + std::string(name) + "'");
}

Profile1D closed_form(ClosedFormFamily family, const ClosedFormParams& p) {
    const double k2 = 1.0 + p.a1 * p.a1;
    const double k = std::sqrt(k2);
    switch (family) {
        case ClosedFormFamily::horizontal_plane: {
            if (p.a1 != 0.0 || p.gamma != 0.0) throw InvalidInput("th7-case1 needs a1 = 0 and gamma = 0");
            const double b2 = p.b2;
            return {"th7-case1", -kUnbounded, kUnbounded, false, [b2](double) { return Jet1{b2, 0.0, 0.0}; }};
        }
        case ClosedFormFamily::tilted_plane: {
            if (!nearly(p.gamma, p.alpha * p.a1 + p.beta * p.b1)) {
                throw InvalidInput("th7-case2 needs gamma = alpha a1 + beta b1");
            }
            const double b1 = p.b1;
            const double b0 = p.b0;
            return {"th7-case2", -kUnbounded, kUnbounded, false,
                    [b1, b0](double y) { return Jet1{b1 * y + b0, b1, 0.0}; }};
        }
        case ClosedFormFamily::log_cosine: {
            if (p.alpha != 0.0 || p.beta != 0.0 || p.gamma == 0.0) {
                throw InvalidInput("th7-case3 needs alpha = beta = 0 and gamma != 0");
            }
            // cos((gamma y + b1)/k) > 0  <=>  |gamma y + b1| < k pi/2
            const double half = k * std::numbers::pi / 2.0;
            const double y_a = (-half - p.b1) / p.gamma;
            const double y_b = (half - p.b1) / p.gamma;
            const double gamma = p.gamma;
            const double b1 = p.b1;
            const double b2 = p.b2;
            return {"th7-case3", std::min(y_a, y_b), std::max(y_a, y_b), true, [=](double y) {
                        const double theta = (gamma * y + b1) / k;
                        const double c = std::cos(theta);
                        return Jet1{b2 - (k2 / gamma) * std::log(c), k * std::tan(theta), gamma / (c * c)};
                    }};
        }
        case ClosedFormFamily::arcsin_exp: {
            if (!nearly(p.gamma, p.alpha * p.a1) || p.beta == 0.0) {
                throw InvalidInput("th7-case4 needs gamma = alpha a1 and beta != 0");
            }
            // q = exp(b2 - beta y) < 1  <=>  beta y > b2
            const double edge = p.b2 / p.beta;
            const double lo = p.beta > 0.0 ? edge : -kUnbounded;
            const double hi = p.beta > 0.0 ? kUnbounded : edge;
            const double beta = p.beta;
            const double b1 = p.b1;
            const double b2 = p.b2;
            return {"th7-case4", lo, hi, true, [=](double y) {
                        const double q = std::exp(b2 - beta * y);
                        const double one_minus = 1.0 - q * q;
                        const double root = std::sqrt(one_minus);
                        return Jet1{b1 - (k / beta) * std::asin(q), k * q / root,
                                    -beta * k * q / (one_minus * root)};
                    }};
        }
        case ClosedFormFamily::grim_reaper: {
            if (p.gamma == 0.0) throw InvalidInput("grim-reaper needs gamma != 0");
            const double gamma = p.gamma;
            const double edge = std::numbers::pi / (2.0 * std::abs(gamma));
            return {"grim-reaper", -edge, edge, true, [gamma](double x) {
                        const double c = std::cos(gamma * x);
                        return Jet1{-std::log(c) / gamma, std::tan(gamma * x), gamma / (c * c)};
                    }};
        }
    }
    throw InvalidInput("unknown closed-form family");
}

OdeSpec matching_ode(ClosedFormFamily family, const ClosedFormParams& params, double start, double end) {
    const Profile1D profile = closed_form(family, params);
    const Jet1 jet = profile(start);
    OdeSpec spec;
    spec.family = family == ClosedFormFamily::grim_reaper ? OdeFamily::planar : OdeFamily::translation;
    spec.alpha = params.alpha;
    spec.beta = params.beta;
    spec.gamma = params.gamma;
    spec.a1 = params.a1;
    spec.start = start;
    spec.end = end;
    spec.value0 = jet.value;
    spec.deriv0 = jet.d1;
    return spec;
}

}  // namespace solitonlab::profiles
