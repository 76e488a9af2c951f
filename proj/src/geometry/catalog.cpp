#include "solitonlab/geometry/catalog.hpp"

#include <cmath>
#include <memory>
#include <numbers>

#include "solitonlab/errors.hpp"
#include "solitonlab/format.hpp"

namespace solitonlab::geo {

using namespace solitonlab::profiles;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Domain periodic(double s_lo, double s_hi) { return {s_lo, s_hi, 0.0, kTwoPi, true}; }

// Parameter interval for a closed-form profile: the domain shrunk by `margin`,
// a window of length 4 next to a single finite end, [-1, 1] when unbounded.
std::pair<double, double> usable_range(const Profile1D& p, double margin) {
    const bool lo_finite = std::isfinite(p.lo());
    const bool hi_finite = std::isfinite(p.hi());
    if (lo_finite && hi_finite) return {p.lo() + margin, p.hi() - margin};
    if (lo_finite) return {p.lo() + margin, p.lo() + margin + 4.0};
    if (hi_finite) return {p.hi() - margin - 4.0, p.hi() - margin};
    return {-1.0, 1.0};
}

}  // namespace

SurfaceChart cylinder_chart(double radius, double s_lo, double s_hi) {
    if (!(radius > 0.0)) throw InvalidInput("cylinder radius must be positive");
    return {"cylinder", Cyclic{constant_profile(0), constant_profile(0), constant_profile(radius)},
            periodic(s_lo, s_hi)};
}

SurfaceChart catenoid_chart(double s_lo, double s_hi) {
    return {"catenoid", Cyclic{constant_profile(0), constant_profile(0), cosh_profile()}, periodic(s_lo, s_hi)};
}

SurfaceChart sphere_chart(double s_lo, double s_hi) {
    if (!(s_lo > -1.0) || !(s_hi < 1.0)) throw InvalidInput("sphere chart needs -1 < s < 1");
    return {"sphere", Cyclic{constant_profile(0), constant_profile(0), sphere_profile()}, periodic(s_lo, s_hi)};
}

SurfaceChart plane_chart(double a1, double b1, double a0, double b0) {
    return {"plane", Translation{linear_profile(a1, a0), linear_profile(b1, b0)}, {-1.0, 1.0, -1.0, 1.0, false}};
}

SurfaceChart scherk_chart() {
    Graph graph{[](double x, double y) {
        const double cx = std::cos(x);
        const double cy = std::cos(y);
        return GraphJet{std::log(cy) - std::log(cx), std::tan(x), -std::tan(y), 1.0 / (cx * cx), 0.0,
                        -1.0 / (cy * cy)};
    }};
    return {"scherk", graph, {-1.4, 1.4, -1.4, 1.4, false}};
}

SurfaceChart closed_form_chart(ClosedFormFamily family, const ClosedFormParams& params, double margin) {
    const Profile1D profile = closed_form(family, params);
    const auto [lo, hi] = usable_range(profile, profile.open() ? margin : 0.0);
    const std::string name(closed_form_name(family));
    if (family == ClosedFormFamily::grim_reaper) {
        return {name, Translation{profile, constant_profile(0)}, {lo, hi, -1.0, 1.0, false}};
    }
    return {name, Translation{linear_profile(params.a1, params.a0), profile}, {-1.0, 1.0, lo, hi, false}};
}

SurfaceChart rotational_chart(double gamma, double r0, double dr0, double s_lo, double s_hi) {
    OdeSpec spec;
    spec.family = OdeFamily::rotational;
    spec.gamma = gamma;
    spec.start = s_lo;
    spec.end = s_hi;
    spec.value0 = r0;
    spec.deriv0 = dr0;
    auto trajectory = std::make_shared<const ProfileTrajectory>(integrate(spec));
    if (trajectory->stop_reason() != StopReason::span_end) {
        throw NumericFailure("rotational profile stopped (" + std::string(stop_reason_name(trajectory->stop_reason())) +
                             ") at s = " + format_double(trajectory->hi()));
    }
    return {"rotational", RotationalFromTrajectory{std::move(trajectory)}, periodic(s_lo, s_hi)};
}

const std::vector<std::string>& chart_family_names() {
    static const std::vector<std::string> names = {"cylinder",  "catenoid",  "sphere",    "plane",
                                                   "scherk",    "th7-case1", "th7-case2", "th7-case3",
                                                   "th7-case4", "grim-reaper", "rotational"};
    return names;
}

SurfaceChart chart_from_name(std::string_view family, const ChartParams& p) {
    if (family == "cylinder") return cylinder_chart(p.radius);
    if (family == "catenoid") return catenoid_chart();
    if (family == "sphere") return sphere_chart();
    if (family == "plane") return plane_chart(p.a1, p.b1, p.a0, p.b0);
    if (family == "scherk") return scherk_chart();
    if (family == "rotational") return rotational_chart(p.gamma, p.r0, p.dr0, p.s_lo, p.s_hi);
    for (auto f : {ClosedFormFamily::horizontal_plane, ClosedFormFamily::tilted_plane, ClosedFormFamily::log_cosine,
                   ClosedFormFamily::arcsin_exp, ClosedFormFamily::grim_reaper}) {
        if (closed_form_name(f) == family) {
            return closed_form_chart(f, {p.alpha, p.beta, p.gamma, p.a0, p.a1, p.b0, p.b1, p.b2});
        }
    }
    throw InvalidInput("unknown surface family '" + std::string(family) + "'");
}

}  // namespace solitonlab::geo
