#pragma once

#include <functional>
#include <memory>
#include <string>
#include <variant>

#include "solitonlab/geometry/frenet_curve.hpp"
#include "solitonlab/geometry/vec3.hpp"
#include "solitonlab/profiles/integrate.hpp"
#include "solitonlab/profiles/profile1d.hpp"

namespace solitonlab::geo {

/// Position and partial derivatives up to order two at one parameter point.
struct Jet2 {
    Vec3 x;
    Vec3 xs;
    Vec3 xt;
    Vec3 xss;
    Vec3 xst;
    Vec3 xtt;
};

/// Parameter rectangle [s_lo, s_hi] x [t_lo, t_hi]; t-periodic charts identify t_lo with t_hi.
struct Domain {
    double s_lo = 0.0;
    double s_hi = 1.0;
    double t_lo = 0.0;
    double t_hi = 1.0;
    bool t_periodic = false;

    bool contains(double s, double t) const { return s >= s_lo && s <= s_hi && t >= t_lo && t <= t_hi; }
};

/// X(s, t) = (a(s) + r(s) cos t, b(s) + r(s) sin t, s).
struct Cyclic {
    profiles::Profile1D a;
    profiles::Profile1D b;
    profiles::Profile1D r;
};

/// X(x, y) = (x, y, f(x) + g(y)).
struct Translation {
    profiles::Profile1D f;
    profiles::Profile1D g;
};

/// z = u(x, y) with its derivatives up to order two.
struct GraphJet {
    double u = 0.0;
    double ux = 0.0;
    double uy = 0.0;
    double uxx = 0.0;
    double uxy = 0.0;
    double uyy = 0.0;
};

struct Graph {
    std::function<GraphJet(double, double)> u;
};

/// Rotational surface around the z-axis whose radius is an integrated profile.
struct RotationalFromTrajectory {
    std::shared_ptr<const profiles::ProfileTrajectory> trajectory;
};

/// X(s, t) = c(s) + r(s) (cos t n(s) + sin t b(s)), where {t, n, b} is the Frenet
/// frame of a numerically integrated curve and c' = u t + v n + w b.
struct FrenetTube {
    std::shared_ptr<const FrenetCurve> curve;
    profiles::Profile1D r;
    CenterOffsets offsets;
};

using ChartFamily = std::variant<Cyclic, Translation, Graph, RotationalFromTrajectory, FrenetTube>;

class SurfaceChart {
public:
    SurfaceChart(std::string name, ChartFamily family, Domain domain);

    const std::string& name() const noexcept { return name_; }
    const ChartFamily& family() const noexcept { return family_; }
    const Domain& domain() const noexcept { return domain_; }

private:
    std::string name_;
    ChartFamily family_;
    Domain domain_;
};

/// Throws DomainError when (s, t) is outside the chart's domain.
Jet2 jet_eval(const SurfaceChart& chart, double s, double t);

}  // namespace solitonlab::geo
