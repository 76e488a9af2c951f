#include "solitonlab/geometry/chart.hpp"

#include <cmath>
#include <utility>

#include "solitonlab/errors.hpp"
#include "solitonlab/format.hpp"

namespace solitonlab::geo {

using profiles::Jet1;

namespace {

Jet2 cyclic_jet(const Jet1& a, const Jet1& b, const Jet1& r, double s, double t) {
    const double c = std::cos(t);
    const double sn = std::sin(t);
    Jet2 j;
    j.x = {a.value + r.value * c, b.value + r.value * sn, s};
    j.xs = {a.d1 + r.d1 * c, b.d1 + r.d1 * sn, 1.0};
    j.xt = {-r.value * sn, r.value * c, 0.0};
    j.xss = {a.d2 + r.d2 * c, b.d2 + r.d2 * sn, 0.0};
    j.xst = {-r.d1 * sn, r.d1 * c, 0.0};
    j.xtt = {-r.value * c, -r.value * sn, 0.0};
    return j;
}

Jet2 graph_jet(const GraphJet& u, double x, double y) {
    Jet2 j;
    j.x = {x, y, u.u};
    j.xs = {1.0, 0.0, u.ux};
    j.xt = {0.0, 1.0, u.uy};
    j.xss = {0.0, 0.0, u.uxx};
    j.xst = {0.0, 0.0, u.uxy};
    j.xtt = {0.0, 0.0, u.uyy};
    return j;
}

Jet2 tube_jet(const FrenetTube& tube, double s, double t) {
    const FramePoint p = tube.curve->at(s);
    const Jet1 k = tube.curve->kappa()(s);
    const Jet1 sg = tube.curve->sigma()(s);
    const Jet1 u = tube.offsets.u(s);
    const Jet1 v = tube.offsets.v(s);
    const Jet1 w = tube.offsets.w(s);
    const Jet1 r = tube.r(s);

    const Vec3 dt = k.value * p.n;
    const Vec3 dn = -k.value * p.t + sg.value * p.b;
    const Vec3 db = -sg.value * p.n;
    const Vec3 ddn = -k.d1 * p.t - k.value * dt + sg.d1 * p.b + sg.value * db;
    const Vec3 ddb = -sg.d1 * p.n - sg.value * dn;

    const Vec3 dc = u.value * p.t + v.value * p.n + w.value * p.b;
    const Vec3 ddc = u.d1 * p.t + u.value * dt + v.d1 * p.n + v.value * dn + w.d1 * p.b + w.value * db;

    const double c = std::cos(t);
    const double sn = std::sin(t);
    const Vec3 rho = c * p.n + sn * p.b;
    const Vec3 rho_s = c * dn + sn * db;
    const Vec3 rho_ss = c * ddn + sn * ddb;
    const Vec3 rho_t = -sn * p.n + c * p.b;
    const Vec3 rho_st = -sn * dn + c * db;

    Jet2 j;
    j.x = p.center + r.value * rho;
    j.xs = dc + r.d1 * rho + r.value * rho_s;
    j.xt = r.value * rho_t;
    j.xss = ddc + r.d2 * rho + 2.0 * r.d1 * rho_s + r.value * rho_ss;
    j.xst = r.d1 * rho_t + r.value * rho_st;
    j.xtt = -r.value * rho;
    return j;
}

}  // namespace

SurfaceChart::SurfaceChart(std::string name, ChartFamily family, Domain domain)
    : name_(std::move(name)), family_(std::move(family)), domain_(domain) {
    if (!(domain_.s_lo < domain_.s_hi) || !(domain_.t_lo < domain_.t_hi)) {
        throw InvalidInput("chart '" + name_ + "' has an empty domain");
    }
    if (const auto* rot = std::get_if<RotationalFromTrajectory>(&family_); rot && !rot->trajectory) {
        throw InvalidInput("rotational chart needs a trajectory");
    }
    if (const auto* tube = std::get_if<FrenetTube>(&family_); tube && !tube->curve) {
        throw InvalidInput("tube chart needs a curve");
    }
}

Jet2 jet_eval(const SurfaceChart& chart, double s, double t) {
    if (!chart.domain().contains(s, t)) {
        throw DomainError("point (" + format_double(s) + ", " + format_double(t) + ") is outside chart '" +
                          chart.name() + "'");
    }
    return std::visit(
        [s, t](const auto& fam) -> Jet2 {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, Cyclic>) {
                return cyclic_jet(fam.a(s), fam.b(s), fam.r(s), s, t);
            } else if constexpr (std::is_same_v<T, RotationalFromTrajectory>) {
                return cyclic_jet(Jet1{}, Jet1{}, fam.trajectory->at(s), s, t);
            } else if constexpr (std::is_same_v<T, Translation>) {
                const Jet1 f = fam.f(s);
                const Jet1 g = fam.g(t);
                return graph_jet({f.value + g.value, f.d1, g.d1, f.d2, 0.0, g.d2}, s, t);
            } else if constexpr (std::is_same_v<T, Graph>) {
                return graph_jet(fam.u(s, t), s, t);
            } else {
                return tube_jet(fam, s, t);
            }
        },
        chart.family());
}

}  // namespace solitonlab::geo
