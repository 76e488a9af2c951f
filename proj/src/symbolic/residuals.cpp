#include "solitonlab/symbolic/residuals.hpp"

namespace solitonlab::sym {

namespace {

DiffPoly d(Base base, unsigned order = 0) { return DiffPoly::of(base, order); }

TrigPoly lift(const DiffPoly& p) { return TrigPoly(p); }

// r' + a' cos t + b' sin t
TrigPoly slope_term() {
    return lift(d(Base::r, 1)) + TrigPoly::cos(1, d(Base::a, 1)) + TrigPoly::sin(1, d(Base::b, 1));
}

}  // namespace

SymbolicDensity SymbolicDensity::generic() {
    return {d(Base::alpha), d(Base::beta), d(Base::gamma)};
}

TrigPoly riemann_u() {
    const TrigPoly x = lift(d(Base::a, 1)) + TrigPoly::cos(1, d(Base::r, 1));
    const TrigPoly y = lift(d(Base::b, 1)) + TrigPoly::sin(1, d(Base::r, 1));
    const TrigPoly accel = lift(d(Base::r, 2)) + TrigPoly::cos(1, d(Base::a, 2)) + TrigPoly::sin(1, d(Base::b, 2));
    return lift(DiffPoly(1)) + x * x + y * y - lift(d(Base::r)) * accel;
}

TrigPoly riemann_w() {
    const TrigPoly l = slope_term();
    return lift(DiffPoly(1)) + l * l;
}

TrigPoly build_riemann_residual(const SymbolicDensity& density) {
    const TrigPoly normal_dot = TrigPoly::cos(1, -density.alpha) + TrigPoly::sin(1, -density.beta) +
                                lift(density.gamma) * slope_term();
    return riemann_u() - lift(d(Base::r)) * riemann_w() * normal_dot;
}

TrigPoly build_cmc_squared_residual(const DiffPoly& c) {
    const TrigPoly r = lift(d(Base::r));
    const TrigPoly w = riemann_w();
    const TrigPoly lhs = riemann_u() - r * w * slope_term();
    return lhs * lhs - lift(c * c) * r * r * w * w * w;
}

TrigPoly cleared_residual(const FrameVector& xs, const FrameVector& xt, const FrameVector& xss,
                          const FrameVector& xst, const FrameVector& xtt, const FrameVector& density) {
    const FrameVector normal = cross(xs, xt);
    const TrigPoly e_big = dot(xs, xs);
    const TrigPoly f_big = dot(xs, xt);
    const TrigPoly g_big = dot(xt, xt);
    const TrigPoly e = dot(normal, xss);
    const TrigPoly f = dot(normal, xst);
    const TrigPoly g = dot(normal, xtt);
    const TrigPoly two(DiffPoly(2));
    const TrigPoly numerator = e * g_big - two * f * f_big + g * e_big;
    const TrigPoly metric = e_big * g_big - f_big * f_big;
    return numerator - dot(normal, density) * metric;
}

TrigPoly build_frenet_residual() {
    const DerivationTable table = DerivationTable::frenet();
    const TrigPoly r = lift(d(Base::r));
    const FrameVector circle(TrigPoly{}, TrigPoly::cos(1) * r, TrigPoly::sin(1) * r);
    const FrameVector center_velocity(lift(d(Base::u)), lift(d(Base::v)), lift(d(Base::w)));

    const FrameVector xs = center_velocity + circle.d_ds_frenet(table);
    const FrameVector xt = circle.d_dt();
    const FrameVector xss = xs.d_ds_frenet(table);
    const FrameVector xst = xt.d_ds_frenet(table);
    const FrameVector xtt = xt.d_dt();
    const FrameVector e3(lift(d(Base::t3)), lift(d(Base::n3)), lift(d(Base::b3)));
    return cleared_residual(xs, xt, xss, xst, xtt, e3);
}

TrigPoly build_general_cleared_residual(const SymbolicDensity& density) {
    const DerivationTable table = DerivationTable::standard();
    const TrigPoly r = lift(d(Base::r));
    const FrameVector xs(lift(d(Base::a, 1)) + TrigPoly::cos(1, d(Base::r, 1)),
                         lift(d(Base::b, 1)) + TrigPoly::sin(1, d(Base::r, 1)), lift(DiffPoly(1)));
    const FrameVector xt(-(TrigPoly::sin(1) * r), TrigPoly::cos(1) * r, TrigPoly{});
    const FrameVector xss = xs.d_ds_fixed(table);
    const FrameVector xst = xt.d_ds_fixed(table);
    const FrameVector xtt = xt.d_dt();
    const FrameVector v(lift(density.alpha), lift(density.beta), lift(density.gamma));
    return cleared_residual(xs, xt, xss, xst, xtt, v);
}

}  // namespace solitonlab::sym
