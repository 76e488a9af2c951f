#include "solitonlab/geometry/curvature.hpp"

#include "solitonlab/errors.hpp"
#include "solitonlab/format.hpp"

namespace solitonlab::geo {

FundamentalForms fundamental_forms(const Jet2& jet, double s, double t) {
    const Vec3 n = cross(jet.xs, jet.xt);
    const double area = norm(n);
    if (!(area > kDegeneracyThreshold)) {
        throw SingularChart("degenerate chart at (" + format_double(s) + ", " + format_double(t) + ")", s, t);
    }
    FundamentalForms out;
    out.N = (1.0 / area) * n;
    out.area_element = area;
    out.E = dot(jet.xs, jet.xs);
    out.F = dot(jet.xs, jet.xt);
    out.G = dot(jet.xt, jet.xt);
    out.e = dot(jet.xss, out.N);
    out.f = dot(jet.xst, out.N);
    out.g = dot(jet.xtt, out.N);
    return out;
}

FundamentalForms fundamental_forms(const SurfaceChart& chart, double s, double t) {
    return fundamental_forms(jet_eval(chart, s, t), s, t);
}

double mean_curvature(const FundamentalForms& m) {
    return (m.e * m.G - 2.0 * m.f * m.F + m.g * m.E) / (2.0 * (m.E * m.G - m.F * m.F));
}

double mean_curvature(const SurfaceChart& chart, double s, double t) {
    return mean_curvature(fundamental_forms(chart, s, t));
}

double weighted_mean_curvature(const FundamentalForms& forms, const Density& density) {
    return mean_curvature(forms) - 0.5 * dot(forms.N, density.vector());
}

double weighted_mean_curvature(const SurfaceChart& chart, const Density& density, double s, double t) {
    return weighted_mean_curvature(fundamental_forms(chart, s, t), density);
}

}  // namespace solitonlab::geo
