#pragma once

#include "solitonlab/geometry/chart.hpp"

namespace solitonlab::geo {

/// |X_s x X_t| below this raises SingularChart.
inline constexpr double kDegeneracyThreshold = 1e-12;

struct FundamentalForms {
    double E = 0.0;
    double F = 0.0;
    double G = 0.0;
    double e = 0.0;
    double f = 0.0;
    double g = 0.0;
    /// X_s x X_t / |X_s x X_t|.
    Vec3 N;
    /// |X_s x X_t|.
    double area_element = 0.0;
};

/// (s, t) only label the SingularChart error.
FundamentalForms fundamental_forms(const Jet2& jet, double s = 0.0, double t = 0.0);
FundamentalForms fundamental_forms(const SurfaceChart& chart, double s, double t);

/// H = (eG - 2fF + gE) / (2 (EG - F^2)).
double mean_curvature(const FundamentalForms& forms);
double mean_curvature(const SurfaceChart& chart, double s, double t);

/// H_phi = H - <N, v> / 2.
double weighted_mean_curvature(const FundamentalForms& forms, const Density& density);
double weighted_mean_curvature(const SurfaceChart& chart, const Density& density, double s, double t);

}  // namespace solitonlab::geo
