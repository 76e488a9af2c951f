#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "solitonlab/geometry/chart.hpp"
#include "solitonlab/profiles/closed_form.hpp"

namespace solitonlab::geo {

SurfaceChart cylinder_chart(double radius = 1.0, double s_lo = -1.0, double s_hi = 1.0);
/// r = cosh s.
SurfaceChart catenoid_chart(double s_lo = -1.0, double s_hi = 1.0);
/// r = sqrt(1 - s^2); |s| must stay below 1.
SurfaceChart sphere_chart(double s_lo = -0.9, double s_hi = 0.9);
/// z = (a1 x + a0) + (b1 y + b0) as a translation chart over [-1, 1]^2.
SurfaceChart plane_chart(double a1, double b1, double a0 = 0.0, double b0 = 0.0);
/// z = log(cos y) - log(cos x) over |x|, |y| <= 1.4.
SurfaceChart scherk_chart();
/// Translation chart with f = a1 x + a0 and g from the closed-form family.
/// The y-range is the family's domain shrunk by `margin` (and clipped to [-2, 2]);
/// x ranges over [-1, 1]. The grim reaper uses f = the closed form and g = 0.
SurfaceChart closed_form_chart(profiles::ClosedFormFamily family, const profiles::ClosedFormParams& params,
                               double margin = 0.05);
/// Rotational surface from the integrated profile r'' = (1 + r'^2)/r - gamma r'(1 + r'^2).
SurfaceChart rotational_chart(double gamma, double r0, double dr0, double s_lo, double s_hi);

/// Flags understood by chart_from_name.
struct ChartParams {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double a0 = 0.0;
    double a1 = 0.0;
    double b0 = 0.0;
    double b1 = 0.0;
    double b2 = 0.0;
    double radius = 1.0;
    double r0 = 1.0;
    double dr0 = 0.0;
    double s_lo = 0.0;
    double s_hi = 2.0;
};

/// cylinder, catenoid, sphere, plane, scherk, th7-case1..4, grim-reaper, rotational.
SurfaceChart chart_from_name(std::string_view family, const ChartParams& params);
const std::vector<std::string>& chart_family_names();

}  // namespace solitonlab::geo
