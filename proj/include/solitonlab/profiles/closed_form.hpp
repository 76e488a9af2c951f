#pragma once

#include <string_view>

#include "solitonlab/profiles/integrate.hpp"
#include "solitonlab/profiles/profile1d.hpp"

namespace solitonlab::profiles {

/// Explicit solution families of the translation-surface equation (with
/// f(x) = a1 x + a0) and the planar grim reaper.
enum class ClosedFormFamily {
    horizontal_plane,  ///< a1 = 0, gamma = 0, g = b2
    tilted_plane,      ///< g = b1 y + b0 with gamma = alpha a1 + beta b1
    log_cosine,        ///< alpha = beta = 0: g = b2 - (k^2/gamma) log cos((gamma y + b1)/k), k = sqrt(1 + a1^2)
    arcsin_exp,        ///< gamma = alpha a1: g = b1 - (k/beta) arcsin(exp(b2 - beta y))
    grim_reaper,       ///< y(x) = -(1/gamma) log cos(gamma x)
};

std::string_view closed_form_name(ClosedFormFamily family);
ClosedFormFamily parse_closed_form(std::string_view name);

struct ClosedFormParams {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double a0 = 0.0;
    double a1 = 0.0;
    double b0 = 0.0;
    double b1 = 0.0;
    double b2 = 0.0;
};

/// The g-profile (or y(x) for the grim reaper) with analytic derivatives.
/// Throws InvalidInput when the family's parameter constraints are violated.
Profile1D closed_form(ClosedFormFamily family, const ClosedFormParams& params);

/// The ODE whose solution the family is (translation or planar), spanning
/// [start, end] with initial data read off the closed form at `start`.
OdeSpec matching_ode(ClosedFormFamily family, const ClosedFormParams& params, double start, double end);

}  // namespace solitonlab::profiles
