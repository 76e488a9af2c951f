#pragma once

namespace solitonlab::profiles {

/// Rotational soliton profile: r r'' = (1 + r'^2)(1 - gamma r r'), i.e.
/// r'' = (1 + r'^2)/r - gamma r'(1 + r'^2). Throws DomainError for r <= 0.
double rotational_rhs(double gamma, double r, double dr);

/// Translation-surface profile with f(x) = a1 x + a0:
/// (1 + a1^2) g'' = (1 + a1^2 + g'^2)(-beta g' - alpha a1 + gamma).
double translation_rhs(double alpha, double beta, double gamma, double a1, double g, double dg);

/// Planar curve y'' / (1 + y'^2) = gamma.
double planar_rhs(double gamma, double dy);

}  // namespace solitonlab::profiles
