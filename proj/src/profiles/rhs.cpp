#include "solitonlab/profiles/rhs.hpp"

#include "solitonlab/errors.hpp"
#include "solitonlab/format.hpp"

namespace solitonlab::profiles {

double rotational_rhs(double gamma, double r, double dr) {
    if (!(r > 0.0)) throw DomainError("rotational profile needs r > 0, got r = " + format_double(r));
    const double w = 1.0 + dr * dr;
    return w / r - gamma * dr * w;
}

double translation_rhs(double alpha, double beta, double gamma, double a1, double /*g*/, double dg) {
    const double k2 = 1.0 + a1 * a1;
    return (k2 + dg * dg) * (-beta * dg - alpha * a1 + gamma) / k2;
}

double planar_rhs(double gamma, double dy) { return gamma * (1.0 + dy * dy); }

}  // namespace solitonlab::profiles
