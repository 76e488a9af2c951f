#include "solitonlab/profiles/profile1d.hpp"

#include <cmath>
#include <utility>

#include "solitonlab/errors.hpp"
#include "solitonlab/format.hpp"

namespace solitonlab::profiles {

Profile1D::Profile1D(std::string name, double lo, double hi, bool open, Evaluator fn)
    : name_(std::move(name)), lo_(lo), hi_(hi), open_(open), fn_(std::move(fn)) {
    if (!(lo_ < hi_)) throw InvalidInput("profile '" + name_ + "' has an empty domain");
}

bool Profile1D::contains(double x) const {
    if (open_) return x > lo_ && x < hi_;
    return x >= lo_ && x <= hi_;
}

Jet1 Profile1D::operator()(double x) const {
    if (!contains(x)) {
        throw DomainError("profile '" + name_ + "' evaluated outside its domain at " + format_double(x));
    }
    return fn_(x);
}

Profile1D constant_profile(double value) {
    return {"constant", -kUnbounded, kUnbounded, false, [value](double) { return Jet1{value, 0.0, 0.0}; }};
}

Profile1D linear_profile(double slope, double intercept) {
    return {"linear", -kUnbounded, kUnbounded, false,
            [=](double x) { return Jet1{slope * x + intercept, slope, 0.0}; }};
}

Profile1D taylor_profile(double x0, const Jet1& jet) {
    return {"taylor", -kUnbounded, kUnbounded, false, [=](double x) {
                const double h = x - x0;
                return Jet1{jet.value + jet.d1 * h + 0.5 * jet.d2 * h * h, jet.d1 + jet.d2 * h, jet.d2};
            }};
}

Profile1D cosh_profile() {
    return {"cosh", -kUnbounded, kUnbounded, false,
            [](double x) { return Jet1{std::cosh(x), std::sinh(x), std::cosh(x)}; }};
}

Profile1D sphere_profile() {
    return {"sphere", -1.0, 1.0, true, [](double x) {
                const double q = 1.0 - x * x;
                const double root = std::sqrt(q);
                return Jet1{root, -x / root, -1.0 / (q * root)};
            }};
}

}  // namespace solitonlab::profiles
