#pragma once

#include <functional>
#include <limits>
#include <string>

namespace solitonlab::profiles {

/// Value and first two derivatives of a scalar function at one parameter.
struct Jet1 {
    double value = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};

/// Scalar function of one variable with analytic first and second derivatives.
///
/// The domain is [lo, hi], or (lo, hi) when `open` is set (closed forms that are
/// singular at an endpoint). Evaluation outside the domain throws DomainError.
class Profile1D {
public:
    using Evaluator = std::function<Jet1(double)>;

    Profile1D(std::string name, double lo, double hi, bool open, Evaluator fn);

    Jet1 operator()(double x) const;
    bool contains(double x) const;

    const std::string& name() const noexcept { return name_; }
    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    bool open() const noexcept { return open_; }

private:
    std::string name_;
    double lo_;
    double hi_;
    bool open_;
    Evaluator fn_;
};

inline constexpr double kUnbounded = std::numeric_limits<double>::infinity();

Profile1D constant_profile(double value);
Profile1D linear_profile(double slope, double intercept);
/// Quadratic with the given jet at x0.
Profile1D taylor_profile(double x0, const Jet1& jet);
/// r(s) = cosh(s), the catenary.
Profile1D cosh_profile();
/// r(s) = sqrt(1 - s^2) on (-1, 1).
Profile1D sphere_profile();

}  // namespace solitonlab::profiles
