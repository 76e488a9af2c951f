#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "solitonlab/profiles/profile1d.hpp"

namespace solitonlab::profiles {

enum class OdeFamily { rotational, translation, planar };

std::string_view family_name(OdeFamily family);
OdeFamily parse_family(std::string_view name);

/// Initial value problem for one of the second-order profile equations.
struct OdeSpec {
    OdeFamily family = OdeFamily::rotational;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double a1 = 0.0;
    double start = 0.0;
    double end = 1.0;
    double value0 = 1.0;
    double deriv0 = 0.0;
    double rtol = 1e-10;
    double atol = 1e-10;
    /// Integration halts once |value'| exceeds this.
    double blowup_threshold = 1e6;
    /// Upper bound on accepted steps as a fraction of the span (keeps dense output accurate).
    double max_step_fraction = 0.01;

    /// Throws InvalidInput / DomainError for inconsistent specs.
    void validate() const;

    /// value'' as a function of (param, value, value').
    double second_derivative(double param, double value, double deriv) const;
};

enum class StopReason { span_end, blowup, domain_exit };

std::string_view stop_reason_name(StopReason reason);

struct TrajectorySample {
    double param = 0.0;
    double value = 0.0;
    double deriv = 0.0;
    double second = 0.0;
};

/// Accepted steps of an integrated profile with cubic Hermite dense output.
///
/// Value and first derivative are interpolated from the node data (Hermite on
/// (value, deriv) and on (deriv, second) respectively); the second derivative is
/// taken from the ODE at the interpolated state.
class ProfileTrajectory {
public:
    ProfileTrajectory(OdeSpec spec, std::vector<TrajectorySample> samples, StopReason stop, std::size_t accepted,
                      std::size_t rejected);

    const OdeSpec& spec() const noexcept { return spec_; }
    const std::vector<TrajectorySample>& samples() const noexcept { return samples_; }
    StopReason stop_reason() const noexcept { return stop_; }
    std::size_t accepted_steps() const noexcept { return accepted_; }
    std::size_t rejected_steps() const noexcept { return rejected_; }

    double lo() const { return samples_.front().param; }
    double hi() const { return samples_.back().param; }
    const TrajectorySample& last() const { return samples_.back(); }

    /// Dense evaluation; throws DomainError outside [lo, hi].
    Jet1 at(double param) const;

    Profile1D as_profile() const;

private:
    OdeSpec spec_;
    std::vector<TrajectorySample> samples_;
    StopReason stop_;
    std::size_t accepted_;
    std::size_t rejected_;
};

/// Adaptive Dormand-Prince integration of the spec's equation.
///
/// Stops at the span end, when |value'| exceeds the blow-up threshold, or when the
/// solution leaves the equation's domain (r -> 0 for the rotational profile).
/// Throws NumericFailure on step-size underflow and DomainError when the initial
/// data is outside the domain.
ProfileTrajectory integrate(const OdeSpec& spec);

/// Blow-up test applied after each accepted step.
bool blowup_event(const OdeSpec& spec, const TrajectorySample& sample);

/// Fixed-step classical RK4 endpoint (value, value') for convergence studies.
std::pair<double, double> integrate_rk4(const OdeSpec& spec, std::size_t steps);

}  // namespace solitonlab::profiles
