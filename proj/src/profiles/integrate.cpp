#include "solitonlab/profiles/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>
#include <utility>

#include "solitonlab/errors.hpp"
#include "solitonlab/format.hpp"
#include "solitonlab/profiles/ode.hpp"
#include "solitonlab/profiles/rhs.hpp"

namespace solitonlab::profiles {

std::string_view family_name(OdeFamily family) {
    switch (family) {
        case OdeFamily::rotational: return "rotational";
        case OdeFamily::translation: return "translation";
        case OdeFamily::planar: return "planar";
    }
    return "?";
}

OdeFamily parse_family(std::string_view name) {
    for (OdeFamily f : {OdeFamily::rotational, OdeFamily::translation, OdeFamily::planar}) {
        if (family_name(f) == name) return f;
    }
    throw InvalidInput("unknown ODE family '" + std::string(name) + "'");
}

std::string_view stop_reason_name(StopReason reason) {
    switch (reason) {
        case StopReason::span_end: return "span_end";
        case StopReason::blowup: return "blowup";
        case StopReason::domain_exit: return "domain_exit";
    }
    return "?";
}

void OdeSpec::validate() const {
    if (!(end > start)) throw InvalidInput("span end must exceed span start");
    if (!(rtol > 0.0) || !(atol > 0.0)) throw InvalidInput("tolerances must be positive");
    if (!(blowup_threshold > 0.0)) throw InvalidInput("blow-up threshold must be positive");
    if (!(max_step_fraction > 0.0)) throw InvalidInput("max step fraction must be positive");
    for (double x : {alpha, beta, gamma, a1, start, end, value0, deriv0}) {
        if (!std::isfinite(x)) throw InvalidInput("ODE parameters must be finite");
    }
    if (family == OdeFamily::rotational && !(value0 > 0.0)) {
        throw DomainError("rotational profile needs r(start) > 0");
    }
}

double OdeSpec::second_derivative(double /*param*/, double value, double deriv) const {
    switch (family) {
        case OdeFamily::rotational: return rotational_rhs(gamma, value, deriv);
        case OdeFamily::translation: return translation_rhs(alpha, beta, gamma, a1, value, deriv);
        case OdeFamily::planar: return planar_rhs(gamma, deriv);
    }
    return 0.0;
}

bool blowup_event(const OdeSpec& spec, const TrajectorySample& sample) {
    return !(std::abs(sample.deriv) <= spec.blowup_threshold);
}

ProfileTrajectory::ProfileTrajectory(OdeSpec spec, std::vector<TrajectorySample> samples, StopReason stop,
                                     std::size_t accepted, std::size_t rejected)
    : spec_(spec), samples_(std::move(samples)), stop_(stop), accepted_(accepted), rejected_(rejected) {
    if (samples_.empty()) throw InvalidInput("trajectory needs at least one sample");
    for (std::size_t i = 1; i < samples_.size(); ++i) {
        if (!(samples_[i].param > samples_[i - 1].param)) throw InvalidInput("trajectory parameters must increase");
    }
}

Jet1 ProfileTrajectory::at(double param) const {
    if (!(param >= lo() && param <= hi())) {
        throw DomainError("trajectory evaluated outside [" + format_double(lo()) + ", " + format_double(hi()) +
                          "] at " + format_double(param));
    }
    auto it = std::upper_bound(samples_.begin(), samples_.end(), param,
                               [](double x, const TrajectorySample& s) { return x < s.param; });
    if (it == samples_.begin()) ++it;
    if (it == samples_.end()) {
        const TrajectorySample& s = samples_.back();
        if (param == s.param) return {s.value, s.deriv, s.second};
        --it;
    }
    const TrajectorySample& a = *(it - 1);
    const TrajectorySample& b = *it;
    if (param == a.param) return {a.value, a.deriv, a.second};
    if (param == b.param) return {b.value, b.deriv, b.second};
    const double value = hermite(a.param, a.value, a.deriv, b.param, b.value, b.deriv, param);
    const double deriv = hermite(a.param, a.deriv, a.second, b.param, b.deriv, b.second, param);
    return {value, deriv, spec_.second_derivative(param, value, deriv)};
}

Profile1D ProfileTrajectory::as_profile() const {
    auto self = std::make_shared<const ProfileTrajectory>(*this);
    return {std::string("trajectory:") + std::string(family_name(spec_.family)), lo(), hi(), false,
            [self](double x) { return self->at(x); }};
}

ProfileTrajectory integrate(const OdeSpec& spec) {
    spec.validate();
    auto rhs = [&spec](double t, const State<2>& y) -> State<2> {
        return {y[1], spec.second_derivative(t, y[0], y[1])};
    };
    StepControl control;
    control.rtol = spec.rtol;
    control.atol = spec.atol;
    control.max_step = spec.max_step_fraction * (spec.end - spec.start);

    bool blew_up = false;
    auto observe = [&](const OdeNode<2>& node) {
        const TrajectorySample sample{node.t, node.y[0], node.y[1], node.dy[1]};
        if (blowup_event(spec, sample)) {
            blew_up = true;
            return false;
        }
        return true;
    };
    const OdeRun<2> run = dormand_prince<2>(rhs, spec.start, spec.end, State<2>{spec.value0, spec.deriv0}, control,
                                            observe);

    std::vector<TrajectorySample> samples;
    samples.reserve(run.nodes.size());
    for (const auto& node : run.nodes) samples.push_back({node.t, node.y[0], node.y[1], node.dy[1]});

    StopReason stop = StopReason::span_end;
    if (blew_up) {
        stop = StopReason::blowup;
    } else if (run.domain_exit) {
        stop = StopReason::domain_exit;
    }
    return {spec, std::move(samples), stop, run.accepted, run.rejected};
}

std::pair<double, double> integrate_rk4(const OdeSpec& spec, std::size_t steps) {
    spec.validate();
    if (steps == 0) throw InvalidInput("RK4 needs at least one step");
    auto rhs = [&spec](double t, const State<2>& y) -> State<2> {
        return {y[1], spec.second_derivative(t, y[0], y[1])};
    };
    const State<2> y = rk4_fixed<2>(rhs, spec.start, spec.end, State<2>{spec.value0, spec.deriv0}, steps);
    return {y[0], y[1]};
}

}  // namespace solitonlab::profiles
