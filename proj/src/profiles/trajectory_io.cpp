#include "solitonlab/profiles/trajectory_io.hpp"

#include <ostream>

#include "solitonlab/format.hpp"

namespace solitonlab::profiles {

void write_trajectory_csv(std::ostream& out, const ProfileTrajectory& trajectory) {
    out << "param,value,deriv\n";
    for (const auto& s : trajectory.samples()) {
        out << format_double(s.param) << ',' << format_double(s.value) << ',' << format_double(s.deriv) << '\n';
    }
}

nlohmann::ordered_json trajectory_metadata(const ProfileTrajectory& trajectory) {
    const OdeSpec& spec = trajectory.spec();
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    params["gamma"] = spec.gamma;
    if (spec.family == OdeFamily::translation) {
        params["alpha"] = spec.alpha;
        params["beta"] = spec.beta;
        params["a1"] = spec.a1;
    }
    params["value0"] = spec.value0;
    params["deriv0"] = spec.deriv0;
    params["rtol"] = spec.rtol;
    params["atol"] = spec.atol;

    nlohmann::ordered_json out;
    out["family"] = std::string(family_name(spec.family));
    out["parameters"] = params;
    out["stop_reason"] = std::string(stop_reason_name(trajectory.stop_reason()));
    out["span"] = {spec.start, spec.end};
    out["reached"] = trajectory.hi();
    out["accepted_steps"] = trajectory.accepted_steps();
    out["rejected_steps"] = trajectory.rejected_steps();
    return out;
}

}  // namespace solitonlab::profiles
