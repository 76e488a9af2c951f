#pragma once

#include <iosfwd>

#include <json.hpp>

#include "solitonlab/profiles/integrate.hpp"

namespace solitonlab::profiles {

/// Header `param,value,deriv`, one row per accepted step.
void write_trajectory_csv(std::ostream& out, const ProfileTrajectory& trajectory);

/// {family, parameters, stop_reason, span}.
nlohmann::ordered_json trajectory_metadata(const ProfileTrajectory& trajectory);

}  // namespace solitonlab::profiles
