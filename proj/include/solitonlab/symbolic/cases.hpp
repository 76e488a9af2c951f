#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "solitonlab/symbolic/residuals.hpp"

namespace solitonlab::sym {

enum class Target { riemann, cmc, frenet, general };

std::string_view target_name(Target target);
Target parse_target(std::string_view name);

/// A residual specialized to one case of the coefficient analysis.
///
/// Substitutions are differential: replacing a' by 0 also sends a'' to 0.
struct NamedCase {
    std::string name;
    Target target = Target::riemann;
    SymbolicDensity density = SymbolicDensity::generic();
    std::optional<DiffPoly> cmc_constant;
    std::vector<std::pair<Symbol, DiffPoly>> substitutions;
    std::string summary;
};

const std::vector<NamedCase>& case_registry();

/// Throws InvalidInput for unknown names.
const NamedCase& find_case(std::string_view name);

/// Build the residual of the case and apply its substitutions.
TrigPoly expand_case(const NamedCase& named);

/// Apply differential substitutions in order.
TrigPoly apply_substitutions(const TrigPoly& p, const std::vector<std::pair<Symbol, DiffPoly>>& substitutions,
                             const DerivationTable& table);

}  // namespace solitonlab::sym
