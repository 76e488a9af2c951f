#include "solitonlab/symbolic/cases.hpp"

#include "solitonlab/errors.hpp"

namespace solitonlab::sym {

namespace {

DiffPoly p(Base base, unsigned order = 0) { return DiffPoly::of(base, order); }

SymbolicDensity density(DiffPoly alpha, DiffPoly beta, DiffPoly gamma) {
    return {std::move(alpha), std::move(beta), std::move(gamma)};
}

std::vector<NamedCase> make_registry() {
    const DiffPoly alpha = p(Base::alpha);
    const DiffPoly beta = p(Base::beta);
    const DiffPoly gamma = p(Base::gamma);
    const DiffPoly zero;
    const Symbol da(Base::a, 1);
    const Symbol db(Base::b, 1);

    std::vector<NamedCase> out;
    out.push_back({"riemann", Target::riemann, SymbolicDensity::generic(), {}, {},
                   "cyclic chart, symbolic density"});
    out.push_back({"s31-case1", Target::riemann, density(alpha, zero, zero), {}, {}, "beta = gamma = 0"});
    out.push_back({"s31-case2", Target::riemann, density(zero, beta, zero), {}, {}, "alpha = gamma = 0"});
    out.push_back({"s31-case3", Target::riemann, density(zero, zero, gamma), {}, {}, "alpha = beta = 0"});
    out.push_back({"s31-case3-axis", Target::riemann, density(zero, zero, gamma), {},
                   {{da, zero}, {db, zero}}, "alpha = beta = 0 with constant centers (rotational profile)"});
    out.push_back({"s31b-case1", Target::riemann, density(zero, beta, gamma), {}, {}, "alpha = 0"});
    out.push_back({"s31b-case2", Target::riemann, density(alpha, zero, gamma), {}, {}, "beta = 0"});
    out.push_back({"s31b-case3", Target::riemann, density(alpha, beta, zero), {}, {}, "gamma = 0"});
    out.push_back({"s32-general", Target::riemann, SymbolicDensity::generic(), {}, {},
                   "alpha beta gamma nonzero"});
    out.push_back({"th6", Target::cmc, SymbolicDensity::generic(), {}, {}, "H_phi = c/2, density e^z"});
    out.push_back({"th6-c2eq1", Target::cmc, SymbolicDensity::generic(), DiffPoly(1), {}, "c = 1"});
    out.push_back({"frenet", Target::frenet, SymbolicDensity::generic(), {}, {}, "tube around a Frenet curve"});
    out.push_back({"frenet-sub1a", Target::frenet, SymbolicDensity::generic(), {},
                   {{Symbol(Base::v), zero}, {Symbol(Base::w), p(Base::kappa) * p(Base::r)}},
                   "v = 0, w = kappa r"});
    out.push_back({"frenet-sub1a-final", Target::frenet, SymbolicDensity::generic(), {},
                   {{Symbol(Base::v), zero},
                    {Symbol(Base::w), p(Base::kappa) * p(Base::r)},
                    {Symbol(Base::u), zero},
                    {Symbol(Base::r, 1), zero}},
                   "v = 0, w = kappa r, u = 0, r' = 0"});
    out.push_back({"general", Target::general, SymbolicDensity::generic(), {}, {},
                   "cleared form assembled from the cyclic chart's jets"});
    return out;
}

}  // namespace

std::string_view target_name(Target target) {
    switch (target) {
        case Target::riemann: return "riemann";
        case Target::cmc: return "cmc";
        case Target::frenet: return "frenet";
        case Target::general: return "general";
    }
    return "?";
}

Target parse_target(std::string_view name) {
    for (Target t : {Target::riemann, Target::cmc, Target::frenet, Target::general}) {
        if (target_name(t) == name) return t;
    }
    throw InvalidInput("unknown target '" + std::string(name) + "'");
}

const std::vector<NamedCase>& case_registry() {
    static const std::vector<NamedCase> registry = make_registry();
    return registry;
}

const NamedCase& find_case(std::string_view name) {
    for (const NamedCase& c : case_registry()) {
        if (c.name == name) return c;
    }
    throw InvalidInput("unknown case '" + std::string(name) + "'");
}

TrigPoly apply_substitutions(const TrigPoly& poly, const std::vector<std::pair<Symbol, DiffPoly>>& substitutions,
                             const DerivationTable& table) {
    TrigPoly out = poly;
    for (const auto& [target, value] : substitutions) {
        out = out.map_coefficients(
            [&](const DiffPoly& q) { return substitute_differential(q, target, value, table); });
    }
    return out;
}

TrigPoly expand_case(const NamedCase& named) {
    TrigPoly raw;
    switch (named.target) {
        case Target::riemann: raw = build_riemann_residual(named.density); break;
        case Target::cmc: raw = build_cmc_squared_residual(named.cmc_constant.value_or(p(Base::c))); break;
        case Target::frenet: raw = build_frenet_residual(); break;
        case Target::general: raw = build_general_cleared_residual(named.density); break;
    }
    const DerivationTable table =
        named.target == Target::frenet ? DerivationTable::frenet() : DerivationTable::standard();
    return apply_substitutions(raw, named.substitutions, table);
}

}  // namespace solitonlab::sym
