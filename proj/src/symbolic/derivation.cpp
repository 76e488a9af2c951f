#include "solitonlab/symbolic/derivation.hpp"

#include <utility>

#include "solitonlab/errors.hpp"

namespace solitonlab::sym {

DerivationTable::DerivationTable(std::set<Base> free_bases, std::map<Symbol, DiffPoly> overrides)
    : free_bases_(std::move(free_bases)), overrides_(std::move(overrides)) {}

DerivationTable DerivationTable::standard() {
    std::set<Base> all;
    for (int i = 0; i < kBaseCount; ++i) {
        const auto base = static_cast<Base>(i);
        if (!is_parameter(base)) all.insert(base);
    }
    return DerivationTable(std::move(all), {});
}

DerivationTable DerivationTable::frenet() {
    std::set<Base> free;
    for (int i = 0; i < kBaseCount; ++i) {
        const auto base = static_cast<Base>(i);
        if (!is_parameter(base) && base != Base::t3 && base != Base::n3 && base != Base::b3) free.insert(base);
    }
    const DiffPoly kappa = DiffPoly::of(Base::kappa);
    const DiffPoly sigma = DiffPoly::of(Base::sigma);
    const DiffPoly t3 = DiffPoly::of(Base::t3);
    const DiffPoly n3 = DiffPoly::of(Base::n3);
    const DiffPoly b3 = DiffPoly::of(Base::b3);
    std::map<Symbol, DiffPoly> rules;
    rules.emplace(Symbol(Base::t3), kappa * n3);
    rules.emplace(Symbol(Base::n3), -(kappa * t3) + sigma * b3);
    rules.emplace(Symbol(Base::b3), -(sigma * n3));
    return DerivationTable(std::move(free), std::move(rules));
}

bool DerivationTable::has_rule(const Symbol& symbol) const {
    return symbol.is_parameter() || overrides_.contains(symbol) || free_bases_.contains(symbol.base());
}

DiffPoly DerivationTable::derivative_of(const Symbol& symbol) const {
    if (symbol.is_parameter()) return {};
    if (auto it = overrides_.find(symbol); it != overrides_.end()) return it->second;
    if (free_bases_.contains(symbol.base())) return DiffPoly(symbol.differentiated());
    throw InvalidInput("no derivation rule for symbol '" + symbol.name() + "'");
}

DiffPoly DerivationTable::apply(const DiffPoly& p) const {
    DiffPoly out;
    for (const Symbol& s : p.symbols()) {
        const DiffPoly ds = derivative_of(s);
        if (ds.is_zero()) continue;
        out += p.partial(s) * ds;
    }
    return out;
}

DiffPoly substitute_differential(const DiffPoly& p, const Symbol& target, const DiffPoly& value,
                                 const DerivationTable& table) {
    unsigned top = target.order();
    for (const Symbol& s : p.symbols()) {
        if (s.base() == target.base() && s.order() > top) top = s.order();
    }
    std::map<Symbol, DiffPoly> rules;
    DiffPoly current = value;
    for (unsigned k = target.order();; ++k) {
        rules.emplace(Symbol(target.base(), k), current);
        if (k == top) break;
        current = table.apply(current);
    }
    return p.substitute(rules);
}

}  // namespace solitonlab::sym
