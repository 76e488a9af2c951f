#pragma once

#include <map>
#include <set>

#include "solitonlab/symbolic/diff_poly.hpp"

namespace solitonlab::sym {

/// s-derivative rules for the indeterminates.
///
/// Parameters always differentiate to zero. Bases listed as "free" follow the
/// default rule (order k -> order k+1); explicit overrides take precedence.
/// Any other symbol has no rule and is rejected.
class DerivationTable {
public:
    DerivationTable(std::set<Base> free_bases, std::map<Symbol, DiffPoly> overrides);

    /// Every function base is free; no overrides.
    static DerivationTable standard();

    /// t3, n3, b3 are the third coordinates of the Frenet frame:
    /// t3' = kappa n3, n3' = -kappa t3 + sigma b3, b3' = -sigma n3.
    static DerivationTable frenet();

    bool has_rule(const Symbol& symbol) const;
    DiffPoly derivative_of(const Symbol& symbol) const;

    /// Leibniz-rule derivative of a polynomial.
    DiffPoly apply(const DiffPoly& p) const;

private:
    std::set<Base> free_bases_;
    std::map<Symbol, DiffPoly> overrides_;
};

/// Replace `target` by `value` together with every higher derivative of
/// `target` by the corresponding derivative of `value`, e.g. w -> kappa r also
/// sends w' -> kappa' r + kappa r'.
DiffPoly substitute_differential(const DiffPoly& p, const Symbol& target, const DiffPoly& value,
                                 const DerivationTable& table);

}  // namespace solitonlab::sym
