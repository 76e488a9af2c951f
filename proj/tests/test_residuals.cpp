#include <doctest.h>

#include <random>

#include "solitonlab/symbolic/cases.hpp"
#include "solitonlab/symbolic/residuals.hpp"

using namespace solitonlab::sym;

namespace {

DiffPoly P(const char* text) { return DiffPoly::parse(text); }

// Factors below were frozen from an independent computer-algebra expansion
// (exponential substitution cos t = (z + 1/z)/2 and coefficient extraction).
void check_factor(const DiffPoly& computed, const DiffPoly& displayed, const DiffPoly& factor) {
    const auto q = monomial_quotient(computed, displayed);
    REQUIRE_MESSAGE(q.has_value(), computed.to_string());
    CHECK(*q == factor);
}

}  // namespace

TEST_CASE("riemann residual: beta = gamma = 0") {
    const TrigPoly res = expand_case(find_case("s31-case1"));
    CHECK(res.max_degree() == 3u);
    const auto [a3, b3] = res.coeff(3);
    CHECK(a3 == P("(1/4)*alpha*r*(a'^2 - b'^2)"));
    CHECK(b3 == P("(1/2)*alpha*r*a'*b'"));
    CHECK(a3.to_string() == "(1/4)*alpha*r*a'^2 - (1/4)*alpha*r*b'^2");
}

TEST_CASE("riemann residual: alpha = beta = 0") {
    const TrigPoly res = expand_case(find_case("s31-case3"));
    const auto [a3, b3] = res.coeff(3);
    CHECK(a3 == P("-(1/4)*gamma*r*a'*(a'^2 - 3*b'^2)"));
    CHECK(b3 == P("-(1/4)*gamma*r*b'*(3*a'^2 - b'^2)"));

    const TrigPoly axis = expand_case(find_case("s31-case3-axis"));
    CHECK(axis.max_degree() == 0u);
    // The displayed degree-0 equation is r(r'' + gamma r'(1 + r'^2)) - (1 + r'^2) = 0, i.e. -1 times ours.
    CHECK(axis.coeff(0).first == -P("r*(r'' + gamma*r'*(1 + r'^2)) - (1 + r'^2)"));
}

TEST_CASE("riemann residual: gamma = 0 and alpha = 0") {
    const auto [a3, b3] = expand_case(find_case("s31b-case3")).coeff(3);
    CHECK(a3 == P("(1/4)*r*(alpha*a'^2 - 2*beta*a'*b' - alpha*b'^2)"));
    CHECK(b3 == P("(1/4)*r*(beta*a'^2 + 2*alpha*a'*b' - beta*b'^2)"));

    const auto [c3, d3] = expand_case(find_case("s31b-case1")).coeff(3);
    CHECK(c3 == P("-(1/4)*r*a'*(gamma*a'^2 + b'*(2*beta - 3*gamma*b'))"));
    CHECK(d3 == P("(1/4)*r*(a'^2*(beta - 3*gamma*b') + b'^2*(gamma*b' - beta))"));
}

TEST_CASE("riemann residual: general density") {
    const TrigPoly res = build_riemann_residual(SymbolicDensity::generic());
    CHECK(res.max_degree() == 3u);
    const auto [a3, b3] = res.coeff(3);
    check_factor(a3, P("alpha*a'^2 - gamma*a'^3 - 2*beta*a'*b' - alpha*b'^2 + 3*gamma*a'*b'^2"), P("(1/4)*r"));
    check_factor(b3, P("beta*a'^2 + 2*alpha*a'*b' - 3*gamma*a'^2*b' - beta*b'^2 + gamma*b'^3"), P("(1/4)*r"));

    // Degree 1 once the centers are fixed: A1 = alpha r (1 + r'^2).
    const TrigPoly fixed = apply_substitutions(
        expand_case(find_case("s31-case1")), {{Symbol(Base::a, 1), DiffPoly()}, {Symbol(Base::b, 1), DiffPoly()}},
        DerivationTable::standard());
    CHECK(fixed.coeff(1).first == P("alpha*r*(1 + r'^2)"));
}

TEST_CASE("general cleared residual is r^2 times the riemann residual") {
    for (const auto& density : {SymbolicDensity::generic(), SymbolicDensity{DiffPoly(), DiffPoly(), DiffPoly()},
                                SymbolicDensity{P("alpha"), DiffPoly(), P("gamma")}}) {
        const TrigPoly general = build_general_cleared_residual(density);
        const TrigPoly riemann = build_riemann_residual(density);
        CHECK(general == TrigPoly(P("r^2")) * riemann);
    }
    const TrigPoly flat = build_general_cleared_residual({DiffPoly(), DiffPoly(), DiffPoly()});
    for (const auto& [n, h] : flat.harmonics()) {
        for (const Symbol& s : h.cos.symbols()) CHECK_FALSE(s.is_parameter());
        for (const Symbol& s : h.sin.symbols()) CHECK_FALSE(s.is_parameter());
    }
}

TEST_CASE("cmc squared residual") {
    const TrigPoly res = build_cmc_squared_residual();
    CHECK(res.max_degree() == 6u);
    const auto [a6, b6] = res.coeff(6);
    check_factor(a6, P("(c^2 - 1)*(a'^6 - 15*a'^4*b'^2 + 15*a'^2*b'^4 - b'^6)"), P("-(1/32)*r^2"));
    check_factor(b6, P("(c^2 - 1)*a'*b'*(3*a'^4 - 10*a'^2*b'^2 + 3*b'^4)"), P("-(1/16)*r^2"));

    const TrigPoly unit = expand_case(find_case("th6-c2eq1"));
    CHECK(unit.max_degree() == 4u);
    const auto [a4, b4] = unit.coeff(4);
    check_factor(a4, P("(r + 4*r')*(a'^4 - 6*a'^2*b'^2 + b'^4) + r*a''*(6*a'*b'^2 - 2*a'^3) + r*b''*(6*a'^2*b' - 2*b'^3)"),
                 P("-(1/8)*r"));
    check_factor(b4, P("2*a'*(r + 4*r')*(-a'^2*b' + b'^3) + r*a''*b'*(3*a'^2 - b'^2) + r*a'*b''*(a'^2 - 3*b'^2)"),
                 P("(1/4)*r"));

    const TrigPoly axis = apply_substitutions(
        build_cmc_squared_residual(DiffPoly()), {{Symbol(Base::a, 1), DiffPoly()}, {Symbol(Base::b, 1), DiffPoly()}},
        DerivationTable::standard());
    const DiffPoly u0 = P("1 + r'^2 - r*r''");
    const DiffPoly w0 = P("1 + r'^2");
    CHECK(axis == TrigPoly((u0 - P("r*r'") * w0).pow(2)));
}

TEST_CASE("frenet residual") {
    const TrigPoly res = build_frenet_residual();
    CHECK(res.max_degree() == 4u);
    const auto [a4, b4] = res.coeff(4);

    // Leading pair as computed. The commonly printed general form differs from it by sign slips, so only its consequences are compared.
    CHECK(a4 == P("(1/8)*kappa*r^4*(n3*(w^2 - v^2 - kappa^2*r^2) + 2*b3*v*w)"));
    CHECK(b4 == P("-(1/8)*kappa*r^4*(2*n3*v*w + b3*(kappa^2*r^2 + v^2 - w^2))"));
    CHECK_FALSE(monomial_quotient(a4, P("kappa*r^2*(n3*(kappa^2*r^2 + v^2) + 2*b3*v*w + n3*w^2)")).has_value());

    check_factor(P("b3") * a4 - P("n3") * b4, P("(b3^2 + n3^2)*v*w"), P("(1/4)*kappa*r^4"));

    // w = 0: A4 = -(1/8) kappa r^2 n3 (kappa^2 r^2 + v^2) up to r^2.
    check_factor(a4.substitute({{Symbol(Base::w), DiffPoly()}}), P("-(1/8)*kappa*r^2*n3*(kappa^2*r^2 + v^2)"), P("r^2"));

    const TrigPoly sub = expand_case(find_case("frenet-sub1a"));
    CHECK(sub.coeff(4).first.is_zero());
    CHECK(sub.coeff(4).second.is_zero());
    const auto [a3, b3] = sub.coeff(3);
    check_factor(a3, P("(1/2)*kappa^2*r^3*(n3*u + b3*r')"), P("r^2"));
    check_factor(b3, P("(1/2)*kappa^2*r^3*(b3*u - n3*r')"), P("r^2"));

    const TrigPoly fin = expand_case(find_case("frenet-sub1a-final"));
    CHECK(fin.coeff(3).first.is_zero());
    CHECK(fin.coeff(3).second.is_zero());
    const auto [a2, b2] = fin.coeff(2);
    check_factor(a2, P("-(1/2)*r^4*kappa^3*n3"), P("r^2"));
    check_factor(b2, P("-(1/2)*r^4*kappa^3*b3"), P("r^2"));
}

TEST_CASE("case registry") {
    CHECK_THROWS(find_case("no-such-case"));
    CHECK(find_case("frenet").target == Target::frenet);
    CHECK(parse_target("cmc") == Target::cmc);
}
