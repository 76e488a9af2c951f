#include <doctest.h>

#include <random>

#include "random_poly.hpp"
#include "solitonlab/errors.hpp"
#include "solitonlab/symbolic/derivation.hpp"
#include "solitonlab/symbolic/diff_poly.hpp"

using namespace solitonlab;
using namespace solitonlab::sym;

TEST_CASE("symbol registry") {
    CHECK(Symbol::from_name("a''") == Symbol(Base::a, 2));
    CHECK(Symbol::from_name("kappa").name() == "kappa");
    CHECK(Symbol::from_name("t3'").order() == 1);
    CHECK_THROWS_AS(Symbol::from_name("zeta"), InvalidInput);
    CHECK_THROWS_AS(Symbol(Base::alpha, 1), InvalidInput);
    CHECK_THROWS_AS(Symbol::from_name("gamma'"), InvalidInput);
    CHECK(Symbol(Base::alpha) < Symbol(Base::r));
    CHECK(Symbol(Base::r) < Symbol(Base::a, 1));
}

TEST_CASE("canonical printing") {
    const DiffPoly alpha = DiffPoly::of(Base::alpha);
    const DiffPoly r = DiffPoly::of(Base::r);
    const DiffPoly da = DiffPoly::of(Base::a, 1);
    const DiffPoly db = DiffPoly::of(Base::b, 1);
    const DiffPoly a3 = DiffPoly(Rational(1, 4)) * alpha * r * (da * da - db * db);
    CHECK(a3.to_string() == "(1/4)*alpha*r*a'^2 - (1/4)*alpha*r*b'^2");
    CHECK(DiffPoly().to_string() == "0");
    CHECK((-da + DiffPoly(3)).to_string() == "-a' + 3");
    CHECK((DiffPoly(Rational(-5, 2))).to_string() == "-5/2");
    CHECK((DiffPoly(2) * da * da * r).to_string() == "2*r*a'^2");
}

TEST_CASE("parse") {
    CHECK(DiffPoly::parse("0").is_zero());
    CHECK(DiffPoly::parse("(1/4)*alpha*r*a'^2 - (1/4)*alpha*r*b'^2") ==
          DiffPoly(Rational(1, 4)) * DiffPoly::of(Base::alpha) * DiffPoly::of(Base::r) *
              (DiffPoly::of(Base::a, 1).pow(2) - DiffPoly::of(Base::b, 1).pow(2)));
    CHECK(DiffPoly::parse("(a + b)^2") == DiffPoly::parse("a^2 + 2*a*b + b^2"));
    CHECK(DiffPoly::parse("-a^2") == -DiffPoly::parse("a*a"));
    CHECK(DiffPoly::parse("6/4") == DiffPoly(Rational(3, 2)));

    SUBCASE("syntax errors carry a position") {
        try {
            DiffPoly::parse("a + * b");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.position() == 4);
        }
        CHECK_THROWS_AS(DiffPoly::parse("(a + b"), ParseError);
        CHECK_THROWS_AS(DiffPoly::parse(""), ParseError);
        CHECK_THROWS_AS(DiffPoly::parse("1/0"), ParseError);
        CHECK_THROWS_AS(DiffPoly::parse("a b"), ParseError);
    }
    SUBCASE("unknown names") {
        CHECK_THROWS_AS(DiffPoly::parse("x + 1"), InvalidInput);
        CHECK_THROWS_AS(DiffPoly::parse("alpha'"), InvalidInput);
    }
}

TEST_CASE("print/parse round trip on random polynomials") {
    std::mt19937_64 rng(20240517);
    for (int i = 0; i < 1000; ++i) {
        const DiffPoly p = testing_support::random_diff_poly(rng, 6, 3);
        const std::string text = p.to_string();
        REQUIRE_MESSAGE(DiffPoly::parse(text) == p, text);
    }
}

TEST_CASE("normalization drops cancelled terms") {
    const DiffPoly x = DiffPoly::parse("a' + r");
    CHECK((x - x).is_zero());
    CHECK((x - x).size() == 0);
    CHECK((x * DiffPoly(0)).is_zero());
}

TEST_CASE("monomial quotient") {
    const DiffPoly target = DiffPoly::parse("a'^2 - b'^2");
    const auto q = monomial_quotient(DiffPoly::parse("-(3/8)*r^2*a'^2 + (3/8)*r^2*b'^2"), target);
    REQUIRE(q.has_value());
    CHECK(*q == DiffPoly::parse("-(3/8)*r^2"));
    CHECK_FALSE(monomial_quotient(DiffPoly::parse("a'^2 + b'^2"), target).has_value());
    CHECK_FALSE(monomial_quotient(DiffPoly::parse("(a'^2 - b'^2)*(r + 1)"), target).has_value());
    CHECK_FALSE(monomial_quotient(DiffPoly(), target).has_value());
}

TEST_CASE("evaluation") {
    const DiffPoly p = DiffPoly::parse("2*a'*r - 1/2");
    CHECK(p.evaluate({{Symbol(Base::a, 1), 3.0}, {Symbol(Base::r), 0.5}}) == doctest::Approx(2.5));
    CHECK_THROWS_AS(p.evaluate({{Symbol(Base::a, 1), 3.0}}), InvalidInput);
}

TEST_CASE("derivation tables") {
    const auto standard = DerivationTable::standard();
    CHECK(standard.apply(DiffPoly::parse("a'^2")) == DiffPoly::parse("2*a'*a''"));
    CHECK(standard.apply(DiffPoly::parse("alpha*r")) == DiffPoly::parse("alpha*r'"));

    const auto frenet = DerivationTable::frenet();
    CHECK(frenet.apply(DiffPoly::parse("n3")) == DiffPoly::parse("-kappa*t3 + sigma*b3"));
    CHECK(frenet.apply(DiffPoly::parse("t3")) == DiffPoly::parse("kappa*n3"));
    CHECK(frenet.apply(DiffPoly::parse("b3")) == DiffPoly::parse("-sigma*n3"));
    CHECK_THROWS_AS(frenet.apply(DiffPoly::parse("t3'")), InvalidInput);

    const DerivationTable bare({}, {});
    CHECK_THROWS_AS(bare.apply(DiffPoly::parse("r")), InvalidInput);
    CHECK(bare.apply(DiffPoly::parse("gamma")).is_zero());
}

TEST_CASE("differential substitution follows derivatives") {
    const auto table = DerivationTable::frenet();
    const DiffPoly p = DiffPoly::parse("w + w' + w''");
    const DiffPoly got = substitute_differential(p, Symbol(Base::w), DiffPoly::parse("kappa*r"), table);
    CHECK(got == DiffPoly::parse("kappa*r + kappa'*r + kappa*r' + kappa''*r + 2*kappa'*r' + kappa*r''"));
    const DiffPoly q = substitute_differential(DiffPoly::parse("r + r' + r''"), Symbol(Base::r, 1), DiffPoly(),
                                               table);
    CHECK(q == DiffPoly::parse("r"));
}
