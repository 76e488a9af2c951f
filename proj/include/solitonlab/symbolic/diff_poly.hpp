#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "solitonlab/symbolic/symbol.hpp"

namespace solitonlab::sym {

using Rational = mpq_class;

/// Numeric values for symbols, used by floating evaluation.
using Assignment = std::map<Symbol, double>;

/// Power product of symbols; factors sorted by Symbol order, exponents positive.
class Monomial {
public:
    using Factor = std::pair<Symbol, unsigned>;

    Monomial() = default;
    explicit Monomial(Symbol symbol, unsigned exponent = 1);

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    unsigned degree() const noexcept { return degree_; }
    bool is_one() const noexcept { return factors_.empty(); }
    unsigned exponent_of(const Symbol& symbol) const;

    Monomial operator*(const Monomial& other) const;

    /// this / other when every exponent of `other` is covered.
    std::optional<Monomial> divided_by(const Monomial& other) const;

    /// This monomial with one power of `symbol` removed; `symbol` must divide it.
    Monomial without_one(const Symbol& symbol) const;

    double evaluate(const Assignment& values) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;
    unsigned degree_ = 0;
};

/// Graded lexicographic comparison, returning true when `lhs` sorts before
/// `rhs` in printing order (higher total degree first, then lex-larger first).
struct GrlexDescending {
    bool operator()(const Monomial& lhs, const Monomial& rhs) const;
};

/// Exact multivariate polynomial with rational coefficients in differential indeterminates.
///
/// Stored canonically: each monomial at most once, no zero coefficients, terms
/// kept in GrlexDescending order.
class DiffPoly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexDescending>;

    DiffPoly() = default;
    DiffPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
    DiffPoly(long constant) : DiffPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
    DiffPoly(int constant) : DiffPoly(Rational(constant)) {}   // NOLINT(google-explicit-constructor)
    DiffPoly(Symbol symbol);  // NOLINT(google-explicit-constructor)
    DiffPoly(const Monomial& monomial, const Rational& coefficient);

    static DiffPoly of(Base base, unsigned order = 0) { return DiffPoly(Symbol(base, order)); }
    static DiffPoly parse(const std::string& text);

    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of the constant monomial (zero when absent).
    Rational constant_term() const;
    Rational coefficient(const Monomial& monomial) const;
    unsigned total_degree() const;
    std::set<Symbol> symbols() const;

    /// Leading term in GrlexDescending order; polynomial must be nonzero.
    const std::pair<const Monomial, Rational>& leading() const;

    DiffPoly& operator+=(const DiffPoly& other);
    DiffPoly& operator-=(const DiffPoly& other);
    DiffPoly& operator*=(const DiffPoly& other);
    DiffPoly operator-() const;

    friend DiffPoly operator+(DiffPoly lhs, const DiffPoly& rhs) { return lhs += rhs; }
    friend DiffPoly operator-(DiffPoly lhs, const DiffPoly& rhs) { return lhs -= rhs; }
    friend DiffPoly operator*(const DiffPoly& lhs, const DiffPoly& rhs);
    friend bool operator==(const DiffPoly& lhs, const DiffPoly& rhs) { return lhs.terms_ == rhs.terms_; }

    DiffPoly pow(unsigned exponent) const;

    /// Partial derivative with respect to a single indeterminate.
    DiffPoly partial(const Symbol& symbol) const;

    /// Plain (non-differential) substitution of symbols by polynomials.
    DiffPoly substitute(const std::map<Symbol, DiffPoly>& rules) const;

    /// Floating evaluation; throws InvalidInput if a symbol is missing from `values`.
    double evaluate(const Assignment& values) const;

    /// Canonical text, e.g. "(1/4)*alpha*r*a'^2 - (1/4)*alpha*r*b'^2"; zero prints as "0".
    std::string to_string() const;

private:
    void add_term(const Monomial& monomial, const Rational& coefficient);

    TermMap terms_;
};

/// If `numerator` = m * `denominator` for a single term m (rational times monomial), returns m.
std::optional<DiffPoly> monomial_quotient(const DiffPoly& numerator, const DiffPoly& denominator);

std::string rational_to_string(const Rational& value);

}  // namespace solitonlab::sym
