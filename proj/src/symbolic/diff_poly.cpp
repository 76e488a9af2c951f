#include "solitonlab/symbolic/diff_poly.hpp"

#include <algorithm>
#include <cmath>

#include "solitonlab/errors.hpp"
#include "solitonlab/symbolic/expr_parser.hpp"

namespace solitonlab::sym {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(Symbol symbol, unsigned exponent) {
    if (exponent > 0) {
        factors_.emplace_back(symbol, exponent);
        degree_ = exponent;
    }
}

unsigned Monomial::exponent_of(const Symbol& symbol) const {
    for (const auto& [s, e] : factors_) {
        if (s == symbol) return e;
    }
    return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto i = factors_.begin();
    auto j = other.factors_.begin();
    while (i != factors_.end() || j != other.factors_.end()) {
        if (j == other.factors_.end() || (i != factors_.end() && i->first < j->first)) {
            out.factors_.push_back(*i++);
        } else if (i == factors_.end() || j->first < i->first) {
            out.factors_.push_back(*j++);
        } else {
            out.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    out.degree_ = degree_ + other.degree_;
    return out;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& other) const {
    Monomial out;
    auto j = other.factors_.begin();
    for (const auto& [s, e] : factors_) {
        if (j != other.factors_.end() && j->first < s) return std::nullopt;
        if (j != other.factors_.end() && j->first == s) {
            if (j->second > e) return std::nullopt;
            if (j->second < e) out.factors_.emplace_back(s, e - j->second);
            ++j;
        } else {
            out.factors_.emplace_back(s, e);
        }
    }
    if (j != other.factors_.end()) return std::nullopt;
    out.degree_ = degree_ - other.degree_;
    return out;
}

Monomial Monomial::without_one(const Symbol& symbol) const {
    Monomial out = *this;
    auto it = std::find_if(out.factors_.begin(), out.factors_.end(),
                           [&](const Factor& f) { return f.first == symbol; });
    if (it == out.factors_.end()) {
        throw InvalidInput("monomial is not divisible by " + symbol.name());
    }
    if (--it->second == 0) out.factors_.erase(it);
    --out.degree_;
    return out;
}

double Monomial::evaluate(const Assignment& values) const {
    double out = 1.0;
    for (const auto& [s, e] : factors_) {
        auto it = values.find(s);
        if (it == values.end()) {
            throw InvalidInput("no value assigned to symbol '" + s.name() + "'");
        }
        double p = 1.0;
        for (unsigned k = 0; k < e; ++k) p *= it->second;
        out *= p;
    }
    return out;
}

bool GrlexDescending::operator()(const Monomial& lhs, const Monomial& rhs) const {
    if (lhs.degree() != rhs.degree()) return lhs.degree() > rhs.degree();
    const auto& a = lhs.factors();
    const auto& b = rhs.factors();
    std::size_t i = 0;
    for (; i < a.size() && i < b.size(); ++i) {
        if (a[i].first != b[i].first) return a[i].first < b[i].first;
        if (a[i].second != b[i].second) return a[i].second > b[i].second;
    }
    return i < a.size() && i >= b.size();
}

// ---------------------------------------------------------------------------
// DiffPoly

DiffPoly::DiffPoly(const Rational& constant) { add_term(Monomial{}, constant); }

DiffPoly::DiffPoly(Symbol symbol) { terms_.emplace(Monomial(symbol), Rational(1)); }

DiffPoly::DiffPoly(const Monomial& monomial, const Rational& coefficient) { add_term(monomial, coefficient); }

DiffPoly DiffPoly::parse(const std::string& text) { return parse_diff_poly(text); }

void DiffPoly::add_term(const Monomial& monomial, const Rational& coefficient) {
    if (sgn(coefficient) == 0) return;
    Rational value = coefficient;
    value.canonicalize();
    auto [it, inserted] = terms_.try_emplace(monomial, value);
    if (!inserted) {
        it->second += value;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

bool DiffPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational DiffPoly::constant_term() const { return coefficient(Monomial{}); }

Rational DiffPoly::coefficient(const Monomial& monomial) const {
    auto it = terms_.find(monomial);
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned DiffPoly::total_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

std::set<Symbol> DiffPoly::symbols() const {
    std::set<Symbol> out;
    for (const auto& [m, c] : terms_) {
        for (const auto& [s, e] : m.factors()) out.insert(s);
    }
    return out;
}

const std::pair<const Monomial, Rational>& DiffPoly::leading() const {
    if (terms_.empty()) throw InvalidInput("zero polynomial has no leading term");
    return *terms_.begin();
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

DiffPoly& DiffPoly::operator*=(const DiffPoly& other) { return *this = *this * other; }

DiffPoly DiffPoly::operator-() const {
    DiffPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

DiffPoly operator*(const DiffPoly& lhs, const DiffPoly& rhs) {
    DiffPoly out;
    for (const auto& [ma, ca] : lhs.terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

DiffPoly DiffPoly::pow(unsigned exponent) const {
    DiffPoly result(1);
    DiffPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

DiffPoly DiffPoly::partial(const Symbol& symbol) const {
    DiffPoly out;
    for (const auto& [m, c] : terms_) {
        const unsigned e = m.exponent_of(symbol);
        if (e == 0) continue;
        out.add_term(m.without_one(symbol), c * e);
    }
    return out;
}

DiffPoly DiffPoly::substitute(const std::map<Symbol, DiffPoly>& rules) const {
    DiffPoly out;
    for (const auto& [m, c] : terms_) {
        Monomial kept;
        DiffPoly replaced(1);
        for (const auto& [s, e] : m.factors()) {
            auto it = rules.find(s);
            if (it == rules.end()) {
                kept = kept * Monomial(s, e);
            } else {
                replaced *= it->second.pow(e);
            }
        }
        out += DiffPoly(kept, c) * replaced;
    }
    return out;
}

double DiffPoly::evaluate(const Assignment& values) const {
    double sum = 0.0;
    for (const auto& [m, c] : terms_) {
        sum += c.get_d() * m.evaluate(values);
    }
    return sum;
}

std::string rational_to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string DiffPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = sgn(c) < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;

        const Rational magnitude = abs(c);
        if (m.is_one()) {
            out += rational_to_string(magnitude);
            continue;
        }
        if (magnitude != 1) {
            if (magnitude.get_den() == 1) {
                out += rational_to_string(magnitude) + "*";
            } else {
                out += "(" + rational_to_string(magnitude) + ")*";
            }
        }
        bool first_factor = true;
        for (const auto& [s, e] : m.factors()) {
            if (!first_factor) out += "*";
            first_factor = false;
            out += s.name();
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

std::optional<DiffPoly> monomial_quotient(const DiffPoly& numerator, const DiffPoly& denominator) {
    if (numerator.is_zero() || denominator.is_zero()) return std::nullopt;
    const auto& [mn, cn] = numerator.leading();
    const auto& [md, cd] = denominator.leading();
    auto m = mn.divided_by(md);
    if (!m) return std::nullopt;
    DiffPoly factor(*m, cn / cd);
    if (factor * denominator != numerator) return std::nullopt;
    return factor;
}

}  // namespace solitonlab::sym
