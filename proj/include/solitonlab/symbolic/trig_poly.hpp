#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>

#include "solitonlab/symbolic/derivation.hpp"
#include "solitonlab/symbolic/diff_poly.hpp"

namespace solitonlab::sym {

/// Coefficient pair of one harmonic: A_n cos(nt) + B_n sin(nt).
struct Harmonic {
    DiffPoly cos;
    DiffPoly sin;

    bool is_zero() const { return cos.is_zero() && sin.is_zero(); }
    friend bool operator==(const Harmonic&, const Harmonic&) = default;
};

/// Finite trigonometric polynomial sum_n A_n(s) cos(nt) + B_n(s) sin(nt) with
/// differential-polynomial coefficients.
///
/// Canonical form: no stored degree has both parts zero; the sine part at
/// degree 0 is always zero.
class TrigPoly {
public:
    TrigPoly() = default;
    TrigPoly(const DiffPoly& constant);  // NOLINT(google-explicit-constructor)

    static TrigPoly cos(unsigned n, const DiffPoly& coefficient = DiffPoly(1));
    static TrigPoly sin(unsigned n, const DiffPoly& coefficient = DiffPoly(1));
    /// coefficient * cos(n t) + ...; degrees are taken from the map keys.
    static TrigPoly from_harmonics(const std::map<unsigned, Harmonic>& harmonics);

    const std::map<unsigned, Harmonic>& harmonics() const noexcept { return harmonics_; }
    bool is_zero() const noexcept { return harmonics_.empty(); }
    /// Largest stored degree, or nullopt for the zero polynomial.
    std::optional<unsigned> max_degree() const;

    /// (A_n, B_n); zero polynomials when degree `n` is absent.
    std::pair<DiffPoly, DiffPoly> coeff(unsigned n) const;

    TrigPoly& operator+=(const TrigPoly& other);
    TrigPoly& operator-=(const TrigPoly& other);
    TrigPoly operator-() const;
    friend TrigPoly operator+(TrigPoly lhs, const TrigPoly& rhs) { return lhs += rhs; }
    friend TrigPoly operator-(TrigPoly lhs, const TrigPoly& rhs) { return lhs -= rhs; }
    friend TrigPoly operator*(const TrigPoly& lhs, const TrigPoly& rhs);
    friend bool operator==(const TrigPoly&, const TrigPoly&) = default;

    TrigPoly pow(unsigned exponent) const;

    /// Term-wise t-derivative.
    TrigPoly d_dt() const;
    /// Leibniz s-derivative of every coefficient.
    TrigPoly d_ds(const DerivationTable& table) const;

    /// Apply `fn` to every coefficient polynomial and renormalize.
    TrigPoly map_coefficients(const std::function<DiffPoly(const DiffPoly&)>& fn) const;

    /// Floating evaluation at parameter t; summation runs in ascending degree, cosine before sine.
    double eval(const Assignment& values, double t) const;

private:
    void add(unsigned n, const DiffPoly& cos_part, const DiffPoly& sin_part);
    void normalize(unsigned n);

    std::map<unsigned, Harmonic> harmonics_;
};

}  // namespace solitonlab::sym
