#include "solitonlab/symbolic/trig_poly.hpp"

#include <cmath>
#include <cstdlib>

namespace solitonlab::sym {

TrigPoly::TrigPoly(const DiffPoly& constant) { add(0, constant, {}); }

TrigPoly TrigPoly::cos(unsigned n, const DiffPoly& coefficient) {
    TrigPoly out;
    out.add(n, coefficient, {});
    return out;
}

TrigPoly TrigPoly::sin(unsigned n, const DiffPoly& coefficient) {
    TrigPoly out;
    if (n > 0) out.add(n, {}, coefficient);
    return out;
}

TrigPoly TrigPoly::from_harmonics(const std::map<unsigned, Harmonic>& harmonics) {
    TrigPoly out;
    for (const auto& [n, h] : harmonics) out.add(n, h.cos, n == 0 ? DiffPoly{} : h.sin);
    return out;
}

void TrigPoly::add(unsigned n, const DiffPoly& cos_part, const DiffPoly& sin_part) {
    if (cos_part.is_zero() && sin_part.is_zero()) return;
    Harmonic& h = harmonics_[n];
    h.cos += cos_part;
    if (n > 0) h.sin += sin_part;
    normalize(n);
}

void TrigPoly::normalize(unsigned n) {
    auto it = harmonics_.find(n);
    if (it != harmonics_.end() && it->second.is_zero()) harmonics_.erase(it);
}

std::optional<unsigned> TrigPoly::max_degree() const {
    if (harmonics_.empty()) return std::nullopt;
    return harmonics_.rbegin()->first;
}

std::pair<DiffPoly, DiffPoly> TrigPoly::coeff(unsigned n) const {
    auto it = harmonics_.find(n);
    if (it == harmonics_.end()) return {};
    return {it->second.cos, it->second.sin};
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& other) {
    for (const auto& [n, h] : other.harmonics_) add(n, h.cos, h.sin);
    return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& other) {
    for (const auto& [n, h] : other.harmonics_) add(n, -h.cos, -h.sin);
    return *this;
}

TrigPoly TrigPoly::operator-() const {
    TrigPoly out;
    return out -= *this;
}

TrigPoly operator*(const TrigPoly& lhs, const TrigPoly& rhs) {
    // cos A cos B = (cos(A-B) + cos(A+B)) / 2
    // sin A sin B = (cos(A-B) - cos(A+B)) / 2
    // sin A cos B = (sin(A+B) + sin(A-B)) / 2
    // cos A sin B = (sin(A+B) - sin(A-B)) / 2
    const Rational half(1, 2);
    std::map<unsigned, Harmonic> acc;
    auto put = [&acc](unsigned n, const DiffPoly& c, const DiffPoly& s) {
        Harmonic& h = acc[n];
        h.cos += c;
        if (n > 0) h.sin += s;
    };
    for (const auto& [m, hm] : lhs.harmonics_) {
        for (const auto& [n, hn] : rhs.harmonics_) {
            const unsigned sum = m + n;
            const unsigned diff = m >= n ? m - n : n - m;
            // sin(A-B) = sign * sin(|A-B|)
            const int sign = m >= n ? 1 : -1;

            const DiffPoly cc = hm.cos * hn.cos;
            const DiffPoly ss = hm.sin * hn.sin;
            const DiffPoly sc = hm.sin * hn.cos;
            const DiffPoly cs = hm.cos * hn.sin;

            const DiffPoly cos_diff = (cc + ss) * DiffPoly(half);
            const DiffPoly cos_sum = (cc - ss) * DiffPoly(half);
            const DiffPoly sin_sum = (sc + cs) * DiffPoly(half);
            DiffPoly sin_diff = (sc - cs) * DiffPoly(half);
            if (sign < 0) sin_diff = -sin_diff;

            put(diff, cos_diff, sin_diff);
            put(sum, cos_sum, sin_sum);
        }
    }
    return TrigPoly::from_harmonics(acc);
}

TrigPoly TrigPoly::pow(unsigned exponent) const {
    TrigPoly result(DiffPoly(1));
    for (unsigned k = 0; k < exponent; ++k) result = result * *this;
    return result;
}

TrigPoly TrigPoly::d_dt() const {
    TrigPoly out;
    for (const auto& [n, h] : harmonics_) {
        if (n == 0) continue;
        const DiffPoly scale{Rational(n)};
        out.add(n, h.sin * scale, -(h.cos * scale));
    }
    return out;
}

TrigPoly TrigPoly::d_ds(const DerivationTable& table) const {
    return map_coefficients([&table](const DiffPoly& p) { return table.apply(p); });
}

TrigPoly TrigPoly::map_coefficients(const std::function<DiffPoly(const DiffPoly&)>& fn) const {
    TrigPoly out;
    for (const auto& [n, h] : harmonics_) out.add(n, fn(h.cos), n == 0 ? DiffPoly{} : fn(h.sin));
    return out;
}

double TrigPoly::eval(const Assignment& values, double t) const {
    double sum = 0.0;
    for (const auto& [n, h] : harmonics_) {
        const double nt = static_cast<double>(n) * t;
        sum += h.cos.evaluate(values) * std::cos(nt);
        if (n > 0) sum += h.sin.evaluate(values) * std::sin(nt);
    }
    return sum;
}

}  // namespace solitonlab::sym
