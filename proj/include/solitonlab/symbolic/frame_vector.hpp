#pragma once

#include <array>

#include "solitonlab/symbolic/derivation.hpp"
#include "solitonlab/symbolic/trig_poly.hpp"

namespace solitonlab::sym {

/// Vector given by its components in an ordered right-handed orthonormal frame.
///
/// The frame is either the fixed canonical basis {E1, E2, E3} or the moving
/// Frenet frame {t, n, b}; only the s-derivative depends on which.
struct FrameVector {
    std::array<TrigPoly, 3> comp;

    FrameVector() = default;
    FrameVector(TrigPoly first, TrigPoly second, TrigPoly third)
        : comp{std::move(first), std::move(second), std::move(third)} {}

    const TrigPoly& operator[](std::size_t i) const { return comp[i]; }

    FrameVector& operator+=(const FrameVector& other);
    friend FrameVector operator+(FrameVector lhs, const FrameVector& rhs) { return lhs += rhs; }
    friend FrameVector operator*(const TrigPoly& scale, const FrameVector& v);
    friend bool operator==(const FrameVector&, const FrameVector&) = default;

    FrameVector d_dt() const;

    /// Componentwise derivative; valid for the fixed canonical basis.
    FrameVector d_ds_fixed(const DerivationTable& table) const;

    /// Derivative in the Frenet frame:
    /// (x_t t + x_n n + x_b b)' = (x_t' - kappa x_n) t + (x_n' + kappa x_t - sigma x_b) n + (x_b' + sigma x_n) b.
    FrameVector d_ds_frenet(const DerivationTable& table) const;
};

TrigPoly dot(const FrameVector& lhs, const FrameVector& rhs);

/// Right-handed cross product (det of the frame = 1).
FrameVector cross(const FrameVector& lhs, const FrameVector& rhs);

/// <lhs x mid, rhs>.
TrigPoly triple(const FrameVector& lhs, const FrameVector& mid, const FrameVector& rhs);

}  // namespace solitonlab::sym
