#include "solitonlab/symbolic/frame_vector.hpp"

namespace solitonlab::sym {

FrameVector& FrameVector::operator+=(const FrameVector& other) {
    for (std::size_t i = 0; i < 3; ++i) comp[i] += other.comp[i];
    return *this;
}

FrameVector operator*(const TrigPoly& scale, const FrameVector& v) {
    return {scale * v.comp[0], scale * v.comp[1], scale * v.comp[2]};
}

FrameVector FrameVector::d_dt() const { return {comp[0].d_dt(), comp[1].d_dt(), comp[2].d_dt()}; }

FrameVector FrameVector::d_ds_fixed(const DerivationTable& table) const {
    return {comp[0].d_ds(table), comp[1].d_ds(table), comp[2].d_ds(table)};
}

FrameVector FrameVector::d_ds_frenet(const DerivationTable& table) const {
    const TrigPoly kappa(DiffPoly::of(Base::kappa));
    const TrigPoly sigma(DiffPoly::of(Base::sigma));
    return {
        comp[0].d_ds(table) - kappa * comp[1],
        comp[1].d_ds(table) + kappa * comp[0] - sigma * comp[2],
        comp[2].d_ds(table) + sigma * comp[1],
    };
}

TrigPoly dot(const FrameVector& lhs, const FrameVector& rhs) {
    return lhs[0] * rhs[0] + lhs[1] * rhs[1] + lhs[2] * rhs[2];
}

FrameVector cross(const FrameVector& lhs, const FrameVector& rhs) {
    return {
        lhs[1] * rhs[2] - lhs[2] * rhs[1],
        lhs[2] * rhs[0] - lhs[0] * rhs[2],
        lhs[0] * rhs[1] - lhs[1] * rhs[0],
    };
}

TrigPoly triple(const FrameVector& lhs, const FrameVector& mid, const FrameVector& rhs) {
    return dot(cross(lhs, mid), rhs);
}

}  // namespace solitonlab::sym
