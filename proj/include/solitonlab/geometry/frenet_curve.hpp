#pragma once

#include <optional>
#include <vector>

#include "solitonlab/geometry/vec3.hpp"
#include "solitonlab/profiles/profile1d.hpp"

namespace solitonlab::geo {

/// Point of a space curve with its Frenet frame, plus the optional tube center.
struct FramePoint {
    Vec3 position;
    Vec3 t;
    Vec3 n;
    Vec3 b;
    Vec3 center;
};

/// Velocity of a second curve in the moving frame: center' = u t + v n + w b.
struct CenterOffsets {
    profiles::Profile1D u;
    profiles::Profile1D v;
    profiles::Profile1D w;
};

struct FrenetInit {
    Vec3 position;
    Vec3 t{1, 0, 0};
    Vec3 n{0, 1, 0};
    Vec3 b{0, 0, 1};
    Vec3 center;
};

/// Arclength-parametrized curve obtained from curvature and torsion, with
/// dense output of position, frame and (if offsets were given) center.
class FrenetCurve {
public:
    struct Node {
        double s;
        std::vector<double> y;
        std::vector<double> dy;
    };

    FrenetCurve(profiles::Profile1D kappa, profiles::Profile1D sigma, std::vector<Node> nodes);

    double lo() const { return nodes_.front().s; }
    double hi() const { return nodes_.back().s; }
    const std::vector<Node>& nodes() const noexcept { return nodes_; }
    const profiles::Profile1D& kappa() const noexcept { return kappa_; }
    const profiles::Profile1D& sigma() const noexcept { return sigma_; }

    /// Hermite-interpolated point; the frame is re-orthonormalized. Throws DomainError outside [lo, hi].
    FramePoint at(double s) const;

    /// max over nodes of |F^T F - I| (entrywise) for F = (t, n, b).
    double max_orthonormality_defect() const;

private:
    profiles::Profile1D kappa_;
    profiles::Profile1D sigma_;
    std::vector<Node> nodes_;
};

/// Integrates t' = kappa n, n' = -kappa t + sigma b, b' = -sigma n, c' = t (and
/// center' = u t + v n + w b when offsets are given) over [s0, s1].
/// The frame is re-orthonormalized after every accepted step. Throws InvalidInput
/// for a non-orthonormal initial frame and NumericFailure when the tolerance
/// cannot be met.
FrenetCurve frenet_curve(const profiles::Profile1D& kappa, const profiles::Profile1D& sigma, const FrenetInit& init,
                         double s0, double s1, double tol = 1e-11,
                         const std::optional<CenterOffsets>& offsets = std::nullopt);

}  // namespace solitonlab::geo
