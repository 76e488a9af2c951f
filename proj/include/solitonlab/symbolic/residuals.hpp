#pragma once

#include "solitonlab/symbolic/frame_vector.hpp"
#include "solitonlab/symbolic/trig_poly.hpp"

namespace solitonlab::sym {

/// Density vector (alpha, beta, gamma) with symbolic or specialized entries.
struct SymbolicDensity {
    DiffPoly alpha;
    DiffPoly beta;
    DiffPoly gamma;

    /// (alpha, beta, gamma) kept as free parameters.
    static SymbolicDensity generic();
};

/// Numerator of the mean curvature of the cyclic chart
/// X(s,t) = (a, b, s) + r (cos t, sin t, 0):
/// U = 1 + (a' + r' cos t)^2 + (b' + r' sin t)^2 - r (r'' + a'' cos t + b'' sin t).
TrigPoly riemann_u();

/// W = 1 + (r' + a' cos t + b' sin t)^2, so that |X_s x X_t| = r sqrt(W).
TrigPoly riemann_w();

/// Cleared phi-minimality residual of the cyclic chart:
/// U - r W (-alpha cos t - beta sin t + gamma (r' + a' cos t + b' sin t)).
/// Equals r W^{3/2} (2H - <N, v>).
TrigPoly build_riemann_residual(const SymbolicDensity& density);

/// Squared residual of H_phi = c/2 for density e^z:
/// (U - r W (a' cos t + b' sin t + r'))^2 - c^2 r^2 W^3.
TrigPoly build_cmc_squared_residual(const DiffPoly& c = DiffPoly::of(Base::c));

/// Cleared residual of 2H - N_3 for the tube X = c(s) + r (cos t n + sin t b)
/// around a curve with Frenet frame {t, n, b}, where c' = u t + v n + w b:
/// (eG - 2fF + gE) - <X_s x X_t, E3> (EG - F^2) with unnormalized e, f, g.
TrigPoly build_frenet_residual();

/// The same cleared form (eG - 2fF + gE) - <X_s x X_t, v> (EG - F^2), assembled
/// directly from the cyclic chart's jets. Equals r^2 times the Riemann residual.
TrigPoly build_general_cleared_residual(const SymbolicDensity& density);

/// Cleared residual from the second-order jet of a parametrization.
TrigPoly cleared_residual(const FrameVector& xs, const FrameVector& xt, const FrameVector& xss,
                          const FrameVector& xst, const FrameVector& xtt, const FrameVector& density);

}  // namespace solitonlab::sym
