#pragma once

#include <cstddef>
#include <vector>

#include "solitonlab/geometry/chart.hpp"

namespace solitonlab::geo {

/// ns x nt samples of a rectangle. s samples include both ends; t samples
/// exclude t_hi when the rectangle is t-periodic.
struct Grid {
    double s_lo = 0.0;
    double s_hi = 1.0;
    std::size_t ns = 2;
    double t_lo = 0.0;
    double t_hi = 1.0;
    std::size_t nt = 2;
    bool t_periodic = false;

    double s_at(std::size_t i) const;
    double t_at(std::size_t j) const;
    std::size_t size() const { return ns * nt; }
};

/// Grid over the chart's declared domain.
Grid grid_over(const SurfaceChart& chart, std::size_t ns, std::size_t nt);

struct GridSample {
    double s = 0.0;
    double t = 0.0;
    Vec3 position;
    double H = 0.0;
    double Hphi = 0.0;
};

struct GridResidual {
    double max = 0.0;
    double mean = 0.0;
    /// Row-major: index i * nt + j for (s_i, t_j).
    std::vector<GridSample> samples;
};

/// Worker threads for grid evaluation: hardware concurrency, capped by SOLITONLAB_THREADS.
unsigned worker_count();

/// |H_phi| statistics over the grid. Rows are evaluated in parallel; the reduction
/// runs in row-major order, so results do not depend on the thread count. A
/// singular point is reported as SingularChart carrying its (s, t); if several
/// points fail, the first in row-major order is reported.
GridResidual residual_grid(const SurfaceChart& chart, const Density& density, const Grid& grid);

/// Positions only, row-major.
std::vector<Vec3> sample_positions(const SurfaceChart& chart, const Grid& grid);

}  // namespace solitonlab::geo
