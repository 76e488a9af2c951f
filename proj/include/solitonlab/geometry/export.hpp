#pragma once

#include <iosfwd>

#include "solitonlab/geometry/residual_grid.hpp"

namespace solitonlab::geo {

/// Header `s,t,x,y,z,H,Hphi`, one row per sample in row-major order.
void write_residual_csv(std::ostream& out, const GridResidual& residual);

struct MeshStats {
    std::size_t vertices = 0;
    std::size_t triangles = 0;
};

/// OBJ with `v x y z` lines in row-major grid order and two triangles per grid
/// quad, oriented along X_s x X_t. `close_seam` adds the quads joining the last
/// t column to the first.
MeshStats write_obj(std::ostream& out, const SurfaceChart& chart, const Grid& grid, bool close_seam);

}  // namespace solitonlab::geo
