#include "solitonlab/geometry/export.hpp"

#include <ostream>

#include "solitonlab/errors.hpp"
#include "solitonlab/format.hpp"

namespace solitonlab::geo {

void write_residual_csv(std::ostream& out, const GridResidual& residual) {
    out << "s,t,x,y,z,H,Hphi\n";
    for (const auto& p : residual.samples) {
        out << format_double(p.s) << ',' << format_double(p.t) << ',' << format_double(p.position.x) << ','
            << format_double(p.position.y) << ',' << format_double(p.position.z) << ',' << format_double(p.H) << ','
            << format_double(p.Hphi) << '\n';
    }
}

MeshStats write_obj(std::ostream& out, const SurfaceChart& chart, const Grid& grid, bool close_seam) {
    if (close_seam && !grid.t_periodic) throw InvalidInput("seam closure needs a t-periodic chart");
    const std::vector<Vec3> vertices = sample_positions(chart, grid);
    out << "o " << chart.name() << '\n';
    for (const auto& v : vertices) {
        out << "v " << format_double(v.x) << ' ' << format_double(v.y) << ' ' << format_double(v.z) << '\n';
    }
    MeshStats stats{vertices.size(), 0};
    const std::size_t columns = close_seam ? grid.nt : grid.nt - 1;
    auto index = [&](std::size_t i, std::size_t j) { return i * grid.nt + (j % grid.nt) + 1; };
    for (std::size_t i = 0; i + 1 < grid.ns; ++i) {
        for (std::size_t j = 0; j < columns; ++j) {
            const std::size_t a = index(i, j);
            const std::size_t b = index(i + 1, j);
            const std::size_t c = index(i + 1, j + 1);
            const std::size_t d = index(i, j + 1);
            out << "f " << a << ' ' << b << ' ' << c << '\n';
            out << "f " << a << ' ' << c << ' ' << d << '\n';
            stats.triangles += 2;
        }
    }
    return stats;
}

}  // namespace solitonlab::geo
