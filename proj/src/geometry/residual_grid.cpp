#include "solitonlab/geometry/residual_grid.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>

#include "solitonlab/errors.hpp"
#include "solitonlab/geometry/curvature.hpp"

namespace solitonlab::geo {

double Grid::s_at(std::size_t i) const {
    if (i + 1 == ns) return s_hi;
    return s_lo + (s_hi - s_lo) * static_cast<double>(i) / static_cast<double>(ns - 1);
}

double Grid::t_at(std::size_t j) const {
    if (t_periodic) return t_lo + (t_hi - t_lo) * static_cast<double>(j) / static_cast<double>(nt);
    if (j + 1 == nt) return t_hi;
    return t_lo + (t_hi - t_lo) * static_cast<double>(j) / static_cast<double>(nt - 1);
}

Grid grid_over(const SurfaceChart& chart, std::size_t ns, std::size_t nt) {
    const Domain& d = chart.domain();
    if (ns < 2 || nt < (d.t_periodic ? 1u : 2u)) throw InvalidInput("grid needs at least 2 samples per direction");
    return {d.s_lo, d.s_hi, ns, d.t_lo, d.t_hi, nt, d.t_periodic};
}

unsigned worker_count() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SOLITONLAB_THREADS"); env && *env) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (*end != '\0' || cap < 1) throw InvalidInput("SOLITONLAB_THREADS must be a positive integer");
        n = std::min<unsigned long>(n, static_cast<unsigned long>(cap));
    }
    return n;
}

namespace {

// Runs row(i) for every row on up to worker_count() threads; rethrows the
// exception of the lowest failing row.
template <class Row>
void for_each_row(std::size_t rows, Row&& row) {
    std::vector<std::exception_ptr> errors(rows);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < rows; i = next++) {
            try {
                row(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(worker_count(), rows));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < threads; ++k) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace

GridResidual residual_grid(const SurfaceChart& chart, const Density& density, const Grid& grid) {
    GridResidual out;
    out.samples.resize(grid.size());
    for_each_row(grid.ns, [&](std::size_t i) {
        const double s = grid.s_at(i);
        for (std::size_t j = 0; j < grid.nt; ++j) {
            const double t = grid.t_at(j);
            const Jet2 jet = jet_eval(chart, s, t);
            const FundamentalForms forms = fundamental_forms(jet, s, t);
            out.samples[i * grid.nt + j] = {s, t, jet.x, mean_curvature(forms),
                                            weighted_mean_curvature(forms, density)};
        }
    });
    double sum = 0.0;
    for (const auto& sample : out.samples) {
        const double a = std::abs(sample.Hphi);
        out.max = std::max(out.max, a);
        sum += a;
    }
    out.mean = out.samples.empty() ? 0.0 : sum / static_cast<double>(out.samples.size());
    return out;
}

std::vector<Vec3> sample_positions(const SurfaceChart& chart, const Grid& grid) {
    std::vector<Vec3> out(grid.size());
    for_each_row(grid.ns, [&](std::size_t i) {
        for (std::size_t j = 0; j < grid.nt; ++j) out[i * grid.nt + j] = jet_eval(chart, grid.s_at(i), grid.t_at(j)).x;
    });
    return out;
}

}  // namespace solitonlab::geo
