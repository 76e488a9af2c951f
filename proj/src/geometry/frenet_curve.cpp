#include "solitonlab/geometry/frenet_curve.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "solitonlab/errors.hpp"
#include "solitonlab/format.hpp"
#include "solitonlab/profiles/ode.hpp"

namespace solitonlab::geo {

namespace {

// State layout: position, t, n, b, center.
constexpr std::size_t kDim = 15;
using State = profiles::State<kDim>;

Vec3 slot(const double* y, std::size_t k) { return {y[3 * k], y[3 * k + 1], y[3 * k + 2]}; }

void put(double* y, std::size_t k, const Vec3& v) {
    y[3 * k] = v.x;
    y[3 * k + 1] = v.y;
    y[3 * k + 2] = v.z;
}

void orthonormalize(Vec3& t, Vec3& n, Vec3& b) {
    t = (1.0 / norm(t)) * t;
    n = n - dot(n, t) * t;
    n = (1.0 / norm(n)) * n;
    b = cross(t, n);
}

double frame_defect(const Vec3& t, const Vec3& n, const Vec3& b) {
    const Vec3 f[3] = {t, n, b};
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) worst = std::max(worst, std::abs(dot(f[i], f[j]) - (i == j ? 1.0 : 0.0)));
    }
    return worst;
}

}  // namespace

FrenetCurve::FrenetCurve(profiles::Profile1D kappa, profiles::Profile1D sigma, std::vector<Node> nodes)
    : kappa_(std::move(kappa)), sigma_(std::move(sigma)), nodes_(std::move(nodes)) {
    if (nodes_.empty()) throw InvalidInput("curve needs at least one node");
}

FramePoint FrenetCurve::at(double s) const {
    if (!(s >= lo() && s <= hi())) {
        throw DomainError("curve evaluated outside [" + format_double(lo()) + ", " + format_double(hi()) + "] at " +
                          format_double(s));
    }
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), s, [](double x, const Node& n) { return x < n.s; });
    std::vector<double> y(kDim);
    if (it == nodes_.end()) {
        y = nodes_.back().y;
    } else if (it == nodes_.begin()) {
        y = nodes_.front().y;
    } else {
        const Node& a = *(it - 1);
        const Node& b = *it;
        for (std::size_t i = 0; i < kDim; ++i) {
            y[i] = s == a.s ? a.y[i] : profiles::hermite(a.s, a.y[i], a.dy[i], b.s, b.y[i], b.dy[i], s);
        }
    }
    FramePoint p{slot(y.data(), 0), slot(y.data(), 1), slot(y.data(), 2), slot(y.data(), 3), slot(y.data(), 4)};
    orthonormalize(p.t, p.n, p.b);
    return p;
}

double FrenetCurve::max_orthonormality_defect() const {
    double worst = 0.0;
    for (const auto& node : nodes_) {
        worst = std::max(worst, frame_defect(slot(node.y.data(), 1), slot(node.y.data(), 2), slot(node.y.data(), 3)));
    }
    return worst;
}

FrenetCurve frenet_curve(const profiles::Profile1D& kappa, const profiles::Profile1D& sigma, const FrenetInit& init,
                         double s0, double s1, double tol, const std::optional<CenterOffsets>& offsets) {
    if (!(s1 > s0)) throw InvalidInput("curve span must be increasing");
    if (!(tol > 0.0)) throw InvalidInput("curve tolerance must be positive");
    if (frame_defect(init.t, init.n, init.b) > 1e-12 || det(init.t, init.n, init.b) < 0.0) {
        throw InvalidInput("initial frame is not a right-handed orthonormal frame");
    }
    for (double s : {s0, s1}) {
        if (!kappa.contains(s) || !sigma.contains(s)) throw DomainError("curvature or torsion undefined on the span");
        if (offsets && (!offsets->u.contains(s) || !offsets->v.contains(s) || !offsets->w.contains(s))) {
            throw DomainError("center offsets undefined on the span");
        }
    }

    auto rhs = [&](double s, const State& y) -> State {
        const double k = kappa(s).value;
        const double sg = sigma(s).value;
        const Vec3 t = slot(y.data(), 1);
        const Vec3 n = slot(y.data(), 2);
        const Vec3 b = slot(y.data(), 3);
        State dy{};
        put(dy.data(), 0, t);
        put(dy.data(), 1, k * n);
        put(dy.data(), 2, -k * t + sg * b);
        put(dy.data(), 3, -sg * n);
        if (offsets) put(dy.data(), 4, offsets->u(s).value * t + offsets->v(s).value * n + offsets->w(s).value * b);
        return dy;
    };
    auto project = [](State& y) {
        Vec3 t = slot(y.data(), 1);
        Vec3 n = slot(y.data(), 2);
        Vec3 b = slot(y.data(), 3);
        orthonormalize(t, n, b);
        put(y.data(), 1, t);
        put(y.data(), 2, n);
        put(y.data(), 3, b);
    };

    State y0{};
    put(y0.data(), 0, init.position);
    put(y0.data(), 1, init.t);
    put(y0.data(), 2, init.n);
    put(y0.data(), 3, init.b);
    put(y0.data(), 4, init.center);

    profiles::StepControl control;
    control.rtol = tol;
    control.atol = tol;
    control.max_step = std::min(0.05, (s1 - s0) / 20.0);
    const auto run = profiles::dormand_prince<kDim>(rhs, s0, s1, y0, control,
                                                    [](const profiles::OdeNode<kDim>&) { return true; }, project);
    if (run.domain_exit) throw NumericFailure("curve integration left the domain of kappa or sigma");

    std::vector<FrenetCurve::Node> nodes;
    nodes.reserve(run.nodes.size());
    for (const auto& node : run.nodes) {
        nodes.push_back({node.t, std::vector<double>(node.y.begin(), node.y.end()),
                         std::vector<double>(node.dy.begin(), node.dy.end())});
    }
    return {kappa, sigma, std::move(nodes)};
}

}  // namespace solitonlab::geo
