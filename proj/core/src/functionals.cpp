#include "hjd/functionals.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "hjd/errors.hpp"

namespace hjd {

std::vector<std::size_t> ball_vertices(const TorusGrid& grid, const BallTerminalCost& cost) {
    if (static_cast<int>(cost.center.size()) != grid.dim())
        throw std::invalid_argument("ball_vertices: center dimension does not match grid");
    if (!(cost.radius > 0.0)) throw std::invalid_argument("ball_vertices: radius must be positive");
    // inclusive boundary with a relative slack so lattice ties land inside
    const double r = cost.radius * (1.0 + 1e-12);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < grid.num_vertices(); ++i) {
        if (grid.periodic_distance(i, cost.center) <= r) out.push_back(i);
    }
    if (out.empty())
        throw EmptyBallError("terminal-cost ball contains no grid vertex (radius too small for dx)");
    return out;
}

double conjugate_g(const BallTerminalCost& cost, const ScalarField& phi0,
                   std::span<const std::size_t> ball) {
    assert(!ball.empty());
    double sup = phi0[ball.front()];
    for (std::size_t i : ball) sup = std::max(sup, phi0[i]);
    double quad = 0.0;
    for (double v : phi0.values()) quad += v * v;
    double cell = 1.0;
    for (int k = 0; k < phi0.grid().dim(); ++k) cell *= phi0.grid().spacing();
    return sup + 0.5 * cost.moreau_v * cell * quad;
}

double conjugate_g(const BallTerminalCost& cost, const ScalarField& phi0) {
    const auto ball = ball_vertices(phi0.grid(), cost);
    return conjugate_g(cost, phi0, ball);
}

DensityField project_ball_simplex(const ScalarField& rho, const BallTerminalCost& cost) {
    const auto ball = ball_vertices(rho.grid(), cost);
    std::vector<double> vals;
    vals.reserve(ball.size());
    for (std::size_t i : ball) vals.push_back(rho[i]);

    // threshold tau with sum max(vals - tau, 0) = 1
    std::vector<double> sorted = vals;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    double cumsum = 0.0, tau = 0.0;
    std::size_t support = sorted.size();
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        cumsum += sorted[k];
        const double t = (cumsum - 1.0) / static_cast<double>(k + 1);
        if (k + 1 < sorted.size() && sorted[k + 1] > t) continue;
        tau = t;
        support = k + 1;
        break;
    }
    (void)support;

    ScalarField out(rho.grid(), 0.0);
    double mass = 0.0;
    std::size_t arg_top = ball.front();
    for (std::size_t k = 0; k < ball.size(); ++k) {
        const double p = std::max(vals[k] - tau, 0.0);
        out[ball[k]] = p;
        mass += p;
        if (p > out[arg_top]) arg_top = ball[k];
    }
    out[arg_top] -= field_sum(out.values()) - 1.0;
    return DensityField(std::move(out));
}

double moreau_g(const BallTerminalCost& cost, const DensityField& rho) {
    if (!(cost.moreau_v > 0.0)) throw std::invalid_argument("moreau_g: moreau_v must be positive");
    const DensityField proj = project_ball_simplex(rho.field(), cost);
    double sq = 0.0;
    for (std::size_t i = 0; i < rho.size(); ++i) {
        const double d = proj[i] - rho[i];
        sq += d * d;
    }
    return sq / (2.0 * cost.moreau_v);
}

InteractionEval eval_interaction(const InteractionSpec& spec, const ScalarField& rho) {
    switch (spec.kind) {
        case InteractionKind::Zero:
            return {0.0, ScalarField(rho.grid(), 0.0)};
    }
    throw std::logic_error("unknown interaction kind");
}

double optimality_gap(const BallTerminalCost& cost, const DensityField& rho0,
                      const ScalarField& phi0) {
    return moreau_g(cost, rho0) + conjugate_g(cost, phi0) - dot(rho0.field(), phi0);
}

}  // namespace hjd
