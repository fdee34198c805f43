#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hjd/grid.hpp"

namespace hjd {

/// Terminal cost: Moreau envelope of the indicator of densities supported
/// on the periodic ball B_radius(center), with smoothing parameter moreau_v.
/// Membership uses wraparound distance; vertices at distance exactly radius
/// are inside.
struct BallTerminalCost {
    std::vector<double> center;
    double radius = 1.0;
    double moreau_v = 1e-3;
};

/// Indices of the grid vertices inside the ball. Throws EmptyBallError if none.
std::vector<std::size_t> ball_vertices(const TorusGrid& grid, const BallTerminalCost& cost);

/// Convex conjugate of the terminal cost:
/// max of phi0 over ball vertices + (v/2) * dx^d * sum_i phi0[i]^2.
double conjugate_g(const BallTerminalCost& cost, const ScalarField& phi0);
double conjugate_g(const BallTerminalCost& cost, const ScalarField& phi0,
                   std::span<const std::size_t> ball);

/// Euclidean projection of an arbitrary vertex field onto the densities
/// supported on the ball: argmin ||p - rho||^2 over {p >= 0, p zero off the
/// ball, sum p = 1}. Sort-and-threshold on the ball coordinates.
DensityField project_ball_simplex(const ScalarField& rho, const BallTerminalCost& cost);

/// Moreau-envelope value (1/(2v)) * sum_i (proj[i] - rho[i])^2.
double moreau_g(const BallTerminalCost& cost, const DensityField& rho);

enum class InteractionKind { Zero };

/// Running interaction potential F. Only the trivial kind ships; the
/// contract for future kinds is value = F(rho), gradient[i] = dF/drho_i.
struct InteractionSpec {
    InteractionKind kind = InteractionKind::Zero;
};

struct InteractionEval {
    double value;
    ScalarField gradient;
};

InteractionEval eval_interaction(const InteractionSpec& spec, const ScalarField& rho);

/// Fenchel-Young gap G(rho0) + G*(phi0) - <rho0, phi0>. Nonnegative up to
/// rounding; a near-zero value certifies phi0 as a subgradient of G at rho0.
double optimality_gap(const BallTerminalCost& cost, const DensityField& rho0,
                      const ScalarField& phi0);

}  // namespace hjd
