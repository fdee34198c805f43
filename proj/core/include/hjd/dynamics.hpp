#pragma once

#include <vector>

#include "hjd/functionals.hpp"
#include "hjd/grid.hpp"
#include "hjd/hamiltonian.hpp"

namespace hjd {

/// Uniform partition of [0, horizon] into n_steps intervals. A degenerate
/// zero-horizon grid (n_steps = 0, dt = 0) is allowed and means "no dynamics".
struct TimeGrid {
    double horizon = 1.0;
    int n_steps = 1;
    double dt = 1.0;
};

TimeGrid make_time_grid(double horizon, int n_steps);

enum class SchemeKind {
    Symplectic,  // centered stencil conserving the numerical Hamiltonian
    Upwind,      // monotone positive/negative-part splitting
    UpwindLF,    // Upwind plus beta-scaled Lax-Friedrichs diffusion
};

struct SchemeConfig {
    SchemeKind kind = SchemeKind::UpwindLF;
    double beta = 2.0;     // Lax-Friedrichs strength, UpwindLF only
    int picard_iters = 1;  // sweeps resolving the implicit phi relation; 1 = lagged
};

/// Per-sweep diagnostics. max_cfl tracks dt*max|D_pH|/dx + beta*dt*d/dx over
/// all steps; values above 1 flag a potential stability violation (warn, not fail).
struct SweepStats {
    double max_cfl = 0.0;
    bool cfl_exceeded = false;
};

/// Full discrete characteristic pair for n = 0..N. rho[N] and phi[N] are the
/// terminal data; total mass of rho[n] is constant in n for every scheme.
struct Trajectory {
    std::vector<ScalarField> rho;
    std::vector<ScalarField> phi;
    TimeGrid time_grid;
};

/// One backward step of the discrete Hamilton-Jacobi relation: given phi at
/// level n+1 (and rho at level n for the interaction term), returns phi at
/// level n. The implicit dependence on the output inside H is resolved by
/// Picard iteration seeded at phi_next.
ScalarField hj_backward_step(const ScalarField& phi_next, const ScalarField& rho_n,
                             const HamiltonianSpec& ham, const InteractionSpec& interaction,
                             const SchemeConfig& scheme, double dt, int time_index = 0);

/// One backward step of the discrete continuity equation: given rho and phi
/// at level n, returns rho at level n-1. Fluxes are assembled in conservative
/// form (each edge flux enters its two endpoint cells with opposite signs),
/// so total mass is preserved exactly up to rounding.
ScalarField continuity_backward_step(const ScalarField& rho_n, const ScalarField& phi_n,
                                     const HamiltonianSpec& ham, const SchemeConfig& scheme,
                                     double dt, double* max_speed = nullptr, int time_index = 0);

/// Integrate the coupled pair from terminal data at n = N down to n = 0.
/// Throws DivergedStepError (with the failing level) on non-finite values.
Trajectory backward_sweep(const ScalarField& phi_terminal, const DensityField& rho_terminal,
                          const HamiltonianSpec& ham, const InteractionSpec& interaction,
                          const SchemeConfig& scheme, const TimeGrid& time_grid,
                          SweepStats* stats = nullptr);

/// The grid functional conserved (to first order in dt, for the lagged
/// Symplectic scheme) along sweeps: sum over edges of H(dphi) * theta + F(rho)
/// for Symplectic, and the monotone variant sum_i sum_v H([dphi]^+) rho_i + F
/// for the Upwind kinds.
double numerical_hamiltonian(const ScalarField& rho_n, const ScalarField& phi_n,
                             const HamiltonianSpec& ham, const InteractionSpec& interaction,
                             SchemeKind kind);

}  // namespace hjd
