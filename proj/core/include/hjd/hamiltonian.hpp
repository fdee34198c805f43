#pragma once

#include <span>
#include <vector>

namespace hjd {

enum class HamiltonianKind {
    Quadratic,        // H(p) = 1/2 sum p_v^2
    SaddleQuadratic,  // H(p) = 1/2 (p_1^2 - p_2^2), two dimensions only
    SoftL1,           // smoothed l1: sum_v (2/pi) p_v atan(c p_v) - log(1+c^2 p_v^2)/(c pi)
};

/// Separable Hamiltonian H(p) = sum_v h_v(p_v). The x slot of H(x,p) is
/// intentionally absent: all shipped families are x-independent.
struct HamiltonianSpec {
    HamiltonianKind kind = HamiltonianKind::Quadratic;
    double c = 20.0;  // SoftL1 sharpness, > 0; ignored by the other kinds

    static HamiltonianSpec quadratic() { return {HamiltonianKind::Quadratic, 0.0}; }
    static HamiltonianSpec saddle_quadratic() { return {HamiltonianKind::SaddleQuadratic, 0.0}; }
    static HamiltonianSpec soft_l1(double c) { return {HamiltonianKind::SoftL1, c}; }
};

/// Per-axis Hamiltonian value h_v(s). The axis matters only for
/// SaddleQuadratic, whose second component carries a minus sign.
double axis_value(const HamiltonianSpec& spec, int axis, double s);

/// Per-axis derivative h_v'(s).
double axis_derivative(const HamiltonianSpec& spec, int axis, double s);

double eval_h(const HamiltonianSpec& spec, std::span<const double> p);

std::vector<double> eval_dh(const HamiltonianSpec& spec, std::span<const double> p);

/// Legendre-dual Lagrangian L(v) = sup_p <p,v> - H(p). Returns +infinity
/// outside the dual domain (SoftL1 with any |v_k| >= 1). SaddleQuadratic
/// has no convex dual and throws UnsupportedLagrangianError.
double eval_lagrangian(const HamiltonianSpec& spec, std::span<const double> v);

}  // namespace hjd
