#include "hjd/hamiltonian.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hjd/errors.hpp"

namespace hjd {

namespace {

constexpr double kPi = std::numbers::pi;

void check_saddle_dim(const HamiltonianSpec& spec, std::size_t n) {
    if (spec.kind == HamiltonianKind::SaddleQuadratic && n != 2)
        throw std::invalid_argument("SaddleQuadratic Hamiltonian requires dimension 2");
}

void check_spec(const HamiltonianSpec& spec) {
    if (spec.kind == HamiltonianKind::SoftL1 && !(spec.c > 0.0))
        throw std::invalid_argument("SoftL1 Hamiltonian requires c > 0");
}

double soft_l1_value(double c, double s) {
    return 2.0 / kPi * s * std::atan(c * s) - std::log1p(c * c * s * s) / (c * kPi);
}

}  // namespace

double axis_value(const HamiltonianSpec& spec, int axis, double s) {
    switch (spec.kind) {
        case HamiltonianKind::Quadratic:
            return 0.5 * s * s;
        case HamiltonianKind::SaddleQuadratic:
            if (axis > 1) throw std::invalid_argument("SaddleQuadratic Hamiltonian requires dimension 2");
            return axis == 0 ? 0.5 * s * s : -0.5 * s * s;
        case HamiltonianKind::SoftL1:
            check_spec(spec);
            return soft_l1_value(spec.c, s);
    }
    throw std::logic_error("unknown Hamiltonian kind");
}

double axis_derivative(const HamiltonianSpec& spec, int axis, double s) {
    switch (spec.kind) {
        case HamiltonianKind::Quadratic:
            return s;
        case HamiltonianKind::SaddleQuadratic:
            if (axis > 1) throw std::invalid_argument("SaddleQuadratic Hamiltonian requires dimension 2");
            return axis == 0 ? s : -s;
        case HamiltonianKind::SoftL1:
            check_spec(spec);
            return 2.0 / kPi * std::atan(spec.c * s);
    }
    throw std::logic_error("unknown Hamiltonian kind");
}

double eval_h(const HamiltonianSpec& spec, std::span<const double> p) {
    check_saddle_dim(spec, p.size());
    double sum = 0.0;
    for (std::size_t v = 0; v < p.size(); ++v) sum += axis_value(spec, static_cast<int>(v), p[v]);
    return sum;
}

std::vector<double> eval_dh(const HamiltonianSpec& spec, std::span<const double> p) {
    check_saddle_dim(spec, p.size());
    std::vector<double> out(p.size());
    for (std::size_t v = 0; v < p.size(); ++v)
        out[v] = axis_derivative(spec, static_cast<int>(v), p[v]);
    return out;
}

double eval_lagrangian(const HamiltonianSpec& spec, std::span<const double> v) {
    check_spec(spec);
    switch (spec.kind) {
        case HamiltonianKind::Quadratic: {
            double sum = 0.0;
            for (double w : v) sum += 0.5 * w * w;
            return sum;
        }
        case HamiltonianKind::SaddleQuadratic:
            throw UnsupportedLagrangianError(
                "SaddleQuadratic Hamiltonian has no convex Legendre dual");
        case HamiltonianKind::SoftL1: {
            double sum = 0.0;
            for (double w : v) {
                if (std::fabs(w) >= 1.0) return std::numeric_limits<double>::infinity();
                const double sec = 1.0 / std::cos(0.5 * kPi * w);
                sum += std::log(sec * sec) / (spec.c * kPi);
            }
            return sum;
        }
    }
    throw std::logic_error("unknown Hamiltonian kind");
}

}  // namespace hjd
