#include "hjd/grid.hpp"

#include <bit>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hjd {

TorusGrid::TorusGrid(int dim, int points_per_axis, double side)
    : dim_(dim), m_(points_per_axis), side_(side) {
    if (dim < 1) throw std::invalid_argument("TorusGrid: dim must be >= 1");
    if (points_per_axis < 2) throw std::invalid_argument("TorusGrid: points_per_axis must be >= 2");
    if (!(side > 0.0)) throw std::invalid_argument("TorusGrid: side must be positive");
    dx_ = side_ / m_;
    num_vertices_ = 1;
    for (int k = 0; k < dim_; ++k) num_vertices_ *= static_cast<std::size_t>(m_);
}

std::size_t TorusGrid::stride(int axis) const {
    assert(axis >= 0 && axis < dim_);
    std::size_t s = 1;
    for (int k = 0; k < axis; ++k) s *= static_cast<std::size_t>(m_);
    return s;
}

std::size_t TorusGrid::neighbor(std::size_t vertex, int axis, int shift) const {
    assert(shift == 1 || shift == -1);
    const std::size_t s = stride(axis);
    const int c = static_cast<int>((vertex / s) % static_cast<std::size_t>(m_));
    if (shift == 1) {
        return c == m_ - 1 ? vertex - s * static_cast<std::size_t>(m_ - 1) : vertex + s;
    }
    return c == 0 ? vertex + s * static_cast<std::size_t>(m_ - 1) : vertex - s;
}

int TorusGrid::coord(std::size_t vertex, int axis) const {
    return static_cast<int>((vertex / stride(axis)) % static_cast<std::size_t>(m_));
}

double TorusGrid::position(std::size_t vertex, int axis) const {
    return -0.5 * side_ + coord(vertex, axis) * dx_;
}

double TorusGrid::periodic_distance(std::size_t vertex, std::span<const double> point) const {
    assert(static_cast<int>(point.size()) == dim_);
    double sq = 0.0;
    for (int k = 0; k < dim_; ++k) {
        double delta = std::fabs(position(vertex, k) - point[k]);
        delta = std::fmod(delta, side_);
        delta = std::min(delta, side_ - delta);
        sq += delta * delta;
    }
    return std::sqrt(sq);
}

ScalarField::ScalarField(TorusGrid grid, double fill)
    : grid_(grid), values_(grid.num_vertices(), fill) {}

ScalarField::ScalarField(TorusGrid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.num_vertices())
        throw std::invalid_argument("ScalarField: values length must equal vertex count");
}

double ScalarField::max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::fabs(v));
    return m;
}

double field_sum(std::span<const double> values) {
    double sum = 0.0, comp = 0.0;
    for (double v : values) {
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

double dot(const ScalarField& a, const ScalarField& b) {
    assert(a.size() == b.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

DensityField::DensityField(ScalarField field) : field_(std::move(field)) {
    for (double v : field_.values()) {
        if (!(v >= 0.0 && v <= 1.0))
            throw std::invalid_argument("DensityField: cell masses must lie in [0,1]");
    }
    const double mass = field_sum(field_.values());
    if (std::fabs(mass - 1.0) > 1e-12)
        throw std::invalid_argument("DensityField: total mass must equal 1 within 1e-12, got " +
                                    std::to_string(mass));
}

DensityField DensityField::normalized(ScalarField raw) {
    double mass = 0.0;
    std::size_t argmax = 0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (!(raw[i] >= 0.0))
            throw std::invalid_argument("DensityField::normalized requires nonnegative input");
        if (raw[i] > raw[argmax]) argmax = i;
        mass += raw[i];
    }
    if (!(mass > 0.0)) throw std::invalid_argument("DensityField::normalized requires positive total mass");
    for (double& v : raw.values()) v /= mass;
    // absorb the rounding residual into the largest cell
    raw[argmax] -= field_sum(raw.values()) - 1.0;
    return DensityField(std::move(raw));
}

EdgeField::EdgeField(TorusGrid grid, double fill)
    : grid_(grid), values_(grid.num_edges(), fill) {}

EdgeField::EdgeField(TorusGrid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.num_edges())
        throw std::invalid_argument("EdgeField: values length must equal edge count");
}

MultilevelHierarchy::MultilevelHierarchy(const TorusGrid& finest, int n_levels) {
    if (n_levels < 1) throw std::invalid_argument("MultilevelHierarchy: need at least one level");
    int m = finest.points_per_axis();
    for (int j = 1; j < n_levels; ++j) {
        if (m % 2 != 0)
            throw std::invalid_argument(
                "MultilevelHierarchy: points_per_axis must be divisible by 2^(levels-1)");
        m /= 2;
        if (m < 2) throw std::invalid_argument("MultilevelHierarchy: coarsest level needs >= 2 points");
    }
    for (int j = n_levels - 1; j >= 0; --j) {
        const int mj = finest.points_per_axis() >> j;
        levels_.emplace_back(finest.dim(), mj, finest.side());
    }
}

const TorusGrid& MultilevelHierarchy::level(int i) const {
    if (i < 0 || i >= num_levels()) throw std::invalid_argument("MultilevelHierarchy: invalid level");
    return levels_[static_cast<std::size_t>(i)];
}

EdgeField forward_difference(const ScalarField& phi) {
    const TorusGrid& g = phi.grid();
    EdgeField out(g);
    const double inv_dx = 1.0 / g.spacing();
    for (int v = 0; v < g.dim(); ++v) {
        for (std::size_t i = 0; i < g.num_vertices(); ++i) {
            out.at(i, v) = (phi[i] - phi[g.neighbor(i, v, +1)]) * inv_dx;
        }
    }
    return out;
}

ScalarField divergence(const EdgeField& m) {
    const TorusGrid& g = m.grid();
    ScalarField out(g);
    const double inv_dx = 1.0 / g.spacing();
    for (int v = 0; v < g.dim(); ++v) {
        for (std::size_t i = 0; i < g.num_vertices(); ++i) {
            out[i] += (m.at(i, v) - m.at(g.neighbor(i, v, -1), v)) * inv_dx;
        }
    }
    return out;
}

EdgeField edge_average(const ScalarField& rho) {
    const TorusGrid& g = rho.grid();
    EdgeField out(g);
    for (int v = 0; v < g.dim(); ++v) {
        for (std::size_t i = 0; i < g.num_vertices(); ++i) {
            out.at(i, v) = 0.5 * (rho[i] + rho[g.neighbor(i, v, +1)]);
        }
    }
    return out;
}

namespace {

void check_levels(const MultilevelHierarchy& h, int from, int to, bool coarsening) {
    if (from < 0 || from >= h.num_levels() || to < 0 || to >= h.num_levels())
        throw std::invalid_argument("transfer: invalid level index");
    if (coarsening && !(to < from))
        throw std::invalid_argument("restrict: to_level must be coarser (smaller) than from_level");
    if (!coarsening && !(to > from))
        throw std::invalid_argument("extend: to_level must be finer (larger) than from_level");
}

void check_field_level(const ScalarField& f, const TorusGrid& expected, const char* op) {
    if (!(f.grid() == expected))
        throw std::invalid_argument(std::string(op) + ": field does not live on from_level grid");
}

// One coarsening step by injection: coarse j reads fine 2j.
ScalarField inject_once(const ScalarField& fine, const TorusGrid& coarse) {
    ScalarField out(coarse);
    const int d = coarse.dim();
    const int mc = coarse.points_per_axis();
    for (std::size_t j = 0; j < coarse.num_vertices(); ++j) {
        std::size_t fi = 0, fs = 1;
        std::size_t rem = j;
        for (int k = 0; k < d; ++k) {
            const int cj = static_cast<int>(rem % static_cast<std::size_t>(mc));
            rem /= static_cast<std::size_t>(mc);
            fi += static_cast<std::size_t>(2 * cj) * fs;
            fs *= static_cast<std::size_t>(2 * mc);
        }
        out[j] = fine[fi];
    }
    return out;
}

// One coarsening step by full weighting in the mass convention: the coarse
// cell at 2j collects weight 1 from fine cell 2j and 1/2 from each of its
// 3^d - 1 neighbors (tensor product), so column sums are exactly 1.
ScalarField full_weight_once(const ScalarField& fine, const TorusGrid& coarse) {
    ScalarField out(coarse);
    const TorusGrid& fg = fine.grid();
    const int d = coarse.dim();
    std::vector<int> offs(static_cast<std::size_t>(d), -1);
    for (std::size_t j = 0; j < coarse.num_vertices(); ++j) {
        // center fine vertex
        std::size_t center = 0, fs = 1;
        std::size_t rem = j;
        const int mc = coarse.points_per_axis();
        for (int k = 0; k < d; ++k) {
            const int cj = static_cast<int>(rem % static_cast<std::size_t>(mc));
            rem /= static_cast<std::size_t>(mc);
            center += static_cast<std::size_t>(2 * cj) * fs;
            fs *= static_cast<std::size_t>(2 * mc);
        }
        double acc = 0.0;
        // enumerate offsets in {-1,0,1}^d
        for (int& o : offs) o = -1;
        while (true) {
            std::size_t fi = center;
            double w = 1.0;
            for (int k = 0; k < d; ++k) {
                if (offs[static_cast<std::size_t>(k)] != 0) {
                    fi = fg.neighbor(fi, k, offs[static_cast<std::size_t>(k)]);
                    w *= 0.5;
                }
            }
            acc += w * fine[fi];
            int k = 0;
            for (; k < d; ++k) {
                if (offs[static_cast<std::size_t>(k)] < 1) {
                    ++offs[static_cast<std::size_t>(k)];
                    break;
                }
                offs[static_cast<std::size_t>(k)] = -1;
            }
            if (k == d) break;
        }
        out[j] = acc;
    }
    return out;
}

// One refinement step by periodic multilinear interpolation.
ScalarField interpolate_once(const ScalarField& coarse, const TorusGrid& fine) {
    ScalarField out(fine);
    const TorusGrid& cg = coarse.grid();
    const int d = fine.dim();
    const int mf = fine.points_per_axis();
    for (std::size_t i = 0; i < fine.num_vertices(); ++i) {
        // base coarse vertex (floored) and per-axis parity
        std::size_t base = 0, cs = 1;
        unsigned odd_mask = 0;
        std::size_t rem = i;
        for (int k = 0; k < d; ++k) {
            const int fi = static_cast<int>(rem % static_cast<std::size_t>(mf));
            rem /= static_cast<std::size_t>(mf);
            base += static_cast<std::size_t>(fi / 2) * cs;
            if (fi % 2 == 1) odd_mask |= 1u << k;
            cs *= static_cast<std::size_t>(mf / 2);
        }
        double acc = 0.0;
        const unsigned corners = 1u << std::popcount(odd_mask);
        for (unsigned c = 0; c < corners; ++c) {
            std::size_t cj = base;
            unsigned bit = 0;
            for (int k = 0; k < d; ++k) {
                if (!(odd_mask & (1u << k))) continue;
                if (c & (1u << bit)) cj = cg.neighbor(cj, k, +1);
                ++bit;
            }
            acc += coarse[cj];
        }
        out[i] = acc / corners;
    }
    return out;
}

}  // namespace

ScalarField restrict_potential(const ScalarField& fine, const MultilevelHierarchy& h,
                               int from_level, int to_level) {
    check_levels(h, from_level, to_level, /*coarsening=*/true);
    check_field_level(fine, h.level(from_level), "restrict_potential");
    ScalarField cur = fine;
    for (int j = from_level; j > to_level; --j) cur = inject_once(cur, h.level(j - 1));
    return cur;
}

ScalarField restrict_density(const ScalarField& fine, const MultilevelHierarchy& h,
                             int from_level, int to_level) {
    check_levels(h, from_level, to_level, /*coarsening=*/true);
    check_field_level(fine, h.level(from_level), "restrict_density");
    ScalarField cur = fine;
    for (int j = from_level; j > to_level; --j) cur = full_weight_once(cur, h.level(j - 1));
    return cur;
}

ScalarField extend(const ScalarField& coarse, const MultilevelHierarchy& h,
                   int from_level, int to_level) {
    check_levels(h, from_level, to_level, /*coarsening=*/false);
    check_field_level(coarse, h.level(from_level), "extend");
    ScalarField cur = coarse;
    for (int j = from_level; j < to_level; ++j) cur = interpolate_once(cur, h.level(j + 1));
    return cur;
}

}  // namespace hjd
