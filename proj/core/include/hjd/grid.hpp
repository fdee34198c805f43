#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hjd {

/// Periodic uniform grid over the d-torus.
///
/// Vertices are cell centers x_i = -side/2 + i*dx along each axis, with
/// dx = side / points_per_axis. Flattened indices run with axis 0 fastest:
/// index = i_0 + m*(i_1 + m*(i_2 + ...)). All index arithmetic wraps
/// periodically, so shifting any coordinate by points_per_axis is a no-op.
class TorusGrid {
public:
    TorusGrid(int dim, int points_per_axis, double side);

    int dim() const { return dim_; }
    int points_per_axis() const { return m_; }
    double side() const { return side_; }
    double spacing() const { return dx_; }

    std::size_t num_vertices() const { return num_vertices_; }
    std::size_t num_edges() const { return static_cast<std::size_t>(dim_) * num_vertices_; }

    std::size_t stride(int axis) const;

    /// Vertex shifted by `shift` in {-1,+1} cells along `axis`, wrapping periodically.
    std::size_t neighbor(std::size_t vertex, int axis, int shift) const;

    /// Integer coordinate of `vertex` along `axis`, in [0, points_per_axis).
    int coord(std::size_t vertex, int axis) const;

    /// Physical position of `vertex` along `axis` (domain centered at the origin).
    double position(std::size_t vertex, int axis) const;

    /// Wraparound Euclidean distance between `vertex` and an arbitrary point.
    double periodic_distance(std::size_t vertex, std::span<const double> point) const;

    friend bool operator==(const TorusGrid&, const TorusGrid&) = default;

private:
    int dim_;
    int m_;
    double side_;
    double dx_;
    std::size_t num_vertices_;
};

/// Real values on grid vertices. Value-semantic snapshot: carries its grid.
class ScalarField {
public:
    explicit ScalarField(TorusGrid grid, double fill = 0.0);
    ScalarField(TorusGrid grid, std::vector<double> values);

    const TorusGrid& grid() const { return grid_; }
    std::size_t size() const { return values_.size(); }

    double operator[](std::size_t i) const { return values_[i]; }
    double& operator[](std::size_t i) { return values_[i]; }

    std::span<const double> values() const { return values_; }
    std::span<double> values() { return values_; }

    double max_abs() const;

private:
    TorusGrid grid_;
    std::vector<double> values_;
};

/// A ScalarField whose entries are cell masses: each in [0,1], summing to 1.
/// Validated at construction; the backing field is immutable afterwards.
class DensityField {
public:
    explicit DensityField(ScalarField field);

    /// Clamp-free builder: requires nonnegative input with positive total,
    /// rescales to unit mass and absorbs the rounding residual.
    static DensityField normalized(ScalarField raw);

    const ScalarField& field() const { return field_; }
    operator const ScalarField&() const { return field_; }

    const TorusGrid& grid() const { return field_.grid(); }
    std::size_t size() const { return field_.size(); }
    double operator[](std::size_t i) const { return field_[i]; }

private:
    ScalarField field_;
};

/// Real values on directed edges (vertex i, axis v), i.e. the edge i + e_v/2.
/// Layout: values[v * num_vertices + i].
class EdgeField {
public:
    explicit EdgeField(TorusGrid grid, double fill = 0.0);
    EdgeField(TorusGrid grid, std::vector<double> values);

    const TorusGrid& grid() const { return grid_; }
    std::size_t size() const { return values_.size(); }

    double at(std::size_t vertex, int axis) const {
        return values_[static_cast<std::size_t>(axis) * grid_.num_vertices() + vertex];
    }
    double& at(std::size_t vertex, int axis) {
        return values_[static_cast<std::size_t>(axis) * grid_.num_vertices() + vertex];
    }

    std::span<const double> values() const { return values_; }
    std::span<double> values() { return values_; }

private:
    TorusGrid grid_;
    std::vector<double> values_;
};

/// Nested grids for the multilevel optimizer, ordered coarse to fine.
/// points_per_axis doubles from one level to the next, so every coarse
/// vertex coincides geometrically with a fine vertex.
class MultilevelHierarchy {
public:
    MultilevelHierarchy(const TorusGrid& finest, int n_levels);

    int num_levels() const { return static_cast<int>(levels_.size()); }
    const TorusGrid& level(int i) const;
    const TorusGrid& finest() const { return levels_.back(); }

private:
    std::vector<TorusGrid> levels_;
};

// Stencil operations. All are pure functions with periodic wraparound.

/// Per-edge difference (phi[i] - phi[i+e_v]) / dx.
EdgeField forward_difference(const ScalarField& phi);

/// Discrete divergence: (1/dx) * sum_v (m[i,v] - m[i-e_v,v]).
/// Telescopes to zero when summed over all vertices.
ScalarField divergence(const EdgeField& m);

/// Edge density: (rho[i] + rho[i+e_v]) / 2.
EdgeField edge_average(const ScalarField& rho);

/// Kahan-compensated sum of all values.
double field_sum(std::span<const double> values);

/// Plain pairing sum_i a[i]*b[i].
double dot(const ScalarField& a, const ScalarField& b);

// Multilevel transfer operators. Level indices refer to the hierarchy,
// 0 = coarsest. Multi-level jumps compose the one-level kernels.

/// Injection at coincident vertices; preserves constants exactly and is a
/// left inverse of `extend` on coarse fields.
ScalarField restrict_potential(const ScalarField& fine, const MultilevelHierarchy& hierarchy,
                               int from_level, int to_level);

/// Mass-conserving full weighting (tensor stencil 1/2,1,1/2 per axis):
/// the total sum of a restricted field equals the fine total exactly up
/// to rounding, so densities stay densities.
ScalarField restrict_density(const ScalarField& fine, const MultilevelHierarchy& hierarchy,
                             int from_level, int to_level);

/// Periodic multilinear interpolation; preserves constants and bounds.
ScalarField extend(const ScalarField& coarse, const MultilevelHierarchy& hierarchy,
                   int from_level, int to_level);

}  // namespace hjd
