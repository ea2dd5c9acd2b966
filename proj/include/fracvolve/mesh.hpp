#pragma once

#include <array>
#include <vector>

#include "fracvolve/geometry.hpp"

namespace fracvolve {

/// Primal mesh: a 1D interval partition or a 2D triangulation with
/// counterclockwise elements. Immutable after construction.
class Mesh {
public:
    int dim = 2;
    std::vector<Point> vertices;
    std::vector<std::array<int, 3>> elements;  // last slot is -1 in 1D
    std::vector<bool> boundary_flags;
    std::vector<int> interior_index;     // vertex -> unknown index, -1 on the boundary
    std::vector<int> interior_vertices;  // unknown index -> vertex
    double h = 0.0;                      // max element diameter

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int element_count() const { return static_cast<int>(elements.size()); }
    int interior_count() const { return static_cast<int>(interior_vertices.size()); }
    int element_vertex_count() const { return dim + 1; }

    /// Sum of element measures (areas in 2D, lengths in 1D).
    double total_measure() const;

    /// Validating entry point shared by the generators; rejects out-of-range or
    /// repeated vertex indices and nonpositively oriented elements.
    static Mesh from_data(int dim, std::vector<Point> vertices,
                          std::vector<std::array<int, 3>> elements,
                          std::vector<bool> boundary_flags);
};

/// Per-element geometry of the piecewise-linear trial space: the element
/// measure and the constant gradient of each nodal basis function.
struct ElementGeometry {
    double measure = 0.0;
    std::array<Point, 3> corner{};
    std::array<Vec2, 3> basis_gradient{};

    /// Nodal basis function `local` evaluated at p (valid inside the element).
    double basis_value(int local, const Point& p) const {
        return 1.0 + basis_gradient[local].dot(p - corner[local]);
    }
};

/// Structured triangulation of a rectangle: nx-by-ny cells, each split along
/// the lower-left to upper-right diagonal.
Mesh build_structured_triangulation(int nx, int ny, const Rect& domain);

/// Uniform partition of [a, b] into n intervals.
Mesh build_interval_mesh(int n, double a, double b);

ElementGeometry element_geometry(const Mesh& mesh, int element);

}  // namespace fracvolve
