#ifndef EULERINT_COMPLEX_HPP
#define EULERINT_COMPLEX_HPP

#include <array>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "eulerint/rational.hpp"

namespace eulerint {

/**
 * Finite geometric simplicial complex with exact rational vertex coordinates.
 *
 * Cells are stored closed under faces and identified by dense ids; the id
 * order is canonical (dimension first, then lexicographic vertex lists), so
 * any two complexes built from the same data index their cells identically.
 * Instances are immutable after construction and safe to share across
 * threads.
 */
class SimplicialComplex {
  public:
    int ambient_dim() const { return ambient_dim_; }
    int vertex_count() const { return static_cast<int>(vertex_coords_.size()); }
    int cell_count() const { return static_cast<int>(cells_.size()); }
    int top_dim() const { return top_dim_; }

    const RatVec& vertex(int v) const { return vertex_coords_[v]; }
    const std::vector<int>& cell_verts(int c) const { return cells_[c]; }
    int dim(int c) const { return static_cast<int>(cells_[c].size()) - 1; }

    // Cell id for a vertex set (any order), or -1 when absent.
    int cell_id(std::span<const int> verts) const;
    int vertex_cell(int v) const { return vertex_cell_[v]; }

    // All cells whose closure contains c, including c itself (the closed
    // star, as a list of cell ids in increasing id order).
    const std::vector<int>& star(int c) const { return star_[c]; }

    // Proper faces of c (every nonempty strict subset of its vertices).
    std::vector<int> proper_faces(int c) const;

    // Cells that are not a proper face of any other cell, in id order.
    std::vector<int> maximal_cells() const;

    // Compactly supported Euler characteristic of the whole complex.
    long long euler_characteristic() const;

    // Geometric coordinates of a cell's vertices.
    std::vector<RatVec> cell_coords(int c) const;

    struct BuildOptions {
        bool check_degeneracy = true;
        // Pairwise open-interior disjointness; only ever attempted for
        // ambient dimension <= 3.
        bool check_overlap = true;
    };

    static SimplicialComplex build(std::vector<RatVec> vertex_coords,
                                   const std::vector<std::vector<int>>& maximal_cells,
                                   const BuildOptions& opts);

  private:
    SimplicialComplex() = default;

    int ambient_dim_ = 0;
    int top_dim_ = 0;
    std::vector<RatVec> vertex_coords_;
    std::vector<std::vector<int>> cells_;
    std::vector<int> vertex_cell_;  // vertex id -> id of its 0-cell
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> star_;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

// Validating constructor: face closure, coface/star index, non-degeneracy,
// and (ambient dim <= 3) pairwise interior disjointness.
ComplexPtr build_complex(std::vector<RatVec> vertex_coords,
                         const std::vector<std::vector<int>>& maximal_cells);

// chi of a subset of open cells (need not be face-closed); duplicate ids are
// counted once. Throws UnknownCell for out-of-range ids.
long long euler_characteristic(const SimplicialComplex& K, std::span<const int> cell_subset);

// Axis-aligned rectangle triangulated into 2*nx*ny triangles, every grid
// square split along its SW-NE diagonal.
ComplexPtr grid_complex(int nx, int ny, std::pair<Rat, Rat> x_range, std::pair<Rat, Rat> y_range);

// Staircase (ordered-path) triangulation of |K| x |L|; vertex (u,v) gets id
// u * L.vertex_count() + v and the concatenated coordinates.
ComplexPtr product_complex(const SimplicialComplex& K, const SimplicialComplex& L);

// Closed manifold generators with exact rational coordinates.
ComplexPtr circle(int n);
ComplexPtr sphere_boundary();
ComplexPtr torus(int n, int m);

// Disjoint union (vertex ids of L shifted past K's).
ComplexPtr disjoint_union(const SimplicialComplex& K, const SimplicialComplex& L);

// Fan triangulation of a strictly convex CCW polygon.
ComplexPtr triangulate_convex_polygon(const std::vector<std::array<Rat, 2>>& ccw_verts);

// Combinatorial closed-manifold test (n in {1,2}): pure complex with the
// correct vertex/edge link structure.
bool is_closed_manifold(const SimplicialComplex& K, int n);

}  // namespace eulerint

#endif
