#ifndef EULERINT_LINALG_HPP
#define EULERINT_LINALG_HPP

#include <optional>
#include <vector>

#include "eulerint/rational.hpp"

namespace eulerint {

// Small dense exact-rational linear algebra. Row-major; sizes are tiny
// (everything here is bounded by the ambient dimension plus a few slack
// variables), so Gaussian elimination without any cleverness is fine.
using RatMat = std::vector<RatVec>;

// Rank of an m x n matrix (destroys a copy).
int rat_rank(RatMat a);

// Solves A x = b for square A. Returns nullopt when singular.
std::optional<RatVec> rat_solve(RatMat a, RatVec b);

// General affine system A x = b (A is m x n). Returns false when
// inconsistent; otherwise yields one particular solution and a basis of the
// nullspace of A (the solution set is x0 + span(basis)).
bool rat_affine_solve(RatMat a, RatVec b, RatVec& x0, std::vector<RatVec>& nullspace);

// True when the relative interiors of two simplices (given by their vertex
// coordinate lists, all in the same ambient dimension) intersect. Decides the
// strict-feasibility LP  { lambda > 0, nu > 0, sum=1 each, same point }
// exactly by basic-solution enumeration.
bool relative_interiors_intersect(const std::vector<RatVec>& simplex_a,
                                  const std::vector<RatVec>& simplex_b);

// Affine independence of a vertex list (non-degenerate simplex test).
bool affinely_independent(const std::vector<RatVec>& verts);

}  // namespace eulerint

#endif
