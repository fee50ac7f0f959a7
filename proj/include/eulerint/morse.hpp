#ifndef EULERINT_MORSE_HPP
#define EULERINT_MORSE_HPP

#include <utility>
#include <vector>

#include "eulerint/defint.hpp"

namespace eulerint {

// Morse co-index / index fields are constructible functions.
using IndexField = CFun;

enum class IndexKind { Coindex, Index };

/**
 * Co-index field of a continuous integrand: each open simplex contributes
 * (-1)^dim to every cell in the closure of its min-face (the face spanned by
 * the vertices where the affine data attains its minimum). The index field
 * uses max-faces; equivalently coindex(conjugate(h)).
 */
IndexField coindex(const DefFun& h);
IndexField index_field(const DefFun& h);

// Restricted to constructible functions the operators act as the identity.
IndexField coindex(const CFun& h);
IndexField index_field(const CFun& h);

/**
 * Morse-sum evaluation: sum over open simplices of (-1)^dim times the value
 * of h on the min-face (Coindex) or max-face (Index). Equals integrate(h,
 * Floor) resp. integrate(h, Ceil) for continuous h.
 */
Rat integrate_via_index(const DefFun& h, IndexKind which);

/**
 * PL critical vertices: v is critical iff chi(lower link of v) != 1, where
 * the lower link is spanned by link vertices with h(w) < h(v). Requires
 * pairwise distinct values on every closed star (TieError).
 * Returns (vertex id, lower-link chi) for the critical vertices.
 */
std::vector<std::pair<int, long long>> critical_vertices(const DefFun& h);

// Lower-link chi of a single vertex (no tie checking).
long long lower_link_chi(const DefFun& h, int vertex);

/**
 * Poincare-duality parity on a closed n-manifold fixture: returns
 * (integrate(h, Ceil), (-1)^n * integrate(h, Floor)); the two agree.
 */
std::pair<Rat, Rat> parity_check(const DefFun& h);

}  // namespace eulerint

#endif
