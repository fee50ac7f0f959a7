#ifndef EULERINT_PLANAR_HPP
#define EULERINT_PLANAR_HPP

#include <optional>

#include "eulerint/defint.hpp"

namespace eulerint {

/**
 * Planar integration window: a complex embedded in R^2 together with its
 * topological boundary and one virtual outside region (value 0) standing in
 * for the unbounded component of the plane.
 */
struct PlanarWindow {
    ComplexPtr K;
    std::vector<int> boundary_cells;  // cells in the closure of rim edges
};

PlanarWindow make_planar_window(ComplexPtr K);

/**
 * Number of connected components of the excursion set {h ? s}, computed by
 * union-find on the graph of open cells with nonempty pieces; incident cells
 * join when both pieces are nonempty, and the outside region joins to
 * occupied boundary cells. Requires h continuous, zero on the boundary.
 */
long long betti0_excursion(const PlanarWindow& W, const DefFun& h, const Rat& s, Excursion kind);

/**
 * Exact s-integration of
 *   int_0^inf b0{h>=s} + b0{h>=-s} - b0{h<s} - b0{h<-s} ds,
 * over breakpoint intervals; equals integrate(h, Floor) for continuous
 * compactly supported planar integrands.
 */
Rat integrate_betti0(const PlanarWindow& W, const DefFun& h);

// Value of a continuous PL function at a point of the plane: locates a
// closed triangle containing the point and evaluates its affine extension
// (0 outside the window). Exact; used by renderers and test oracles.
Rat eval_continuous_pl(const DefFun& h, const Rat& x, const Rat& y);

}  // namespace eulerint

#endif
