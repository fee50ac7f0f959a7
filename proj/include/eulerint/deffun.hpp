#ifndef EULERINT_DEFFUN_HPP
#define EULERINT_DEFFUN_HPP

#include <vector>

#include "eulerint/cf.hpp"
#include "eulerint/complex.hpp"

namespace eulerint {

/**
 * Cell-wise affine definable function in triangulated normal form.
 *
 * For each open cell the stored data are the limit values of the affine
 * extension of h restricted to that cell, taken at the vertices of the
 * cell's closure (aligned with the cell's sorted vertex list). A
 * constructible function embeds as the constant-per-cell case; a continuous
 * PL function is the case where limits agree across incident cells.
 */
struct DefFun {
    ComplexPtr K;
    std::vector<RatVec> data;  // per cell id; size dim+1 each
    bool continuous = false;

    DefFun() = default;
    DefFun(ComplexPtr complex, std::vector<RatVec> cell_data);

    // inf / sup of h over the open cell = min / max of the limit values.
    const Rat& cell_min(int c) const { return min_[c]; }
    const Rat& cell_max(int c) const { return max_[c]; }
    bool cell_constant(int c) const { return min_[c] == max_[c]; }

    Rat global_min() const;
    Rat global_max() const;

  private:
    RatVec min_, max_;
};

// Continuous PL function by affine interpolation of one value per vertex.
DefFun deffun_from_vertex_values(ComplexPtr K, RatVec vertex_values);

// Embeds a constructible function (constant limit data per cell).
DefFun deffun_from_cfun(const CFun& h);

// Per-cell constant values (a rational-valued "constructible" function).
DefFun deffun_cellwise_constant(ComplexPtr K, RatVec cell_values);

// Pointwise negation; realizes the floor/ceiling conjugation.
DefFun conjugate(const DefFun& h);

// Pointwise scaling by a rational; the integral is positively homogeneous.
DefFun scale(const DefFun& h, const Rat& lambda);

// Pointwise sum on a common complex.
DefFun deffun_add(const DefFun& f, const DefFun& g);

bool deffun_equal(const DefFun& f, const DefFun& g);

}  // namespace eulerint

#endif
