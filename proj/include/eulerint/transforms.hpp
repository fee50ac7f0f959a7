#ifndef EULERINT_TRANSFORMS_HPP
#define EULERINT_TRANSFORMS_HPP

#include <vector>

#include "eulerint/defint.hpp"

namespace eulerint {

/**
 * Duality operator: on each open cell tau the output data is the sum over
 * all cells sigma with tau in the closure of sigma of (-1)^dim(sigma) times
 * the affine extension of h restricted from sigma to tau. An involution on
 * cell-wise affine functions.
 */
DefFun dual(const DefFun& h);

// dual(dual(h)) == h, checked by exact cell-wise data comparison.
bool dual_involution_check(const DefFun& h);

// Shrinking-sphere transform, realized as identity minus duality.
DefFun link(const DefFun& h);

enum class KernelMode { Floor, Ceil, Avg, Width };

// Integrand h(x) * <x, xi> as a cell-wise affine function (h constructible
// keeps the product affine).
DefFun inner_product_integrand(const CFun& h, const RatVec& xi);

/**
 * Inner-product kernel transform of a constructible integrand: for each
 * direction xi integrates h(x) * <x, xi> with the requested measure;
 * Width = Floor result - Ceil result.
 */
std::vector<Rat> kernel_transform(const CFun& h, const std::vector<RatVec>& xis, KernelMode mode);

// Verifies the averaged-measure linearity of the inner-product transform on
// the combination a*f + b*g at the sampled directions.
bool avg_linearity_check(const CFun& f, const CFun& g, long long a, long long b,
                         const std::vector<RatVec>& xis);

}  // namespace eulerint

#endif
