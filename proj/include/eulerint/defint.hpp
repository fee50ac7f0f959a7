#ifndef EULERINT_DEFINT_HPP
#define EULERINT_DEFINT_HPP

#include <utility>

#include "eulerint/deffun.hpp"

namespace eulerint {

// Lower, upper, and averaged Euler measures for real-valued integrands.
enum class Measure { Floor, Ceil, Avg };

enum class Excursion { GE, GT, LE, LT };

/**
 * Closed-form integral: sum over open cells of (-1)^dim times the inf
 * (Floor) or sup (Ceil) of the affine data; Avg is the mean of the two.
 */
Rat integrate(const DefFun& h, Measure m);
Rat integrate_serial(const DefFun& h, Measure m);

/**
 * Compactly supported Euler characteristic of an excursion set {h ? s}.
 * Per open k-cell with limit-value range [m, M]:
 *   {h>s}: (-1)^k if s < M      {h>=s}: (-1)^k if s <= m
 *   {h<s}: (-1)^k if s > m      {h<=s}: (-1)^k if s >= M
 * (constant cells reduce to plain membership under the same rules).
 */
long long chi_excursion(const DefFun& h, const Rat& s, Excursion kind);

/**
 * Exact s-integration of the level-set formula
 *   Floor: int_0^inf chi{h>=s} - chi{h<-s} ds
 *   Ceil:  int_0^inf chi{h> s} - chi{h<=-s} ds
 * The integrand is piecewise constant with breakpoints at per-cell extrema,
 * so each interval is evaluated at its midpoint. Agrees with integrate().
 */
Rat integrate_levelset(const DefFun& h, Measure m);

/**
 * Step-function approximation (1/n) * int floor(n h) dchi (Ceil: ceil(n h)),
 * evaluated exactly via the excursion table. Distinct computation path from
 * integrate(); the deviation is at most cell_count/n.
 */
Rat riemann_oracle(const DefFun& h, long long n, Measure m);
// Literal per-cell sum over integer levels with rational thresholds; slow
// reference used to validate the scaled kernel.
Rat riemann_oracle_serial(const DefFun& h, long long n, Measure m);

/**
 * (1/eps) * int_R s * chi{s <= h < s+eps} ds (Ceil: s < h <= s+eps),
 * integrated exactly over breakpoint intervals. Requires eps below the
 * minimal positive gap between distinct per-cell extrema (EpsilonTooLarge).
 * Deviation from integrate() is exactly (eps/2) * chi(X).
 */
Rat epsilon_formula(const DefFun& h, const Rat& eps, Measure m);

/**
 * The 1-D integrand s -> s * chi{h = s} on the real line, realized as a
 * DefFun on the complex with vertices at the distinct per-cell extrema.
 */
DefFun line_pushforward(const DefFun& h);

// Integrates line_pushforward(h) with the requested measure; equals
// integrate(h, m).
Rat pushforward_to_line(const DefFun& h, Measure m);

/**
 * Pushforward F_* h of an integrand constant on the fibers of F (validated;
 * NotFiberConstant otherwise): over each open target cell the value is
 * (fiber chi) * (common fiber value), as a DefFun on the target.
 */
DefFun pushforward_def(const SimplicialMap& F, const DefFun& h);

// Returns (integral of F_*h over Y, integral of h over X); the fiber-
// preserving Fubini theorem asserts equality.
std::pair<Rat, Rat> fubini_fiber_preserving(const SimplicialMap& F, const DefFun& h, Measure m);

}  // namespace eulerint

#endif
