#ifndef EULERINT_CF_HPP
#define EULERINT_CF_HPP

#include <array>
#include <vector>

#include "eulerint/complex.hpp"

namespace eulerint {

/// Constructible function: one integer per open cell (0 = outside support).
struct CFun {
    ComplexPtr K;
    std::vector<long long> values;  // indexed by cell id

    CFun() = default;
    CFun(ComplexPtr complex, std::vector<long long> vals);

    long long operator()(int cell) const { return values[cell]; }
};

CFun cfun_const(ComplexPtr K, long long v);

// Indicator of a set of open cells.
CFun cfun_indicator(ComplexPtr K, std::span<const int> cells);

// sum_c h(c) * (-1)^dim(c); OpenMP-parallel reduction.
long long integrate_cf(const CFun& h);
long long integrate_cf_serial(const CFun& h);

// The level-set formula sum_{s>=0} chi{h>s} - chi{h<-s}, computed literally
// as an independent cross-check of integrate_cf.
long long integrate_cf_levelset(const CFun& h);

/// Simplicial map: vertex map under which every cell's image spans a cell.
struct SimplicialMap {
    ComplexPtr source;
    ComplexPtr target;
    std::vector<int> vertex_map;  // source vertex id -> target vertex id

    // Target cell id that source cell c maps onto.
    int image_cell(int c) const;
};

SimplicialMap make_simplicial_map(ComplexPtr source, ComplexPtr target,
                                  std::vector<int> vertex_map);

// F_* h per open target cell: sum over source cells mapping onto it of
// h(cell) * (-1)^(dim drop); fibers of affine cell collapses are open cells.
CFun pushforward(const SimplicialMap& F, const CFun& h);

// Exact Euler convolution of constructible functions on 1-D complexes
// embedded in R^1. The result is normalized: adjacent cells with equal
// values merged, zero cells trimmed.
CFun convolve_1d(const CFun& f, const CFun& g);

// Evaluate a 1-D constructible function at a rational point (0 off support).
long long cf_eval_1d(const CFun& f, const Rat& t);

// Canonical form used for convolution outputs and equality tests.
CFun normalize_1d(const CFun& f);
bool cfun_equal_1d(const CFun& a, const CFun& b);

// Builds a 1-D CFun from sorted breakpoints: point_values[i] sits on the
// i-th vertex, interval_values[i] on the open interval after it.
CFun cfun_1d(const RatVec& points, const std::vector<long long>& point_values,
             const std::vector<long long>& interval_values);

/// Convex polygon, counterclockwise vertex list. A single vertex is a point.
struct ConvexPolygon {
    std::vector<std::array<Rat, 2>> verts;
};

// Minkowski sum via merged edge rotation; realizes 1_A * 1_B = 1_{A+B}.
ConvexPolygon minkowski_indicator(const ConvexPolygon& A, const ConvexPolygon& B);

}  // namespace eulerint

#endif
