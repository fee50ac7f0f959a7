#include "eulerint/cf.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eulerint {

CFun::CFun(ComplexPtr complex, std::vector<long long> vals)
    : K(std::move(complex)), values(std::move(vals)) {
    require(static_cast<int>(values.size()) == K->cell_count(), Err::UnknownCell,
            "value table size does not match cell count");
}

CFun cfun_const(ComplexPtr K, long long v) {
    std::vector<long long> vals(K->cell_count(), v);
    return CFun(std::move(K), std::move(vals));
}

CFun cfun_indicator(ComplexPtr K, std::span<const int> cells) {
    std::vector<long long> vals(K->cell_count(), 0);
    for (int c : cells) {
        require(c >= 0 && c < K->cell_count(), Err::UnknownCell, std::to_string(c));
        vals[c] = 1;
    }
    return CFun(std::move(K), std::move(vals));
}

long long integrate_cf_serial(const CFun& h) {
    long long total = 0;
    for (int c = 0; c < h.K->cell_count(); ++c)
        total += (h.K->dim(c) % 2 == 0) ? h.values[c] : -h.values[c];
    return total;
}

long long integrate_cf(const CFun& h) {
    const int C = h.K->cell_count();
    long long total = 0;
#pragma omp parallel for schedule(static) reduction(+ : total)
    for (int c = 0; c < C; ++c)
        total += (h.K->dim(c) % 2 == 0) ? h.values[c] : -h.values[c];
    return total;
}

long long integrate_cf_levelset(const CFun& h) {
    long long bound = 0;
    for (long long v : h.values) bound = std::max(bound, std::llabs(v));
    long long total = 0;
    for (long long s = 0; s < bound; ++s) {
        long long chi_above = 0, chi_below = 0;
        for (int c = 0; c < h.K->cell_count(); ++c) {
            const int sign = (h.K->dim(c) % 2 == 0) ? 1 : -1;
            if (h.values[c] > s) chi_above += sign;
            if (h.values[c] < -s) chi_below += sign;
        }
        total += chi_above - chi_below;
    }
    return total;
}

int SimplicialMap::image_cell(int c) const {
    std::vector<int> img;
    for (int v : source->cell_verts(c)) img.push_back(vertex_map[v]);
    return target->cell_id(img);
}

SimplicialMap make_simplicial_map(ComplexPtr source, ComplexPtr target,
                                  std::vector<int> vertex_map) {
    require(static_cast<int>(vertex_map.size()) == source->vertex_count(), Err::InvalidMap,
            "vertex map size mismatch");
    for (int w : vertex_map)
        require(w >= 0 && w < target->vertex_count(), Err::InvalidMap,
                "vertex image out of range");
    SimplicialMap F{std::move(source), std::move(target), std::move(vertex_map)};
    for (int c = 0; c < F.source->cell_count(); ++c)
        require(F.image_cell(c) >= 0, Err::InvalidMap,
                "cell " + std::to_string(c) + " does not map onto a target cell");
    return F;
}

CFun pushforward(const SimplicialMap& F, const CFun& h) {
    require(h.K.get() == F.source.get(), Err::InvalidMap, "integrand lives on wrong complex");
    std::vector<long long> out(F.target->cell_count(), 0);
    for (int c = 0; c < F.source->cell_count(); ++c) {
        if (h.values[c] == 0) continue;
        const int tau = F.image_cell(c);
        const int drop = F.source->dim(c) - F.target->dim(tau);
        out[tau] += (drop % 2 == 0) ? h.values[c] : -h.values[c];
    }
    return CFun(F.target, std::move(out));
}

namespace {

void require_1d(const CFun& f) {
    require(f.K->ambient_dim() == 1 && f.K->top_dim() <= 1, Err::NotOneDimensional,
            "operand is not a 1-dimensional complex in R^1");
}

// Sorted breakpoints (vertex coordinates) of a 1-D complex.
RatVec breakpoints_1d(const SimplicialComplex& K) {
    RatVec pts;
    for (int v = 0; v < K.vertex_count(); ++v) pts.push_back(K.vertex(v)[0]);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

}  // namespace

long long cf_eval_1d(const CFun& f, const Rat& t) {
    const SimplicialComplex& K = *f.K;
    // Exact membership: a vertex hit wins, otherwise look for a covering edge.
    for (int c = 0; c < K.cell_count(); ++c) {
        if (K.dim(c) == 0) {
            if (K.vertex(K.cell_verts(c)[0])[0] == t) return f.values[c];
        } else {
            const Rat& a = K.vertex(K.cell_verts(c)[0])[0];
            const Rat& b = K.vertex(K.cell_verts(c)[1])[0];
            if (rat_min(a, b) < t && t < rat_max(a, b)) return f.values[c];
        }
    }
    return 0;
}

CFun cfun_1d(const RatVec& points, const std::vector<long long>& point_values,
             const std::vector<long long>& interval_values) {
    const int n = static_cast<int>(points.size());
    require(n >= 1, Err::EmptyRange, "need at least one breakpoint");
    require(static_cast<int>(point_values.size()) == n &&
                static_cast<int>(interval_values.size()) == n - 1,
            Err::EmptyRange, "value list sizes");
    std::vector<RatVec> coords;
    for (const Rat& p : points) coords.push_back({p});
    std::vector<std::vector<int>> cells;
    for (int i = 0; i + 1 < n; ++i) cells.push_back({i, i + 1});
    if (cells.empty()) cells.push_back({0});
    auto K = build_complex(std::move(coords), cells);
    std::vector<long long> vals(K->cell_count(), 0);
    for (int i = 0; i < n; ++i) vals[K->vertex_cell(i)] = point_values[i];
    for (int i = 0; i + 1 < n; ++i) {
        std::array<int, 2> e{i, i + 1};
        vals[K->cell_id(e)] = interval_values[i];
    }
    return CFun(std::move(K), std::move(vals));
}

CFun normalize_1d(const CFun& f) {
    require_1d(f);
    RatVec pts = breakpoints_1d(*f.K);
    const int n = static_cast<int>(pts.size());
    std::vector<long long> pv(n, 0), iv(std::max(0, n - 1), 0);
    for (int i = 0; i < n; ++i) pv[i] = cf_eval_1d(f, pts[i]);
    for (int i = 0; i + 1 < n; ++i) iv[i] = cf_eval_1d(f, (pts[i] + pts[i + 1]) / 2);

    // Remove interior breakpoints whose removal merges two equal cells, then
    // trim zero cells from the support.
    std::vector<char> keep(n, 1);
    for (int i = 1; i + 1 < n; ++i)
        if (pv[i] == iv[i - 1] && pv[i] == iv[i]) keep[i] = 0;
    RatVec mpts;
    std::vector<long long> mpv, miv;
    for (int i = 0; i < n; ++i) {
        if (!keep[i]) continue;
        mpts.push_back(pts[i]);
        mpv.push_back(pv[i]);
    }
    // Interval values between surviving breakpoints (constant across any
    // merged run, so a midpoint sample is exact).
    for (std::size_t k = 0; k + 1 < mpts.size(); ++k)
        miv.push_back(cf_eval_1d(f, (mpts[k] + mpts[k + 1]) / 2));

    // Drop zero intervals, then orphan zero vertices.
    std::vector<RatVec> coords;
    for (const Rat& p : mpts) coords.push_back({p});
    std::vector<char> vertex_used(mpts.size(), 0);
    std::vector<std::vector<int>> cells;
    for (std::size_t k = 0; k + 1 < mpts.size(); ++k) {
        if (miv[k] == 0) continue;
        cells.push_back({static_cast<int>(k), static_cast<int>(k + 1)});
        vertex_used[k] = vertex_used[k + 1] = 1;
    }
    std::vector<int> remap(mpts.size(), -1);
    std::vector<RatVec> final_coords;
    std::vector<long long> final_pv;
    for (std::size_t k = 0; k < mpts.size(); ++k) {
        if (!vertex_used[k] && mpv[k] == 0) continue;
        remap[k] = static_cast<int>(final_coords.size());
        final_coords.push_back(coords[k]);
        final_pv.push_back(mpv[k]);
    }
    for (auto& cell : cells)
        for (int& v : cell) v = remap[v];
    if (final_coords.empty()) {
        // Identically zero: canonical empty support is a single origin vertex
        // with value 0.
        final_coords.push_back({Rat(0)});
        final_pv.push_back(0);
    }
    auto K = build_complex(std::move(final_coords), cells);
    std::vector<long long> vals(K->cell_count(), 0);
    for (std::size_t k = 0; k < final_pv.size(); ++k)
        vals[K->vertex_cell(static_cast<int>(k))] = final_pv[k];
    for (std::size_t k = 0; k + 1 < mpts.size(); ++k) {
        if (miv[k] == 0) continue;
        std::array<int, 2> e{remap[k], remap[k + 1]};
        vals[K->cell_id(e)] = miv[k];
    }
    return CFun(std::move(K), std::move(vals));
}

bool cfun_equal_1d(const CFun& a, const CFun& b) {
    CFun na = normalize_1d(a), nb = normalize_1d(b);
    if (na.K->vertex_count() != nb.K->vertex_count() ||
        na.K->cell_count() != nb.K->cell_count())
        return false;
    for (int v = 0; v < na.K->vertex_count(); ++v)
        if (na.K->vertex(v)[0] != nb.K->vertex(v)[0]) return false;
    for (int c = 0; c < na.K->cell_count(); ++c) {
        if (na.K->cell_verts(c) != nb.K->cell_verts(c)) return false;
        if (na.values[c] != nb.values[c]) return false;
    }
    return true;
}

CFun convolve_1d(const CFun& f, const CFun& g) {
    require_1d(f);
    require_1d(g);
    const RatVec fp = breakpoints_1d(*f.K);
    const RatVec gp = breakpoints_1d(*g.K);

    // Output breakpoints: all pairwise sums.
    RatVec out_pts;
    out_pts.reserve(fp.size() * gp.size());
    for (const Rat& a : fp)
        for (const Rat& b : gp) out_pts.push_back(a + b);
    std::sort(out_pts.begin(), out_pts.end());
    out_pts.erase(std::unique(out_pts.begin(), out_pts.end()), out_pts.end());

    // (f*g)(x) = integral over t of f(t) g(x-t) dchi: the integrand is
    // piecewise constant with breakpoints at fp and x - gp.
    auto conv_at = [&](const Rat& x) -> long long {
        RatVec tpts = fp;
        for (const Rat& b : gp) tpts.push_back(x - b);
        std::sort(tpts.begin(), tpts.end());
        tpts.erase(std::unique(tpts.begin(), tpts.end()), tpts.end());
        long long total = 0;
        for (std::size_t i = 0; i < tpts.size(); ++i) {
            total += cf_eval_1d(f, tpts[i]) * cf_eval_1d(g, x - tpts[i]);
            if (i + 1 < tpts.size()) {
                Rat mid = (tpts[i] + tpts[i + 1]) / 2;
                total -= cf_eval_1d(f, mid) * cf_eval_1d(g, x - mid);
            }
        }
        return total;
    };

    const int n = static_cast<int>(out_pts.size());
    std::vector<long long> pv(n, 0), iv(std::max(0, n - 1), 0);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        pv[i] = conv_at(out_pts[i]);
        if (i + 1 < n) iv[i] = conv_at((out_pts[i] + out_pts[i + 1]) / 2);
    }
    return normalize_1d(cfun_1d(out_pts, pv, iv));
}

namespace {

Rat cross2(const std::array<Rat, 2>& u, const std::array<Rat, 2>& v) {
    return u[0] * v[1] - u[1] * v[0];
}

void validate_ccw_convex(const ConvexPolygon& P) {
    const int n = static_cast<int>(P.verts.size());
    if (n == 1) return;
    require(n >= 3, Err::NotConvex, "polygon needs 1 or >= 3 vertices");
    Rat area2(0);
    for (int i = 0; i < n; ++i) {
        const auto& a = P.verts[i];
        const auto& b = P.verts[(i + 1) % n];
        area2 += cross2(a, b);
    }
    require(area2 != 0, Err::NotConvex, "degenerate polygon");
    require(area2 > 0, Err::NotCounterclockwise, "clockwise vertex order");
    for (int i = 0; i < n; ++i) {
        const auto& a = P.verts[i];
        const auto& b = P.verts[(i + 1) % n];
        const auto& c = P.verts[(i + 2) % n];
        std::array<Rat, 2> e1{b[0] - a[0], b[1] - a[1]};
        std::array<Rat, 2> e2{c[0] - b[0], c[1] - b[1]};
        require(cross2(e1, e2) > 0, Err::NotConvex, "not strictly convex");
    }
}

// Index of the bottommost (then leftmost) vertex.
int anchor_index(const ConvexPolygon& P) {
    int best = 0;
    for (int i = 1; i < static_cast<int>(P.verts.size()); ++i) {
        const auto& p = P.verts[i];
        const auto& q = P.verts[best];
        if (p[1] < q[1] || (p[1] == q[1] && p[0] < q[0])) best = i;
    }
    return best;
}

// CCW angle comparison for edge vectors of convex polygons started at the
// bottommost vertex (angles in [0, 2pi)).
bool angle_less(const std::array<Rat, 2>& u, const std::array<Rat, 2>& v) {
    auto half = [](const std::array<Rat, 2>& w) {
        return (w[1] > 0 || (w[1] == 0 && w[0] > 0)) ? 0 : 1;
    };
    int hu = half(u), hv = half(v);
    if (hu != hv) return hu < hv;
    return cross2(u, v) > 0;
}

}  // namespace

ConvexPolygon minkowski_indicator(const ConvexPolygon& A, const ConvexPolygon& B) {
    require(!A.verts.empty() && !B.verts.empty(), Err::NotConvex, "empty polygon");
    validate_ccw_convex(A);
    validate_ccw_convex(B);
    auto edges_of = [](const ConvexPolygon& P) {
        std::vector<std::array<Rat, 2>> edges;
        const int n = static_cast<int>(P.verts.size());
        const int start = anchor_index(P);
        for (int i = 0; i < n && n > 1; ++i) {
            const auto& a = P.verts[(start + i) % n];
            const auto& b = P.verts[(start + i + 1) % n];
            edges.push_back({b[0] - a[0], b[1] - a[1]});
        }
        return edges;
    };
    auto ea = edges_of(A), eb = edges_of(B);

    // Merge the two angularly sorted edge sequences; parallel edges combine.
    std::vector<std::array<Rat, 2>> merged;
    std::size_t i = 0, j = 0;
    while (i < ea.size() || j < eb.size()) {
        std::array<Rat, 2> e;
        if (j == eb.size() || (i < ea.size() && angle_less(ea[i], eb[j]))) {
            e = ea[i++];
        } else if (i == ea.size() || angle_less(eb[j], ea[i])) {
            e = eb[j++];
        } else {
            e = {ea[i][0] + eb[j][0], ea[i][1] + eb[j][1]};
            ++i;
            ++j;
        }
        if (!merged.empty() && cross2(merged.back(), e) == 0 &&
            (merged.back()[0] * e[0] + merged.back()[1] * e[1]) >= 0) {
            merged.back()[0] += e[0];
            merged.back()[1] += e[1];
        } else {
            merged.push_back(e);
        }
    }

    const auto& a0 = A.verts[anchor_index(A)];
    const auto& b0 = B.verts[anchor_index(B)];
    ConvexPolygon out;
    std::array<Rat, 2> cur{a0[0] + b0[0], a0[1] + b0[1]};
    out.verts.push_back(cur);
    for (std::size_t k = 0; k + 1 < merged.size(); ++k) {
        cur = {cur[0] + merged[k][0], cur[1] + merged[k][1]};
        out.verts.push_back(cur);
    }
    return out;
}

}  // namespace eulerint
