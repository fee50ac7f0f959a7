#include "eulerint/planar.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eulerint {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

void require_window_integrand(const PlanarWindow& W, const DefFun& h) {
    require(h.K.get() == W.K.get(), Err::UnknownCell, "integrand lives on wrong complex");
    require(h.continuous, Err::NotContinuous, "betti0 path requires a continuous integrand");
    for (int c : W.boundary_cells)
        require(h.cell_min(c) == 0 && h.cell_max(c) == 0, Err::SupportTouchesBoundary,
                "integrand must vanish on the window boundary");
}

// Nonempty intersection of the open cell with {h ? s}; constant cells are
// plain membership, nonconstant open cells never attain their extrema.
bool piece_nonempty(const DefFun& h, int c, const Rat& s, Excursion kind) {
    const bool constant = h.cell_constant(c);
    switch (kind) {
        case Excursion::GE: return constant ? h.cell_min(c) >= s : h.cell_max(c) > s;
        case Excursion::GT: return h.cell_max(c) > s;
        case Excursion::LT: return h.cell_min(c) < s;
        case Excursion::LE: return constant ? h.cell_min(c) <= s : h.cell_min(c) < s;
    }
    return false;
}

bool outside_occupied(const Rat& s, Excursion kind) {
    switch (kind) {
        case Excursion::GE: return s <= 0;
        case Excursion::GT: return s < 0;
        case Excursion::LT: return s > 0;
        case Excursion::LE: return s >= 0;
    }
    return false;
}

}  // namespace

PlanarWindow make_planar_window(ComplexPtr K) {
    require(K->ambient_dim() == 2, Err::NotManifoldFixture, "window must be embedded in R^2");
    require(K->top_dim() == 2, Err::NotManifoldFixture, "window must be 2-dimensional");
    std::set<int> boundary;
    for (int c = 0; c < K->cell_count(); ++c) {
        if (K->dim(c) != 1) continue;
        int tris = 0;
        for (int s : K->star(c))
            if (K->dim(s) == 2) ++tris;
        if (tris >= 2) continue;
        boundary.insert(c);
        for (int v : K->cell_verts(c)) boundary.insert(K->vertex_cell(v));
    }
    PlanarWindow W;
    W.K = std::move(K);
    W.boundary_cells.assign(boundary.begin(), boundary.end());
    return W;
}

namespace {

long long betti0_excursion_unchecked(const PlanarWindow& W, const DefFun& h, const Rat& s,
                                     Excursion kind) {
    const SimplicialComplex& K = *W.K;
    const int C = K.cell_count();
    std::vector<char> occ(C + 1, 0);  // last slot: virtual outside region
    for (int c = 0; c < C; ++c) occ[c] = piece_nonempty(h, c, s, kind);
    occ[C] = outside_occupied(s, kind);

    UnionFind uf(C + 1);
    for (int c = 0; c < C; ++c) {
        if (!occ[c]) continue;
        for (int f : K.proper_faces(c))
            if (occ[f]) uf.unite(c, f);
    }
    if (occ[C])
        for (int b : W.boundary_cells)
            if (occ[b]) uf.unite(C, b);

    std::set<int> roots;
    for (int c = 0; c <= C; ++c)
        if (occ[c]) roots.insert(uf.find(c));
    return static_cast<long long>(roots.size());
}

}  // namespace

long long betti0_excursion(const PlanarWindow& W, const DefFun& h, const Rat& s, Excursion kind) {
    require_window_integrand(W, h);
    return betti0_excursion_unchecked(W, h, s, kind);
}

Rat integrate_betti0(const PlanarWindow& W, const DefFun& h) {
    require_window_integrand(W, h);
    RatVec breaks{Rat(0)};
    for (int c = 0; c < W.K->cell_count(); ++c) {
        breaks.push_back(rat_abs(h.cell_min(c)));
        breaks.push_back(rat_abs(h.cell_max(c)));
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    const int n = static_cast<int>(breaks.size());
    std::vector<Rat> contrib(std::max(0, n - 1), Rat(0));
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n - 1; ++i) {
        Rat mid = (breaks[i] + breaks[i + 1]) / 2;
        long long integrand = betti0_excursion_unchecked(W, h, mid, Excursion::GE) +
                              betti0_excursion_unchecked(W, h, -mid, Excursion::GE) -
                              betti0_excursion_unchecked(W, h, mid, Excursion::LT) -
                              betti0_excursion_unchecked(W, h, -mid, Excursion::LT);
        contrib[i] = rat_ll(integrand) * (breaks[i + 1] - breaks[i]);
    }
    Rat total(0);
    for (const Rat& v : contrib) total += v;
    return total;
}

Rat eval_continuous_pl(const DefFun& h, const Rat& x, const Rat& y) {
    require(h.continuous, Err::NotContinuous, "pointwise evaluation requires continuity");
    const SimplicialComplex& K = *h.K;
    require(K.ambient_dim() == 2, Err::NotManifoldFixture, "planar evaluation only");
    for (int c = 0; c < K.cell_count(); ++c) {
        if (K.dim(c) != 2) continue;
        const auto& verts = K.cell_verts(c);
        const RatVec& a = K.vertex(verts[0]);
        const RatVec& b = K.vertex(verts[1]);
        const RatVec& d = K.vertex(verts[2]);
        // Barycentric membership in the closed triangle.
        Rat det = (b[0] - a[0]) * (d[1] - a[1]) - (b[1] - a[1]) * (d[0] - a[0]);
        Rat l1 = ((x - a[0]) * (d[1] - a[1]) - (y - a[1]) * (d[0] - a[0])) / det;
        Rat l2 = ((b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0])) / det;
        Rat l0 = 1 - l1 - l2;
        if (l0 >= 0 && l1 >= 0 && l2 >= 0)
            return l0 * h.data[c][0] + l1 * h.data[c][1] + l2 * h.data[c][2];
    }
    return Rat(0);
}

}  // namespace eulerint
