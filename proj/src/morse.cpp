#include "eulerint/morse.hpp"

#include <algorithm>
#include <set>

namespace eulerint {

namespace {

// Vertex ids of the min- (or max-) face of a cell: vertices whose limit
// value attains the extremum. Always spans a stored face.
std::vector<int> extremal_face(const DefFun& h, int c, bool use_min) {
    const auto& verts = h.K->cell_verts(c);
    const Rat& target = use_min ? h.cell_min(c) : h.cell_max(c);
    std::vector<int> face;
    for (std::size_t i = 0; i < verts.size(); ++i)
        if (h.data[c][i] == target) face.push_back(verts[i]);
    return face;
}

IndexField accumulate_index(const DefFun& h, bool use_min) {
    require(h.continuous, Err::NotContinuous, "index fields require a continuous integrand");
    const SimplicialComplex& K = *h.K;
    std::vector<long long> out(K.cell_count(), 0);
    for (int c = 0; c < K.cell_count(); ++c) {
        const int w = K.dim(c) % 2 == 0 ? 1 : -1;
        std::vector<int> face = extremal_face(h, c, use_min);
        // Indicator of the closed extremal face: every nonempty subset.
        const int k = static_cast<int>(face.size());
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            std::vector<int> sub;
            for (int i = 0; i < k; ++i)
                if (mask & (1u << i)) sub.push_back(face[i]);
            out[K.cell_id(sub)] += w;
        }
    }
    return IndexField(h.K, std::move(out));
}

}  // namespace

IndexField coindex(const DefFun& h) { return accumulate_index(h, true); }
IndexField index_field(const DefFun& h) { return accumulate_index(h, false); }

IndexField coindex(const CFun& h) { return h; }
IndexField index_field(const CFun& h) { return h; }

Rat integrate_via_index(const DefFun& h, IndexKind which) {
    require(h.continuous, Err::NotContinuous, "Morse-sum evaluation requires continuity");
    // h is constant on each extremal face, so the weighted co-index of a
    // simplex integrates to (-1)^dim times that constant.
    Rat total(0);
    for (int c = 0; c < h.K->cell_count(); ++c) {
        const Rat& v = (which == IndexKind::Coindex) ? h.cell_min(c) : h.cell_max(c);
        if (h.K->dim(c) % 2 == 0)
            total += v;
        else
            total -= v;
    }
    return total;
}

long long lower_link_chi(const DefFun& h, int vertex) {
    const SimplicialComplex& K = *h.K;
    const Rat& hv = h.data[K.vertex_cell(vertex)][0];
    long long chi = 0;
    for (int s : K.star(K.vertex_cell(vertex))) {
        if (s == K.vertex_cell(vertex)) continue;
        // Opposite face of `vertex` in s lies in the link; it is lower when
        // every one of its vertices sits strictly below h(vertex).
        bool lower = true;
        for (int w : K.cell_verts(s)) {
            if (w == vertex) continue;
            if (!(h.data[K.vertex_cell(w)][0] < hv)) {
                lower = false;
                break;
            }
        }
        if (!lower) continue;
        const int link_dim = K.dim(s) - 1;
        chi += (link_dim % 2 == 0) ? 1 : -1;
    }
    return chi;
}

std::vector<std::pair<int, long long>> critical_vertices(const DefFun& h) {
    require(h.continuous, Err::NotContinuous, "critical vertices require continuity");
    const SimplicialComplex& K = *h.K;
    // Distinct values on every closed star.
    for (int v = 0; v < K.vertex_count(); ++v) {
        std::set<int> star_verts;
        for (int s : K.star(K.vertex_cell(v)))
            for (int w : K.cell_verts(s)) star_verts.insert(w);
        RatVec vals;
        for (int w : star_verts) vals.push_back(h.data[K.vertex_cell(w)][0]);
        std::sort(vals.begin(), vals.end());
        require(std::adjacent_find(vals.begin(), vals.end()) == vals.end(), Err::TieError,
                "tied vertex values in the closed star of vertex " + std::to_string(v));
    }
    std::vector<std::pair<int, long long>> out;
    for (int v = 0; v < K.vertex_count(); ++v) {
        long long chi = lower_link_chi(h, v);
        if (chi != 1) out.emplace_back(v, chi);
    }
    return out;
}

std::pair<Rat, Rat> parity_check(const DefFun& h) {
    const int n = h.K->top_dim();
    require(is_closed_manifold(*h.K, n), Err::NotManifoldFixture,
            "complex is not a closed 1- or 2-manifold");
    require(h.continuous, Err::NotContinuous, "parity check requires continuity");
    Rat ceil_side = integrate(h, Measure::Ceil);
    Rat floor_side = integrate(h, Measure::Floor);
    if (n % 2 != 0) floor_side = -floor_side;
    return {ceil_side, floor_side};
}

}  // namespace eulerint
