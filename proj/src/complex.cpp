#include "eulerint/complex.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "eulerint/linalg.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eulerint {

namespace {

std::string cell_key(std::span<const int> verts) {
    std::string key;
    key.reserve(verts.size() * 4);
    for (int v : verts) {
        key.append(reinterpret_cast<const char*>(&v), sizeof(int));
    }
    return key;
}

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
    // a, b sorted; true when a is a subset of b.
    std::size_t i = 0;
    for (int v : b) {
        if (i == a.size()) return true;
        if (a[i] == v) ++i;
    }
    return i == a.size();
}

struct BBox {
    RatVec lo, hi;
};

BBox cell_bbox(const SimplicialComplex& K, int c) {
    const auto& verts = K.cell_verts(c);
    BBox box{K.vertex(verts[0]), K.vertex(verts[0])};
    for (std::size_t i = 1; i < verts.size(); ++i) {
        const RatVec& p = K.vertex(verts[i]);
        for (std::size_t a = 0; a < p.size(); ++a) {
            if (p[a] < box.lo[a]) box.lo[a] = p[a];
            if (p[a] > box.hi[a]) box.hi[a] = p[a];
        }
    }
    return box;
}

// Pairwise open-interior disjointness for ambient dimension <= 3. Sweep on
// the x-extent prunes candidate pairs; each surviving pair is decided by the
// exact strict-feasibility test.
void check_interior_overlaps(const SimplicialComplex& K) {
    const int C = K.cell_count();
    std::vector<BBox> boxes;
    boxes.reserve(C);
    for (int c = 0; c < C; ++c) boxes.push_back(cell_bbox(K, c));

    std::vector<int> order(C);
    for (int c = 0; c < C; ++c) order[c] = c;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return boxes[a].lo[0] < boxes[b].lo[0]; });

    std::vector<std::pair<int, int>> candidates;
    const int d = K.ambient_dim();
    for (int i = 0; i < C; ++i) {
        const int a = order[i];
        for (int j = i + 1; j < C; ++j) {
            const int b = order[j];
            if (boxes[b].lo[0] > boxes[a].hi[0]) break;
            bool overlap = true;
            for (int axis = 1; axis < d && overlap; ++axis)
                overlap = !(boxes[b].lo[axis] > boxes[a].hi[axis] ||
                            boxes[a].lo[axis] > boxes[b].hi[axis]);
            if (!overlap) continue;
            const auto& va = K.cell_verts(a);
            const auto& vb = K.cell_verts(b);
            if (is_subset(va, vb) || is_subset(vb, va)) continue;
            candidates.emplace_back(a, b);
        }
    }

    int bad_a = -1, bad_b = -1;
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(candidates.size()); ++i) {
        if (bad_a >= 0) continue;
        auto [a, b] = candidates[i];
        if (relative_interiors_intersect(K.cell_coords(a), K.cell_coords(b))) {
#pragma omp critical
            {
                bad_a = a;
                bad_b = b;
            }
        }
    }
    if (bad_a >= 0)
        fail(Err::OverlappingInteriors,
             "open cells " + std::to_string(bad_a) + " and " + std::to_string(bad_b) +
                 " have intersecting interiors");
}

}  // namespace

SimplicialComplex SimplicialComplex::build(std::vector<RatVec> vertex_coords,
                                           const std::vector<std::vector<int>>& maximal_cells,
                                           const BuildOptions& opts) {
    SimplicialComplex K;
    K.vertex_coords_ = std::move(vertex_coords);
    const int nv = static_cast<int>(K.vertex_coords_.size());
    K.ambient_dim_ = nv == 0 ? 0 : static_cast<int>(K.vertex_coords_[0].size());
    for (const RatVec& p : K.vertex_coords_)
        require(static_cast<int>(p.size()) == K.ambient_dim_, Err::DegenerateSimplex,
                "inconsistent coordinate dimension");

    // Normalize input cells, check ids and basic well-formedness.
    std::set<std::vector<int>> closure;
    std::set<std::vector<int>> seen_maximal;
    for (const auto& raw : maximal_cells) {
        std::vector<int> verts = raw;
        std::sort(verts.begin(), verts.end());
        require(!verts.empty(), Err::DegenerateSimplex, "empty cell");
        require(verts.front() >= 0 && verts.back() < nv, Err::UnknownCell,
                "cell references missing vertex");
        require(std::adjacent_find(verts.begin(), verts.end()) == verts.end(),
                Err::DegenerateSimplex, "repeated vertex in cell");
        require(seen_maximal.insert(verts).second, Err::DuplicateCell,
                "maximal cell listed twice");
        // Enumerate all nonempty subsets for the face closure.
        const int k = static_cast<int>(verts.size());
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            std::vector<int> face;
            for (int i = 0; i < k; ++i)
                if (mask & (1u << i)) face.push_back(verts[i]);
            closure.insert(std::move(face));
        }
    }
    // Every vertex is a cell even when no maximal cell mentions it.
    for (int v = 0; v < nv; ++v) closure.insert({v});

    K.cells_.assign(closure.begin(), closure.end());
    std::sort(K.cells_.begin(), K.cells_.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    K.top_dim_ = 0;
    for (int c = 0; c < K.cell_count(); ++c) {
        K.index_.emplace(cell_key(K.cells_[c]), c);
        K.top_dim_ = std::max(K.top_dim_, K.dim(c));
    }
    K.vertex_cell_.resize(nv);
    for (int v = 0; v < nv; ++v) K.vertex_cell_[v] = K.cell_id(std::array<int, 1>{v});

    // Closed-star index: register every cell with each of its faces.
    K.star_.resize(K.cell_count());
    for (int c = 0; c < K.cell_count(); ++c) {
        const auto& verts = K.cells_[c];
        const int k = static_cast<int>(verts.size());
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            std::vector<int> face;
            for (int i = 0; i < k; ++i)
                if (mask & (1u << i)) face.push_back(verts[i]);
            K.star_[K.cell_id(face)].push_back(c);
        }
    }

    if (opts.check_degeneracy) {
        for (int c = 0; c < K.cell_count(); ++c) {
            if (K.dim(c) == 0) continue;
            require(affinely_independent(K.cell_coords(c)), Err::DegenerateSimplex,
                    "cell " + std::to_string(c) + " is geometrically degenerate");
        }
    }
    if (opts.check_overlap && K.ambient_dim_ <= 3) check_interior_overlaps(K);
    return K;
}

int SimplicialComplex::cell_id(std::span<const int> verts) const {
    std::vector<int> sorted(verts.begin(), verts.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    auto it = index_.find(cell_key(sorted));
    return it == index_.end() ? -1 : it->second;
}

std::vector<int> SimplicialComplex::proper_faces(int c) const {
    const auto& verts = cells_[c];
    const int k = static_cast<int>(verts.size());
    std::vector<int> out;
    for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
        std::vector<int> face;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) face.push_back(verts[i]);
        out.push_back(cell_id(face));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> SimplicialComplex::maximal_cells() const {
    std::vector<int> out;
    for (int c = 0; c < cell_count(); ++c)
        if (star_[c].size() == 1) out.push_back(c);
    return out;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    for (int c = 0; c < cell_count(); ++c) chi += (dim(c) % 2 == 0) ? 1 : -1;
    return chi;
}

std::vector<RatVec> SimplicialComplex::cell_coords(int c) const {
    std::vector<RatVec> out;
    out.reserve(cells_[c].size());
    for (int v : cells_[c]) out.push_back(vertex_coords_[v]);
    return out;
}

ComplexPtr build_complex(std::vector<RatVec> vertex_coords,
                         const std::vector<std::vector<int>>& maximal_cells) {
    return std::make_shared<SimplicialComplex>(SimplicialComplex::build(
        std::move(vertex_coords), maximal_cells, SimplicialComplex::BuildOptions{}));
}

namespace {

ComplexPtr build_trusted(std::vector<RatVec> vertex_coords,
                         const std::vector<std::vector<int>>& maximal_cells) {
    // Generators produce valid geometry by construction; skip the quadratic
    // overlap sweep but keep the cheap degeneracy check.
    SimplicialComplex::BuildOptions opts;
    opts.check_overlap = false;
    return std::make_shared<SimplicialComplex>(
        SimplicialComplex::build(std::move(vertex_coords), maximal_cells, opts));
}

}  // namespace

long long euler_characteristic(const SimplicialComplex& K, std::span<const int> cell_subset) {
    std::vector<int> ids(cell_subset.begin(), cell_subset.end());
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    long long chi = 0;
    for (int c : ids) {
        require(c >= 0 && c < K.cell_count(), Err::UnknownCell,
                "cell id " + std::to_string(c));
        chi += (K.dim(c) % 2 == 0) ? 1 : -1;
    }
    return chi;
}

ComplexPtr grid_complex(int nx, int ny, std::pair<Rat, Rat> x_range, std::pair<Rat, Rat> y_range) {
    require(nx >= 1 && ny >= 1, Err::EmptyRange, "grid needs nx, ny >= 1");
    require(x_range.first < x_range.second && y_range.first < y_range.second, Err::EmptyRange,
            "grid range is empty");
    const Rat dx = (x_range.second - x_range.first) / nx;
    const Rat dy = (y_range.second - y_range.first) / ny;
    std::vector<RatVec> coords;
    coords.reserve(static_cast<std::size_t>(nx + 1) * (ny + 1));
    for (int j = 0; j <= ny; ++j)
        for (int i = 0; i <= nx; ++i)
            coords.push_back({x_range.first + i * dx, y_range.first + j * dy});
    auto vid = [nx](int i, int j) { return j * (nx + 1) + i; };
    std::vector<std::vector<int>> tris;
    tris.reserve(static_cast<std::size_t>(2) * nx * ny);
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            // SW-NE diagonal in every square.
            tris.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)});
            tris.push_back({vid(i, j), vid(i, j + 1), vid(i + 1, j + 1)});
        }
    }
    return build_trusted(std::move(coords), tris);
}

ComplexPtr product_complex(const SimplicialComplex& K, const SimplicialComplex& L) {
    const int nl = L.vertex_count();
    std::vector<RatVec> coords;
    coords.reserve(static_cast<std::size_t>(K.vertex_count()) * nl);
    for (int u = 0; u < K.vertex_count(); ++u) {
        for (int v = 0; v < nl; ++v) {
            RatVec p = K.vertex(u);
            const RatVec& q = L.vertex(v);
            p.insert(p.end(), q.begin(), q.end());
            coords.push_back(std::move(p));
        }
    }
    auto pid = [nl](int u, int v) { return u * nl + v; };

    std::set<std::vector<int>> max_cells;
    for (int a : K.maximal_cells()) {
        const auto& su = K.cell_verts(a);
        const int p = static_cast<int>(su.size()) - 1;
        for (int b : L.maximal_cells()) {
            const auto& sv = L.cell_verts(b);
            const int q = static_cast<int>(sv.size()) - 1;
            // Monotone staircase paths from (0,0) to (p,q); each path is one
            // maximal simplex of the product triangulation.
            const int steps = p + q;
            for (unsigned mask = 0; mask < (1u << steps); ++mask) {
                if (static_cast<int>(std::popcount(mask)) != p) continue;
                std::vector<int> path;
                int i = 0, j = 0;
                path.push_back(pid(su[0], sv[0]));
                for (int s = 0; s < steps; ++s) {
                    if (mask & (1u << s)) ++i; else ++j;
                    path.push_back(pid(su[i], sv[j]));
                }
                max_cells.insert(std::move(path));
            }
        }
    }
    std::vector<std::vector<int>> cells(max_cells.begin(), max_cells.end());
    return build_trusted(std::move(coords), cells);
}

namespace {

// n distinct rational points on the unit circle, ordered by angle, via the
// tangent-half-angle parametrization t -> ((1-t^2), 2t) / (1+t^2).
std::vector<std::array<Rat, 2>> rational_circle_points(int n) {
    std::vector<std::array<Rat, 2>> pts;
    pts.reserve(n);
    for (int k = 0; k < n; ++k) {
        Rat t(2 * k - (n - 1), 1);
        Rat denom = 1 + t * t;
        pts.push_back({(1 - t * t) / denom, 2 * t / denom});
    }
    return pts;
}

}  // namespace

ComplexPtr circle(int n) {
    require(n >= 3, Err::TooFewVertices, "circle needs n >= 3");
    auto pts = rational_circle_points(n);
    std::vector<RatVec> coords;
    for (auto& p : pts) coords.push_back({p[0], p[1]});
    std::vector<std::vector<int>> edges;
    for (int k = 0; k < n; ++k) edges.push_back({k, (k + 1) % n});
    return build_trusted(std::move(coords), edges);
}

ComplexPtr sphere_boundary() {
    std::vector<RatVec> coords = {
        {Rat(0), Rat(0), Rat(0)},
        {Rat(1), Rat(0), Rat(0)},
        {Rat(0), Rat(1), Rat(0)},
        {Rat(0), Rat(0), Rat(1)},
    };
    std::vector<std::vector<int>> tris = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    return build_trusted(std::move(coords), tris);
}

ComplexPtr torus(int n, int m) {
    require(n >= 3 && m >= 3, Err::TooFewVertices, "torus needs n, m >= 3");
    const Rat R(2), r(1);
    auto major = rational_circle_points(n);
    auto minor = rational_circle_points(m);
    std::vector<RatVec> coords;
    coords.reserve(static_cast<std::size_t>(n) * m);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            Rat ring = R + r * minor[j][0];
            coords.push_back({ring * major[i][0], ring * major[i][1], r * minor[j][1]});
        }
    }
    auto vid = [m](int i, int j) { return i * m + j; };
    std::vector<std::vector<int>> tris;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            int i2 = (i + 1) % n, j2 = (j + 1) % m;
            tris.push_back({vid(i, j), vid(i2, j), vid(i2, j2)});
            tris.push_back({vid(i, j), vid(i, j2), vid(i2, j2)});
        }
    }
    return build_trusted(std::move(coords), tris);
}

ComplexPtr disjoint_union(const SimplicialComplex& K, const SimplicialComplex& L) {
    require(K.ambient_dim() == L.ambient_dim(), Err::ConfigError,
            "disjoint union needs equal ambient dimensions");
    // Shift the second copy along a fresh axis so interiors cannot collide.
    const int d = K.ambient_dim();
    std::vector<RatVec> coords;
    Rat shift(0);
    for (int v = 0; v < K.vertex_count(); ++v)
        for (const Rat& x : K.vertex(v)) shift = rat_max(shift, rat_abs(x) + 1);
    for (int v = 0; v < L.vertex_count(); ++v)
        for (const Rat& x : L.vertex(v)) shift = rat_max(shift, rat_abs(x) + 1);
    for (int v = 0; v < K.vertex_count(); ++v) coords.push_back(K.vertex(v));
    for (int v = 0; v < L.vertex_count(); ++v) {
        RatVec p = L.vertex(v);
        p[0] += 3 * shift;
        coords.push_back(std::move(p));
    }
    std::vector<std::vector<int>> cells;
    for (int c : K.maximal_cells()) cells.push_back(K.cell_verts(c));
    for (int c : L.maximal_cells()) {
        std::vector<int> verts = L.cell_verts(c);
        for (int& v : verts) v += K.vertex_count();
        cells.push_back(std::move(verts));
    }
    (void)d;
    return build_trusted(std::move(coords), cells);
}

ComplexPtr triangulate_convex_polygon(const std::vector<std::array<Rat, 2>>& ccw_verts) {
    const int n = static_cast<int>(ccw_verts.size());
    require(n >= 3, Err::TooFewVertices, "polygon needs >= 3 vertices");
    Rat area2(0);
    for (int i = 0; i < n; ++i) {
        const auto& a = ccw_verts[i];
        const auto& b = ccw_verts[(i + 1) % n];
        area2 += a[0] * b[1] - a[1] * b[0];
    }
    require(area2 > 0, Err::NotCounterclockwise, "polygon not counterclockwise");
    for (int i = 0; i < n; ++i) {
        const auto& a = ccw_verts[i];
        const auto& b = ccw_verts[(i + 1) % n];
        const auto& c = ccw_verts[(i + 2) % n];
        Rat cross = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]);
        require(cross > 0, Err::NotConvex, "polygon not strictly convex");
    }
    std::vector<RatVec> coords;
    for (const auto& p : ccw_verts) coords.push_back({p[0], p[1]});
    std::vector<std::vector<int>> tris;
    for (int i = 1; i + 1 < n; ++i) tris.push_back({0, i, i + 1});
    return build_trusted(std::move(coords), tris);
}

bool is_closed_manifold(const SimplicialComplex& K, int n) {
    if (n < 1 || n > 2 || K.cell_count() == 0 || K.top_dim() != n) return false;
    // Pure: every cell lies in the closure of an n-cell.
    for (int c = 0; c < K.cell_count(); ++c) {
        bool in_top = false;
        for (int s : K.star(c))
            if (K.dim(s) == n) { in_top = true; break; }
        if (!in_top) return false;
    }
    if (n == 1) {
        for (int v = 0; v < K.vertex_count(); ++v) {
            int edges = 0;
            for (int s : K.star(K.vertex_cell(v)))
                if (K.dim(s) == 1) ++edges;
            if (edges != 2) return false;
        }
        return true;
    }
    // n == 2: every edge in exactly two triangles, every vertex link a cycle.
    for (int c = 0; c < K.cell_count(); ++c) {
        if (K.dim(c) != 1) continue;
        int tris = 0;
        for (int s : K.star(c))
            if (K.dim(s) == 2) ++tris;
        if (tris != 2) return false;
    }
    for (int v = 0; v < K.vertex_count(); ++v) {
        // Link graph: opposite vertices/edges of cells in the star of v.
        std::map<int, std::vector<int>> adj;  // link vertex -> link neighbors
        int link_edges = 0;
        for (int s : K.star(K.vertex_cell(v))) {
            if (K.dim(s) != 2) continue;
            std::vector<int> others;
            for (int w : K.cell_verts(s))
                if (w != v) others.push_back(w);
            adj[others[0]].push_back(others[1]);
            adj[others[1]].push_back(others[0]);
            ++link_edges;
        }
        if (adj.empty() || link_edges != static_cast<int>(adj.size())) return false;
        for (const auto& [w, nbrs] : adj)
            if (nbrs.size() != 2) return false;
        // Single cycle: walk from an arbitrary start and count coverage.
        int start = adj.begin()->first;
        int prev = -1, cur = start, visited = 0;
        do {
            int next = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
            ++visited;
        } while (cur != start && visited <= link_edges);
        if (visited != link_edges) return false;
    }
    return true;
}

}  // namespace eulerint
