#include "eulerint/sensor.hpp"

#include <algorithm>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eulerint {

namespace {

std::vector<std::vector<int>> edge_neighborhoods(const SimplicialComplex& K) {
    std::vector<std::vector<int>> nbrs(K.vertex_count());
    for (int v = 0; v < K.vertex_count(); ++v) nbrs[v].push_back(v);
    for (int c = 0; c < K.cell_count(); ++c) {
        if (K.dim(c) != 1) continue;
        const auto& e = K.cell_verts(c);
        nbrs[e[0]].push_back(e[1]);
        nbrs[e[1]].push_back(e[0]);
    }
    for (auto& list : nbrs) std::sort(list.begin(), list.end());
    return nbrs;
}

void mark_holes(SensorNetwork& net, const std::vector<Disk>& holes) {
    net.hole.assign(net.node_count(), 0);
    for (int v = 0; v < net.node_count(); ++v) {
        const RatVec& p = net.K->vertex(v);
        for (const Disk& d : holes) {
            Rat dx = p[0] - d.cx, dy = p[1] - d.cy;
            if (dx * dx + dy * dy <= d.radius * d.radius) {
                net.hole[v] = 1;
                break;
            }
        }
    }
}

}  // namespace

SensorNetwork make_network(int nx, int ny, std::pair<Rat, Rat> x_range,
                           std::pair<Rat, Rat> y_range, const std::vector<Disk>& holes) {
    SensorNetwork net;
    net.K = grid_complex(nx, ny, x_range, y_range);
    net.neighborhoods = edge_neighborhoods(*net.K);
    net.x0 = x_range.first;
    net.x1 = x_range.second;
    net.y0 = y_range.first;
    net.y1 = y_range.second;
    mark_holes(net, holes);
    return net;
}

SensorNetwork make_network_from_complex(ComplexPtr K, const std::vector<Disk>& holes) {
    require(K->ambient_dim() == 2, Err::ConfigError, "network must be planar");
    SensorNetwork net;
    net.K = std::move(K);
    net.neighborhoods = edge_neighborhoods(*net.K);
    net.x0 = net.x1 = net.K->vertex(0)[0];
    net.y0 = net.y1 = net.K->vertex(0)[1];
    for (int v = 0; v < net.node_count(); ++v) {
        const RatVec& p = net.K->vertex(v);
        net.x0 = rat_min(net.x0, p[0]);
        net.x1 = rat_max(net.x1, p[0]);
        net.y0 = rat_min(net.y0, p[1]);
        net.y1 = rat_max(net.y1, p[1]);
    }
    mark_holes(net, holes);
    return net;
}

bool support_contains(const Support& s, const Rat& x, const Rat& y) {
    if (const Disk* d = std::get_if<Disk>(&s)) {
        Rat dx = x - d->cx, dy = y - d->cy;
        return dx * dx + dy * dy <= d->radius * d->radius;
    }
    const RectSupport& r = std::get<RectSupport>(s);
    return r.x0 <= x && x <= r.x1 && r.y0 <= y && y <= r.y1;
}

std::vector<long long> synthesize_counts(const TargetScene& scene, const SensorNetwork& net) {
    for (const Support& s : scene.supports) {
        Rat bx0, bx1, by0, by1;
        if (const Disk* d = std::get_if<Disk>(&s)) {
            bx0 = d->cx - d->radius;
            bx1 = d->cx + d->radius;
            by0 = d->cy - d->radius;
            by1 = d->cy + d->radius;
        } else {
            const RectSupport& r = std::get<RectSupport>(s);
            bx0 = r.x0;
            bx1 = r.x1;
            by0 = r.y0;
            by1 = r.y1;
        }
        require(bx0 > net.x0 && bx1 < net.x1 && by0 > net.y0 && by1 < net.y1,
                Err::SupportOutsideWindow, "support reaches the window boundary");
    }
    std::vector<long long> counts(net.node_count(), 0);
    for (int v = 0; v < net.node_count(); ++v) {
        const RatVec& p = net.K->vertex(v);
        for (const Support& s : scene.supports)
            if (support_contains(s, p[0], p[1])) ++counts[v];
    }
    return counts;
}

CorruptResult corrupt(const std::vector<long long>& raw, const Rat& p, std::uint64_t seed) {
    require(p >= 0 && p <= 1, Err::ConfigError, "corruption fraction must be in [0,1]");
    const int n = static_cast<int>(raw.size());
    CorruptResult out;
    out.values = raw;
    out.confidence.assign(n, Rat(1));

    const long long hits = rat_floor_ll(p * n);
    std::mt19937_64 rng(seed);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    // Fisher-Yates prefix of size `hits`.
    for (int i = 0; i < hits; ++i) {
        std::uniform_int_distribution<int> pick(i, n - 1);
        std::swap(order[i], order[pick(rng)]);
        const int node = order[i];
        std::uniform_int_distribution<int> signbit(0, 1);
        out.values[node] += signbit(rng) ? 1 : -1;
        std::uniform_int_distribution<int> conf(0, 512);
        out.confidence[node] = rat_frac(conf(rng), 1024);
    }
    return out;
}

RatVec smooth(const RatVec& values, const RatVec& confidence, const SensorNetwork& net) {
    const int n = net.node_count();
    require(static_cast<int>(values.size()) == n && static_cast<int>(confidence.size()) == n,
            Err::ConfigError, "value/confidence sizes must match the node count");
    RatVec out(n);
    int bad_node = -1;
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        Rat num(0), den(0);
        for (int y : net.neighborhoods[i]) {
            num += confidence[y] * values[y];
            den += confidence[y];
        }
        if (den == 0) {
#pragma omp critical
            bad_node = i;
            continue;
        }
        out[i] = num / den;
    }
    if (bad_node >= 0)
        fail(Err::ZeroConfidenceNeighborhood,
             "node " + std::to_string(bad_node) + " has no confident neighbors");
    return out;
}

Rat estimate_count(const RatVec& node_values, const SensorNetwork& net, Measure m,
                   EstimatorMode mode, long long divisor) {
    require(divisor != 0, Err::ConfigError, "divisor must be nonzero");
    DefFun field;
    switch (mode) {
        case EstimatorMode::Continuous:
            field = deffun_from_vertex_values(net.K, node_values);
            break;
        case EstimatorMode::Usc:
        case EstimatorMode::Lsc: {
            RatVec cellvals(net.K->cell_count());
            for (int c = 0; c < net.K->cell_count(); ++c) {
                const auto& verts = net.K->cell_verts(c);
                Rat v = node_values[verts[0]];
                for (int w : verts)
                    v = mode == EstimatorMode::Usc ? rat_max(v, node_values[w])
                                                   : rat_min(v, node_values[w]);
                cellvals[c] = v;
            }
            field = deffun_cellwise_constant(net.K, std::move(cellvals));
            break;
        }
    }
    return integrate(field, m) / rat_ll(divisor);
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
    SensorNetwork net = make_network(config.nx, config.ny, config.x_range, config.y_range,
                                     config.holes);
    const std::vector<long long> truth_counts = synthesize_counts(config.scene, net);
    const long long truth = static_cast<long long>(config.scene.supports.size());

    ExperimentReport report;
    report.rows.resize(config.seeds.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(config.seeds.size()); ++i) {
        try {
            const std::uint64_t seed = config.seeds[i];
            CorruptResult cr = corrupt(truth_counts, config.p, seed);
            // Dropped nodes: no reading, no confidence.
            for (int v = 0; v < net.node_count(); ++v) {
                if (net.hole[v]) {
                    cr.values[v] = 0;
                    cr.confidence[v] = 0;
                }
            }
            RatVec raw_field(net.node_count());
            for (int v = 0; v < net.node_count(); ++v) raw_field[v] = rat_ll(cr.values[v]);
            RatVec smoothed = smooth(raw_field, cr.confidence, net);
            report.rows[i] = SeedReport{
                seed, truth,
                estimate_count(raw_field, net, config.measure, config.mode, config.divisor),
                estimate_count(smoothed, net, config.measure, config.mode, config.divisor)};
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    RatVec raw_err, smooth_err, raw_est, smooth_est;
    for (const SeedReport& r : report.rows) {
        raw_err.push_back(rat_abs(r.raw_estimate - rat_ll(truth)));
        smooth_err.push_back(rat_abs(r.smoothed_estimate - rat_ll(truth)));
        raw_est.push_back(r.raw_estimate);
        smooth_est.push_back(r.smoothed_estimate);
    }
    report.median_raw_abs_error = rat_median(raw_err);
    report.median_smoothed_abs_error = rat_median(smooth_err);
    report.median_raw_estimate = rat_median(raw_est);
    report.median_smoothed_estimate = rat_median(smooth_est);
    return report;
}

Rat rat_median(RatVec values) {
    require(!values.empty(), Err::ConfigError, "median of empty list");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return (values[n / 2 - 1] + values[n / 2]) / 2;
}

}  // namespace eulerint
