#ifndef EULERINT_SENSOR_HPP
#define EULERINT_SENSOR_HPP

#include <cstdint>
#include <variant>

#include "eulerint/defint.hpp"

namespace eulerint {

/// Compact convex target support: disk or axis-aligned rectangle (chi = 1).
struct Disk {
    Rat cx, cy, radius;
};
struct RectSupport {
    Rat x0, y0, x1, y1;
};
using Support = std::variant<Disk, RectSupport>;

struct TargetScene {
    std::vector<Support> supports;
};

/**
 * Sensor nodes on the vertex set of a planar triangulation. Neighborhoods
 * N(i) are triangulation-edge adjacency plus the node itself; dropout holes
 * are modeled by forcing confidence 0.
 */
struct SensorNetwork {
    ComplexPtr K;  // nodes = vertices
    std::vector<std::vector<int>> neighborhoods;
    std::vector<char> hole;
    Rat x0, x1, y0, y1;  // window bounds

    int node_count() const { return K->vertex_count(); }
};

SensorNetwork make_network(int nx, int ny, std::pair<Rat, Rat> x_range,
                           std::pair<Rat, Rat> y_range, const std::vector<Disk>& holes = {});

// Network over an arbitrary planar triangulation (window = coordinate bbox).
SensorNetwork make_network_from_complex(ComplexPtr K, const std::vector<Disk>& holes = {});

bool support_contains(const Support& s, const Rat& x, const Rat& y);

// h(x_i) = number of supports containing node i (closed membership).
// Every support must sit strictly inside the window (SupportOutsideWindow).
std::vector<long long> synthesize_counts(const TargetScene& scene, const SensorNetwork& net);

struct CorruptResult {
    std::vector<long long> values;
    std::vector<Rat> confidence;  // corrupted nodes uniform in [0,1/2], clean 1
};

// Adds +-1 to a uniformly chosen fraction p of the nodes (no clamping) and
// assigns confidences; deterministic under the seed.
CorruptResult corrupt(const std::vector<long long>& raw, const Rat& p, std::uint64_t seed);

// Confidence-weighted neighborhood average, exact rationals.
RatVec smooth(const RatVec& values, const RatVec& confidence, const SensorNetwork& net);

enum class EstimatorMode { Continuous, Usc, Lsc };

/**
 * Euler-integral target-count estimate: extends the node values over the
 * triangulation (continuous PL interpolation by default; per-cell max / min
 * for the semicontinuous variants) and integrates with the requested
 * measure, divided by the per-target chi (N, default 1).
 */
Rat estimate_count(const RatVec& node_values, const SensorNetwork& net, Measure m,
                   EstimatorMode mode = EstimatorMode::Continuous, long long divisor = 1);

struct SeedReport {
    std::uint64_t seed;
    long long truth;
    Rat raw_estimate;
    Rat smoothed_estimate;
};

struct ExperimentConfig {
    TargetScene scene;
    int nx = 30, ny = 30;
    std::pair<Rat, Rat> x_range{Rat(0), Rat(30)};
    std::pair<Rat, Rat> y_range{Rat(0), Rat(30)};
    Rat p = Rat(1, 3);
    std::vector<Disk> holes;
    std::vector<std::uint64_t> seeds;
    Measure measure = Measure::Floor;
    EstimatorMode mode = EstimatorMode::Continuous;
    long long divisor = 1;
};

struct ExperimentReport {
    std::vector<SeedReport> rows;
    Rat median_raw_abs_error;
    Rat median_smoothed_abs_error;
    Rat median_raw_estimate;
    Rat median_smoothed_estimate;
};

// Full per-seed pipeline: synthesize, corrupt, hole knockout, smooth,
// estimate; aggregates exact medians. Seeds run independently.
ExperimentReport run_experiment(const ExperimentConfig& config);

// Exact median (average of the two middle elements for even sizes).
Rat rat_median(RatVec values);

}  // namespace eulerint

#endif
