#ifndef GRAPHDIM_ENSEMBLE_HPP
#define GRAPHDIM_ENSEMBLE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "graphdim/ball.hpp"
#include "graphdim/dimension.hpp"
#include "graphdim/graph.hpp"
#include "graphdim/lattice.hpp"

namespace graphdim {

enum class OriginFilter { AllNodes, GiantComponentOnly };

struct EnsembleSpec {
    std::uint64_t sample_count = 1;
    int r_max = 2;
    std::uint64_t seed = 0;
    bool include_origin = true;
    OriginFilter origin_filter = OriginFilter::AllNodes;

    void validate() const {
        if (sample_count < 1) throw std::invalid_argument("sample_count must be >= 1");
        if (r_max < 2) throw std::invalid_argument("r_max must be >= 2");
    }
};

struct RadiusStats {
    int radius = 0;
    double mean_raw = 0.0;
    double mean_calibrated = 0.0;
    double std_calibrated = 0.0;  // population std
    double min_calibrated = 0.0;
    double max_calibrated = 0.0;
};

struct EnsembleStats {
    std::vector<RadiusStats> per_radius;  // R = 2..r_max
    std::uint64_t sample_count = 0;
    double confined_fraction = 0.0;
    std::optional<double> mean_confinement_radius;
    std::optional<int> max_confinement_radius;
    std::optional<int> min_confinement_radius;
    int peak_radius = 0;             // argmax over R of mean_calibrated
    double peak_mean_calibrated = 0.0;

    const RadiusStats& at_radius(int r) const {
        return per_radius.at(static_cast<std::size_t>(r - 2));
    }
};

/// Members of the largest connected component, ascending.
inline std::vector<NodeId> giant_component(const Graph& g) {
    std::vector<std::uint32_t> comp(g.node_count(), 0);  // 0 = unvisited
    std::uint32_t comp_id = 0;
    std::uint32_t best_comp = 0;
    std::uint64_t best_size = 0;
    std::vector<NodeId> stack;
    for (NodeId s = 0; s < g.node_count(); ++s) {
        if (comp[s] != 0) continue;
        ++comp_id;
        std::uint64_t size = 0;
        comp[s] = comp_id;
        stack.push_back(s);
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            ++size;
            for (NodeId v : g.neighbors(u)) {
                if (comp[v] == 0) {
                    comp[v] = comp_id;
                    stack.push_back(v);
                }
            }
        }
        if (size > best_size) { best_size = size; best_comp = comp_id; }
    }
    std::vector<NodeId> members;
    members.reserve(best_size);
    for (NodeId u = 0; u < g.node_count(); ++u)
        if (comp[u] == best_comp) members.push_back(u);
    return members;
}

/// sample_count distinct origins, uniform without replacement; fully
/// determined by spec.seed (partial Fisher-Yates over eligible nodes).
inline std::vector<NodeId> draw_origins(const Graph& g, const EnsembleSpec& spec) {
    std::vector<NodeId> eligible;
    if (spec.origin_filter == OriginFilter::GiantComponentOnly) {
        eligible = giant_component(g);
    } else {
        eligible.resize(g.node_count());
        for (NodeId u = 0; u < g.node_count(); ++u) eligible[u] = u;
    }
    if (spec.sample_count > eligible.size())
        throw std::invalid_argument("more samples requested than eligible origins");
    std::mt19937_64 rng(spec.seed);
    for (std::uint64_t i = 0; i < spec.sample_count; ++i) {
        std::uniform_int_distribution<std::uint64_t> pick(i, eligible.size() - 1);
        std::swap(eligible[i], eligible[pick(rng)]);
    }
    eligible.resize(spec.sample_count);
    return eligible;
}

/// Method 2: probe every sampled origin, then aggregate per radius.
/// Probes may run on several threads; per-origin rows land in a fixed
/// matrix and the reduction walks sample indices in order, so the result
/// is identical for any thread count.
inline EnsembleStats run_ensemble(const Graph& g, const EnsembleSpec& spec,
                                  unsigned threads = 1) {
    if (g.node_count() == 0) throw std::invalid_argument("empty graph");
    spec.validate();
    const std::vector<NodeId> origins = draw_origins(g, spec);
    const std::size_t n_radii = static_cast<std::size_t>(spec.r_max) - 1;  // R = 2..r_max
    const std::size_t s = origins.size();

    std::vector<double> raw_rows(s * n_radii);
    std::vector<double> cal_rows(s * n_radii);
    std::vector<int> sat_radius(s, -1);  // -1 = not confined within budget

    auto worker = [&](unsigned worker_id, unsigned worker_count) {
        BallProber prober(g);
        for (std::size_t i = worker_id; i < s; i += worker_count) {
            BallProfile bp = prober.profile(origins[i], spec.r_max, spec.include_origin);
            DimensionProfile dp = dimension_profile(bp);
            for (std::size_t j = 0; j < n_radii; ++j) {
                raw_rows[i * n_radii + j] = dp.raw[j];
                cal_rows[i * n_radii + j] = dp.calibrated[j];
            }
            if (auto ecc = eccentricity_reached(bp)) sat_radius[i] = *ecc;
        }
    };

    if (threads <= 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t, threads);
        for (auto& t : pool) t.join();
    }

    EnsembleStats stats;
    stats.sample_count = s;
    stats.per_radius.resize(n_radii);
    for (std::size_t j = 0; j < n_radii; ++j) {
        RadiusStats& rs = stats.per_radius[j];
        rs.radius = 2 + static_cast<int>(j);
        double sum_raw = 0.0, sum_cal = 0.0, sum_cal2 = 0.0;
        double mn = cal_rows[j], mx = cal_rows[j];
        for (std::size_t i = 0; i < s; ++i) {
            const double c = cal_rows[i * n_radii + j];
            sum_raw += raw_rows[i * n_radii + j];
            sum_cal += c;
            sum_cal2 += c * c;
            mn = std::min(mn, c);
            mx = std::max(mx, c);
        }
        const double ds = static_cast<double>(s);
        rs.mean_raw = sum_raw / ds;
        rs.mean_calibrated = sum_cal / ds;
        rs.std_calibrated = std::sqrt(std::max(0.0, sum_cal2 / ds - rs.mean_calibrated * rs.mean_calibrated));
        rs.min_calibrated = mn;
        rs.max_calibrated = mx;
    }

    std::uint64_t confined = 0;
    std::uint64_t radius_sum = 0;
    for (std::size_t i = 0; i < s; ++i) {
        if (sat_radius[i] < 0) continue;
        ++confined;
        radius_sum += static_cast<std::uint64_t>(sat_radius[i]);
        if (!stats.max_confinement_radius || sat_radius[i] > *stats.max_confinement_radius)
            stats.max_confinement_radius = sat_radius[i];
        if (!stats.min_confinement_radius || sat_radius[i] < *stats.min_confinement_radius)
            stats.min_confinement_radius = sat_radius[i];
    }
    stats.confined_fraction = static_cast<double>(confined) / static_cast<double>(s);
    if (confined > 0)
        stats.mean_confinement_radius = static_cast<double>(radius_sum) / static_cast<double>(confined);

    std::size_t peak = 0;
    for (std::size_t j = 1; j < n_radii; ++j)
        if (stats.per_radius[j].mean_calibrated > stats.per_radius[peak].mean_calibrated) peak = j;
    stats.peak_radius = stats.per_radius[peak].radius;
    stats.peak_mean_calibrated = stats.per_radius[peak].mean_calibrated;
    return stats;
}

struct ConfinementReport {
    double confined_fraction = 0.0;
    std::optional<double> mean_confinement_radius;
    std::optional<int> max_confinement_radius;
    /// Calibrated values past the first observed saturation radius: N is
    /// frozen there while the denominator grows, so these decay.
    std::vector<RadiusStats> decay;
};

inline ConfinementReport confinement_report(const EnsembleStats& stats) {
    ConfinementReport rep;
    rep.confined_fraction = stats.confined_fraction;
    rep.mean_confinement_radius = stats.mean_confinement_radius;
    rep.max_confinement_radius = stats.max_confinement_radius;
    if (stats.min_confinement_radius) {
        for (const RadiusStats& rs : stats.per_radius)
            if (rs.radius > *stats.min_confinement_radius) rep.decay.push_back(rs);
    }
    return rep;
}

struct CalibrationRow {
    int dim = 0;
    double mean_at_rmax = 0.0;
    double std_at_rmax = 0.0;
    double max_over_radius = 0.0;  // max over R of the ensemble-mean curve
    int peak_radius = 0;
};

/// One row per requested dimension: hypercube of the given side,
/// ensemble per spec, values shaped like the calibration table.
inline std::vector<CalibrationRow> calibration_suite(const std::vector<int>& dims, int side,
                                                     const EnsembleSpec& spec,
                                                     unsigned threads = 1) {
    std::vector<CalibrationRow> rows;
    rows.reserve(dims.size());
    for (int n : dims) {
        const Graph g = generate_hypercube(LatticeSpec{n, side});
        const EnsembleStats stats = run_ensemble(g, spec, threads);
        CalibrationRow row;
        row.dim = n;
        row.mean_at_rmax = stats.at_radius(spec.r_max).mean_calibrated;
        row.std_at_rmax = stats.at_radius(spec.r_max).std_calibrated;
        row.max_over_radius = stats.peak_mean_calibrated;
        row.peak_radius = stats.peak_radius;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace graphdim

#endif
