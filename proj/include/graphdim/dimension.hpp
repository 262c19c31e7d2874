#ifndef GRAPHDIM_DIMENSION_HPP
#define GRAPHDIM_DIMENSION_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "graphdim/ball.hpp"
#include "graphdim/graph.hpp"

namespace graphdim {

/// log(N) / log(h). Meaningful only for h >= 2.
inline double raw_dimension(std::uint64_t n_nodes, int n_hops) {
    if (n_hops < 2) throw std::invalid_argument("raw_dimension: n_hops must be >= 2");
    if (n_nodes < 1) throw std::invalid_argument("raw_dimension: n_nodes must be >= 1");
    return std::log(static_cast<double>(n_nodes)) / std::log(static_cast<double>(n_hops));
}

/// log(N) / log(h - 1/2 + 1/h): the lattice-calibrated estimator.
inline double calibrated_dimension(std::uint64_t n_nodes, int n_hops) {
    if (n_hops < 2) throw std::invalid_argument("calibrated_dimension: n_hops must be >= 2");
    if (n_nodes < 1) throw std::invalid_argument("calibrated_dimension: n_nodes must be >= 1");
    const double h = static_cast<double>(n_hops);
    return std::log(static_cast<double>(n_nodes)) / std::log(h - 0.5 + 1.0 / h);
}

/// Per-radius raw and calibrated dimension values for R = 2..r_max.
struct DimensionProfile {
    static constexpr int r_min = 2;
    std::vector<int> radii;
    std::vector<double> raw;
    std::vector<double> calibrated;
};

inline DimensionProfile dimension_profile(const BallProfile& p) {
    if (p.r_max < DimensionProfile::r_min)
        throw std::invalid_argument("dimension_profile: profile too short");
    DimensionProfile d;
    for (int r = DimensionProfile::r_min; r <= p.r_max; ++r) {
        const std::uint64_t n = p.at(r);
        if (n < 1) throw std::invalid_argument("dimension_profile: empty ball (origin excluded and unreached)");
        d.radii.push_back(r);
        d.raw.push_back(raw_dimension(n, r));
        d.calibrated.push_back(calibrated_dimension(n, r));
    }
    return d;
}

/// Degree histogram with the one-hop dimension <k>/2.
struct DegreeDistribution {
    std::map<std::uint64_t, std::uint64_t> histogram;  // k -> N(k)
    std::uint64_t total_nodes = 0;
    double mean_degree = 0.0;
    double degree_dimension = 0.0;

    double probability(std::uint64_t k) const {
        auto it = histogram.find(k);
        if (it == histogram.end()) return 0.0;
        return static_cast<double>(it->second) / static_cast<double>(total_nodes);
    }
};

inline DegreeDistribution degree_distribution(const Graph& g) {
    if (g.node_count() == 0) throw std::invalid_argument("degree_distribution: empty graph");
    DegreeDistribution d;
    d.total_nodes = g.node_count();
    std::uint64_t degree_sum = 0;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        const std::uint64_t k = g.degree(u);
        ++d.histogram[k];
        degree_sum += k;
    }
    d.mean_degree = static_cast<double>(degree_sum) / static_cast<double>(d.total_nodes);
    d.degree_dimension = d.mean_degree / 2.0;
    return d;
}

/// Euclidean n-ball volume pi^(n/2) / Gamma(n/2+1) * r^n (diagnostics only).
inline double continuum_ball_volume(int n, double r) {
    if (n < 1) throw std::invalid_argument("continuum_ball_volume: n must be >= 1");
    if (!(r > 0.0)) throw std::invalid_argument("continuum_ball_volume: r must be > 0");
    const double nd = static_cast<double>(n);
    return std::pow(std::numbers::pi, nd / 2.0) / std::tgamma(nd / 2.0 + 1.0) * std::pow(r, nd);
}

}  // namespace graphdim

#endif
