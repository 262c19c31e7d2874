#ifndef GRAPHDIM_BALL_HPP
#define GRAPHDIM_BALL_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "graphdim/graph.hpp"

namespace graphdim {

/// Cumulative reachable-node counts N(0..r_max) from one origin.
struct BallProfile {
    NodeId origin = 0;
    int r_max = 0;
    bool include_origin = true;
    std::vector<std::uint64_t> cumulative;  // index R, size r_max+1

    std::uint64_t at(int r) const { return cumulative[static_cast<std::size_t>(r)]; }
};

/// Level-synchronous BFS with reusable scratch. One prober per worker;
/// the epoch counter avoids clearing the visited array between probes.
class BallProber {
public:
    explicit BallProber(const Graph& g)
        : graph_(&g), visited_epoch_(g.node_count(), 0), epoch_(0) {
        frontier_.reserve(1024);
        next_.reserve(1024);
    }

    BallProfile profile(NodeId origin, int r_max, bool include_origin = true) {
        const Graph& g = *graph_;
        if (origin >= g.node_count()) throw std::out_of_range("invalid origin id");
        if (r_max < 1) throw std::invalid_argument("r_max must be >= 1");

        ++epoch_;
        BallProfile p;
        p.origin = origin;
        p.r_max = r_max;
        p.include_origin = include_origin;
        p.cumulative.resize(static_cast<std::size_t>(r_max) + 1);

        visited_epoch_[origin] = epoch_;
        frontier_.clear();
        frontier_.push_back(origin);
        std::uint64_t reached = include_origin ? 1 : 0;
        p.cumulative[0] = reached;

        for (int r = 1; r <= r_max; ++r) {
            next_.clear();
            for (NodeId u : frontier_) {
                for (NodeId v : g.neighbors(u)) {
                    if (visited_epoch_[v] != epoch_) {
                        visited_epoch_[v] = epoch_;
                        next_.push_back(v);
                    }
                }
            }
            reached += next_.size();
            p.cumulative[static_cast<std::size_t>(r)] = reached;
            frontier_.swap(next_);
            if (frontier_.empty()) {
                for (int rr = r + 1; rr <= r_max; ++rr)
                    p.cumulative[static_cast<std::size_t>(rr)] = reached;
                break;
            }
        }
        return p;
    }

private:
    const Graph* graph_;
    std::vector<std::uint32_t> visited_epoch_;
    std::uint32_t epoch_;
    std::vector<NodeId> frontier_;
    std::vector<NodeId> next_;
};

inline BallProfile ball_profile(const Graph& g, NodeId origin, int r_max,
                                bool include_origin = true) {
    BallProber prober(g);
    return prober.profile(origin, r_max, include_origin);
}

/// Smallest R with N(R) = N(r_max) when the ball saturated strictly
/// inside the budget; nullopt while growth continued through r_max.
inline std::optional<int> eccentricity_reached(const BallProfile& p) {
    const auto last = p.cumulative.back();
    if (p.r_max < 1 || p.at(p.r_max - 1) != last) return std::nullopt;
    int r = p.r_max - 1;
    while (r > 0 && p.at(r - 1) == last) --r;
    return r;
}

}  // namespace graphdim

#endif
