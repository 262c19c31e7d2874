#include <random>
#include <sstream>

#include <catch_amalgamated.hpp>

#include "graphdim/ball.hpp"
#include "graphdim/lattice.hpp"
#include "oracle.hpp"

using namespace graphdim;

namespace {

Graph ring(std::size_t n) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u = 0; u < n; ++u) edges.emplace_back(u, static_cast<NodeId>((u + 1) % n));
    return Graph::from_edges(n, edges);
}

Graph path(std::size_t n) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u = 1; u < n; ++u) edges.emplace_back(u - 1, u);
    return Graph::from_edges(n, edges);
}

Graph star(std::size_t leaves) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u = 1; u <= leaves; ++u) edges.emplace_back(0, u);
    return Graph::from_edges(leaves + 1, edges);
}

}  // namespace

TEST_CASE("ring of 10: two new nodes per hop") {
    const BallProfile p = ball_profile(ring(10), 0, 3, true);
    REQUIRE(p.cumulative == std::vector<std::uint64_t>{1, 3, 5, 7});
}

TEST_CASE("2-cube side 4 from the center matches the clipped L1 ball") {
    const LatticeSpec spec{2, 4};
    const Graph g = generate_hypercube(spec);
    const NodeId center = lattice_id(spec, {2, 2});
    const BallProfile p = ball_profile(g, center, 4, true);
    REQUIRE(p.cumulative == std::vector<std::uint64_t>{1, 5, 13, 21, 25});
}

TEST_CASE("path graph saturates") {
    const BallProfile p = ball_profile(path(3), 0, 5, true);
    REQUIRE(p.cumulative == std::vector<std::uint64_t>{1, 2, 3, 3, 3, 3});
}

TEST_CASE("exclude-origin shifts every count by one") {
    const Graph g = ring(10);
    const BallProfile with = ball_profile(g, 3, 4, true);
    const BallProfile without = ball_profile(g, 3, 4, false);
    for (int r = 0; r <= 4; ++r) REQUIRE(with.at(r) == without.at(r) + 1);
}

TEST_CASE("invalid arguments rejected") {
    const Graph g = ring(4);
    REQUIRE_THROWS_AS(ball_profile(g, 99, 3, true), std::out_of_range);
    REQUIRE_THROWS_AS(ball_profile(g, 0, 0, true), std::invalid_argument);
}

TEST_CASE("profile monotone, bounded by node count, frozen after saturation") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 2 + rng() % 30;
        std::vector<std::pair<NodeId, NodeId>> edges;
        const std::size_t m = rng() % (2 * n);
        for (std::size_t i = 0; i < m; ++i)
            edges.emplace_back(static_cast<NodeId>(rng() % n), static_cast<NodeId>(rng() % n));
        const Graph g = Graph::from_edges(n, edges);
        const BallProfile p = ball_profile(g, static_cast<NodeId>(rng() % n), 1 + static_cast<int>(rng() % 10), true);
        REQUIRE(p.at(0) == 1);
        bool frozen = false;
        for (int r = 1; r <= p.r_max; ++r) {
            REQUIRE(p.at(r) >= p.at(r - 1));
            REQUIRE(p.at(r) <= g.node_count());
            if (frozen) REQUIRE(p.at(r) == p.at(r - 1));
            if (p.at(r) == p.at(r - 1)) frozen = true;
        }
    }
}

TEST_CASE("BFS counts equal the Floyd-Warshall oracle on random graphs") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t n = 2 + rng() % 25;
        std::vector<std::pair<NodeId, NodeId>> edges;
        for (std::size_t i = 0; i < n + rng() % n; ++i)
            edges.emplace_back(static_cast<NodeId>(rng() % n), static_cast<NodeId>(rng() % n));
        const Graph g = Graph::from_edges(n, edges);
        const auto dist = oracle::all_pairs_distances(g);
        const int r_max = 1 + static_cast<int>(rng() % 8);
        BallProber prober(g);
        for (NodeId origin = 0; origin < n; ++origin) {
            const BallProfile p = prober.profile(origin, r_max, true);
            REQUIRE(p.cumulative == oracle::ball_counts(dist, origin, r_max, true));
        }
    }
}

TEST_CASE("lattice profiles equal the point-enumeration oracle") {
    for (int dim : {2, 3}) {
        const int side = 4;
        const LatticeSpec spec{dim, side};
        const Graph g = generate_hypercube(spec);
        BallProber prober(g);
        std::mt19937_64 rng(4);
        for (int trial = 0; trial < 10; ++trial) {
            const NodeId origin = static_cast<NodeId>(rng() % g.node_count());
            const BallProfile p = prober.profile(origin, 6, true);
            REQUIRE(p.cumulative ==
                    oracle::lattice_ball_counts(lattice_coords(spec, origin), side, dim, 6, true));
        }
    }
}

TEST_CASE("eccentricity_reached") {
    SECTION("path: read saturation radius") {
        const BallProfile p = ball_profile(path(3), 0, 5, true);
        REQUIRE(eccentricity_reached(p) == 2);
    }
    SECTION("ring still growing at budget") {
        const BallProfile p = ball_profile(ring(10), 0, 3, true);
        REQUIRE_FALSE(eccentricity_reached(p).has_value());
    }
    SECTION("star hub saturates at one hop") {
        const BallProfile p = ball_profile(star(6), 0, 4, true);
        REQUIRE(eccentricity_reached(p) == 1);
    }
    SECTION("saturation exactly at budget counts as still growing") {
        // path of 4 from an end: N = [1,2,3,4]; budget 3 is the eccentricity
        const BallProfile p = ball_profile(path(4), 0, 3, true);
        REQUIRE_FALSE(eccentricity_reached(p).has_value());
    }
}

TEST_CASE("disconnected component never exceeds component size") {
    // two triangles
    const Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    const BallProfile p = ball_profile(g, 0, 10, true);
    REQUIRE(p.at(10) == 3);
    REQUIRE(eccentricity_reached(p) == 1);
}
