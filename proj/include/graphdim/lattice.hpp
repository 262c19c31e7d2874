#ifndef GRAPHDIM_LATTICE_HPP
#define GRAPHDIM_LATTICE_HPP

#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphdim/graph.hpp"

namespace graphdim {

/// Hypercube lattice {0..side}^dim: side links (side+1 nodes) per axis.
struct LatticeSpec {
    int dim = 1;
    int side = 1;

    void validate() const {
        if (dim < 1) throw std::invalid_argument("lattice dimension must be >= 1");
        if (side < 1) throw std::invalid_argument("lattice side must be >= 1");
        (void)checked_node_count(dim, side);
    }

    /// (side+1)^dim with overflow rejection against the NodeId range.
    static std::uint64_t checked_node_count(int dim, int side) {
        const std::uint64_t base = static_cast<std::uint64_t>(side) + 1;
        const std::uint64_t limit = std::uint64_t{1} << 32;
        std::uint64_t count = 1;
        for (int i = 0; i < dim; ++i) {
            if (count > limit / base)
                throw std::overflow_error("lattice node count exceeds addressable range");
            count *= base;
        }
        return count;
    }
};

struct LatticeCounts {
    std::uint64_t nodes = 0;
    std::uint64_t edges = 0;
};

/// Closed forms: nodes = (L+1)^n, edges = n*L*(L+1)^(n-1).
inline LatticeCounts expected_counts(const LatticeSpec& spec) {
    spec.validate();
    const std::uint64_t base = static_cast<std::uint64_t>(spec.side) + 1;
    std::uint64_t pow_nm1 = 1;
    for (int i = 0; i < spec.dim - 1; ++i) pow_nm1 *= base;  // validated, cannot overflow
    LatticeCounts c;
    c.nodes = pow_nm1 * base;
    const std::uint64_t nl = static_cast<std::uint64_t>(spec.dim) * static_cast<std::uint64_t>(spec.side);
    if (pow_nm1 > 0 && nl > std::numeric_limits<std::uint64_t>::max() / pow_nm1)
        throw std::overflow_error("lattice edge count overflow");
    c.edges = nl * pow_nm1;
    return c;
}

/// Row-major id layout: coordinate i contributes c_i * (side+1)^i.
inline NodeId lattice_id(const LatticeSpec& spec, const std::vector<int>& coords) {
    std::uint64_t id = 0;
    for (int i = spec.dim - 1; i >= 0; --i)
        id = id * (static_cast<std::uint64_t>(spec.side) + 1) + static_cast<std::uint64_t>(coords[i]);
    return static_cast<NodeId>(id);
}

inline std::vector<int> lattice_coords(const LatticeSpec& spec, NodeId id) {
    std::vector<int> c(static_cast<std::size_t>(spec.dim));
    std::uint64_t rest = id;
    const std::uint64_t base = static_cast<std::uint64_t>(spec.side) + 1;
    for (int i = 0; i < spec.dim; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<int>(rest % base);
        rest /= base;
    }
    return c;
}

/// Streams the lattice straight into CSR; no intermediate edge list.
/// Neighbors of id are id +- (L+1)^i where coordinate i is not extremal.
inline Graph generate_hypercube(const LatticeSpec& spec) {
    spec.validate();
    const std::uint64_t n = LatticeSpec::checked_node_count(spec.dim, spec.side);
    const std::uint64_t base = static_cast<std::uint64_t>(spec.side) + 1;

    std::vector<std::uint64_t> strides(static_cast<std::size_t>(spec.dim));
    strides[0] = 1;
    for (int i = 1; i < spec.dim; ++i) strides[static_cast<std::size_t>(i)] = strides[static_cast<std::size_t>(i - 1)] * base;

    std::vector<std::uint64_t> offsets(n + 1, 0);
    // pass 1: degrees
    for (std::uint64_t id = 0; id < n; ++id) {
        std::uint64_t rest = id;
        std::size_t deg = 0;
        for (int i = 0; i < spec.dim; ++i) {
            const std::uint64_t c = rest % base;
            rest /= base;
            if (c > 0) ++deg;
            if (c < static_cast<std::uint64_t>(spec.side)) ++deg;
        }
        offsets[id + 1] = deg;
    }
    for (std::uint64_t id = 0; id < n; ++id) offsets[id + 1] += offsets[id];

    std::vector<NodeId> neighbors(offsets[n]);
    // pass 2: fill; descending stride with -stride before +stride keeps
    // each list ascending without a sort
    for (std::uint64_t id = 0; id < n; ++id) {
        std::uint64_t pos = offsets[id];
        for (int i = spec.dim - 1; i >= 0; --i) {
            const std::uint64_t s = strides[static_cast<std::size_t>(i)];
            if ((id / s) % base > 0) neighbors[pos++] = static_cast<NodeId>(id - s);
        }
        for (int i = 0; i < spec.dim; ++i) {
            const std::uint64_t s = strides[static_cast<std::size_t>(i)];
            if ((id / s) % base < static_cast<std::uint64_t>(spec.side)) neighbors[pos++] = static_cast<NodeId>(id + s);
        }
    }
    return Graph::from_csr(std::move(offsets), std::move(neighbors), SemanticType::Lattice);
}

struct LatticeReport {
    bool node_count_ok = false;
    bool edge_count_ok = false;
    bool degrees_ok = false;
    std::uint64_t expected_nodes = 0, actual_nodes = 0;
    std::uint64_t expected_edges = 0, actual_edges = 0;
    std::string details;

    bool ok() const { return node_count_ok && edge_count_ok && degrees_ok; }
};

/// Checks g against the closed-form counts and the per-node degree rule:
/// degree = 2*dim minus one per extremal coordinate.
inline LatticeReport validate_lattice(const Graph& g, const LatticeSpec& spec) {
    LatticeReport rep;
    const LatticeCounts want = expected_counts(spec);
    rep.expected_nodes = want.nodes;
    rep.actual_nodes = g.node_count();
    rep.expected_edges = want.edges;
    rep.actual_edges = g.edge_count();
    rep.node_count_ok = rep.expected_nodes == rep.actual_nodes;
    rep.edge_count_ok = rep.expected_edges == rep.actual_edges;

    std::ostringstream details;
    if (!rep.node_count_ok)
        details << "node count: expected " << want.nodes << ", got " << g.node_count() << "\n";
    if (!rep.edge_count_ok)
        details << "edge count: expected " << want.edges << ", got " << g.edge_count() << "\n";

    rep.degrees_ok = rep.node_count_ok;
    if (rep.node_count_ok) {
        const std::uint64_t base = static_cast<std::uint64_t>(spec.side) + 1;
        for (std::uint64_t id = 0; id < want.nodes; ++id) {
            std::uint64_t rest = id;
            std::size_t expect = 0;
            for (int i = 0; i < spec.dim; ++i) {
                const std::uint64_t c = rest % base;
                rest /= base;
                if (c > 0) ++expect;
                if (c < static_cast<std::uint64_t>(spec.side)) ++expect;
            }
            if (g.degree(static_cast<NodeId>(id)) != expect) {
                rep.degrees_ok = false;
                details << "node " << id << ": degree " << g.degree(static_cast<NodeId>(id))
                        << ", expected " << expect << "\n";
                break;
            }
        }
    }
    rep.details = details.str();
    return rep;
}

}  // namespace graphdim

#endif
