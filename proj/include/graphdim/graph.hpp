#ifndef GRAPHDIM_GRAPH_HPP
#define GRAPHDIM_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace graphdim {

using NodeId = std::uint32_t;

enum class SemanticType : std::uint8_t { Device, AS, Unknown, Lattice };

inline const char* to_string(SemanticType t) {
    switch (t) {
        case SemanticType::Device: return "Device";
        case SemanticType::AS: return "AS";
        case SemanticType::Unknown: return "Unknown";
        case SemanticType::Lattice: return "Lattice";
    }
    return "Unknown";
}

inline std::optional<SemanticType> semantic_type_from_string(const std::string& s) {
    if (s == "Device") return SemanticType::Device;
    if (s == "AS") return SemanticType::AS;
    if (s == "Unknown") return SemanticType::Unknown;
    if (s == "Lattice") return SemanticType::Lattice;
    return std::nullopt;
}

/// Optional bidirectional NodeId <-> external-name table.
class NameTable {
public:
    void set(NodeId id, std::string name) {
        if (id >= id_to_name_.size()) id_to_name_.resize(id + 1);
        id_to_name_[id] = name;
        name_to_id_[std::move(name)] = id;
    }
    const std::string* name_of(NodeId id) const {
        if (id >= id_to_name_.size() || id_to_name_[id].empty()) return nullptr;
        return &id_to_name_[id];
    }
    std::optional<NodeId> id_of(const std::string& name) const {
        auto it = name_to_id_.find(name);
        if (it == name_to_id_.end()) return std::nullopt;
        return it->second;
    }
    bool empty() const { return name_to_id_.empty(); }

private:
    std::vector<std::string> id_to_name_;
    std::unordered_map<std::string, NodeId> name_to_id_;
};

/// Counts of input entries dropped while canonicalizing an edge set.
struct CanonicalizeStats {
    std::uint64_t self_loops_dropped = 0;
    std::uint64_t duplicates_dropped = 0;
};

/// Immutable undirected simple graph in CSR form. Adjacency lists are
/// sorted ascending, which makes file output byte-deterministic.
class Graph {
public:
    Graph() = default;

    /// Canonicalizes an arbitrary edge list: self-loops and duplicate
    /// edges are dropped (counted in `stats` when given).
    static Graph from_edges(std::size_t node_count,
                            std::vector<std::pair<NodeId, NodeId>> edges,
                            SemanticType type = SemanticType::Device,
                            CanonicalizeStats* stats = nullptr) {
        for (auto& [u, v] : edges) {
            if (u >= node_count || v >= node_count)
                throw std::out_of_range("edge endpoint out of range");
            if (u > v) std::swap(u, v);
        }
        std::uint64_t loops = 0;
        std::erase_if(edges, [&](const auto& e) {
            if (e.first == e.second) { ++loops; return true; }
            return false;
        });
        std::sort(edges.begin(), edges.end());
        const std::size_t before = edges.size();
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        if (stats) {
            stats->self_loops_dropped = loops;
            stats->duplicates_dropped = before - edges.size();
        }

        Graph g;
        g.types_.assign(node_count, type);
        std::vector<std::uint64_t> deg(node_count, 0);
        for (const auto& [u, v] : edges) { ++deg[u]; ++deg[v]; }
        g.offsets_.assign(node_count + 1, 0);
        for (std::size_t i = 0; i < node_count; ++i)
            g.offsets_[i + 1] = g.offsets_[i] + deg[i];
        g.neighbors_.resize(g.offsets_[node_count]);
        std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
        // edges are sorted by (u,v); appending keeps each list ascending in v,
        // and the reverse entries arrive in ascending u for each v
        for (const auto& [u, v] : edges) g.neighbors_[cursor[u]++] = v;
        for (const auto& [u, v] : edges) g.neighbors_[cursor[v]++] = u;
        for (std::size_t i = 0; i < node_count; ++i)
            std::sort(g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]),
                      g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]));
        return g;
    }

    /// Assembles a graph from a prebuilt CSR. Requires canonical input:
    /// sorted, symmetric, no loops or duplicates (checked).
    static Graph from_csr(std::vector<std::uint64_t> offsets,
                          std::vector<NodeId> neighbors,
                          SemanticType type) {
        Graph g;
        g.offsets_ = std::move(offsets);
        g.neighbors_ = std::move(neighbors);
        g.types_.assign(g.node_count(), type);
        g.check_canonical();
        return g;
    }

    std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::uint64_t edge_count() const { return neighbors_.size() / 2; }

    std::span<const NodeId> neighbors(NodeId u) const {
        return {neighbors_.data() + offsets_[u], neighbors_.data() + offsets_[u + 1]};
    }
    std::size_t degree(NodeId u) const { return offsets_[u + 1] - offsets_[u]; }

    SemanticType type(NodeId u) const { return types_[u]; }
    void set_type(NodeId u, SemanticType t) { types_[u] = t; }
    void set_all_types(SemanticType t) { std::fill(types_.begin(), types_.end(), t); }

    NameTable& names() { return names_; }
    const NameTable& names() const { return names_; }

    bool operator==(const Graph& o) const {
        return offsets_ == o.offsets_ && neighbors_ == o.neighbors_;
    }

private:
    void check_canonical() const {
        const std::size_t n = node_count();
        if (offsets_.empty() || offsets_[0] != 0 || offsets_[n] != neighbors_.size())
            throw std::logic_error("bad CSR offsets");
        for (NodeId u = 0; u < n; ++u) {
            auto adj = neighbors(u);
            for (std::size_t i = 0; i < adj.size(); ++i) {
                if (adj[i] == u) throw std::logic_error("self-loop in CSR");
                if (adj[i] >= n) throw std::logic_error("neighbor out of range");
                if (i > 0 && adj[i] <= adj[i - 1]) throw std::logic_error("CSR list not strictly ascending");
            }
        }
    }

    std::vector<std::uint64_t> offsets_;  // node_count+1 entries
    std::vector<NodeId> neighbors_;
    std::vector<SemanticType> types_;
    NameTable names_;
};

struct LoadStats {
    CanonicalizeStats canonical;
};

/// Edge-list interchange format: first non-comment line is the node
/// count, each following non-comment line is "u v". '#' starts a comment.
inline Graph load_graph(std::istream& in, SemanticType type = SemanticType::Device,
                        LoadStats* stats = nullptr) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::size_t> node_count;
    std::vector<std::pair<NodeId, NodeId>> edges;

    auto fail = [&](const std::string& what) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        if (!node_count) {
            long long n = -1;
            if (!(ls >> n) || n < 0) fail("malformed node count");
            std::string extra;
            if (ls >> extra) fail("trailing tokens after node count");
            node_count = static_cast<std::size_t>(n);
            continue;
        }
        long long u = -1, v = -1;
        if (!(ls >> u >> v) || u < 0 || v < 0) fail("malformed edge line");
        std::string extra;
        if (ls >> extra) fail("trailing tokens on edge line");
        if (static_cast<std::size_t>(u) >= *node_count || static_cast<std::size_t>(v) >= *node_count)
            fail("node id out of declared range");
        edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }
    if (!node_count) throw std::runtime_error("empty graph file");
    CanonicalizeStats cs;
    Graph g = Graph::from_edges(*node_count, std::move(edges), type, &cs);
    if (stats) stats->canonical = cs;
    return g;
}

inline Graph load_graph(const std::string& path, SemanticType type = SemanticType::Device,
                        LoadStats* stats = nullptr) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return load_graph(in, type, stats);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

/// Byte-deterministic writer: header, then "u v" with u < v sorted by (u,v).
inline void save_graph(const Graph& g, std::ostream& out) {
    out << g.node_count() << '\n';
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId v : g.neighbors(u))
            if (u < v) out << u << ' ' << v << '\n';
}

inline void save_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    save_graph(g, out);
    if (!out) throw std::runtime_error("write failure: " + path);
}

/// Sidecar "id name" per line.
inline void save_names(const Graph& g, std::ostream& out) {
    for (NodeId u = 0; u < g.node_count(); ++u)
        if (const std::string* nm = g.names().name_of(u)) out << u << ' ' << *nm << '\n';
}

inline void load_names(Graph& g, std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        long long id = -1;
        std::string name;
        if (!(ls >> id >> name) || id < 0 || static_cast<std::size_t>(id) >= g.node_count())
            throw std::runtime_error("names sidecar line " + std::to_string(line_no) + ": malformed");
        g.names().set(static_cast<NodeId>(id), name);
    }
}

/// Sidecar "id type" per line.
inline void load_types(Graph& g, std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        long long id = -1;
        std::string tag;
        auto t = std::optional<SemanticType>{};
        if ((ls >> id >> tag)) t = semantic_type_from_string(tag);
        if (id < 0 || static_cast<std::size_t>(id) >= g.node_count() || !t)
            throw std::runtime_error("types sidecar line " + std::to_string(line_no) + ": malformed");
        g.set_type(static_cast<NodeId>(id), *t);
    }
}

struct QuotientResult {
    Graph graph;
    std::vector<std::int64_t> label_of_node;  // quotient node id -> partition label
    std::size_t excluded_nodes = 0;           // nodes of g with no partition label
};

/// Contracts g by a partial partition. `member_of[u]` < 0 means u is
/// unmapped and excluded. Quotient nodes are the distinct labels in
/// ascending order; intra-partition edges vanish, parallel edges collapse.
inline QuotientResult quotient_by_partition(const Graph& g,
                                            const std::vector<std::int64_t>& member_of) {
    if (member_of.size() != g.node_count())
        throw std::invalid_argument("partition map size mismatch");
    std::vector<std::int64_t> labels;
    for (auto l : member_of)
        if (l >= 0) labels.push_back(l);
    if (labels.empty()) throw std::invalid_argument("empty partition map");
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    std::unordered_map<std::int64_t, NodeId> index;
    index.reserve(labels.size());
    for (NodeId i = 0; i < labels.size(); ++i) index[labels[i]] = i;

    QuotientResult res;
    res.label_of_node = labels;
    std::vector<std::pair<NodeId, NodeId>> qedges;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        if (member_of[u] < 0) { ++res.excluded_nodes; continue; }
        const NodeId a = index[member_of[u]];
        for (NodeId v : g.neighbors(u)) {
            if (u >= v || member_of[v] < 0) continue;
            const NodeId b = index[member_of[v]];
            if (a != b) qedges.emplace_back(a, b);
        }
    }
    res.graph = Graph::from_edges(labels.size(), std::move(qedges), SemanticType::AS);
    return res;
}

}  // namespace graphdim

#endif
