#ifndef GRAPHDIM_ITDK_HPP
#define GRAPHDIM_ITDK_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "graphdim/graph.hpp"

namespace graphdim {

/// Parsed ITDK-style bundle: node symbol table, link membership records,
/// and node -> AS assignments. Node names match N[0-9]+.
struct ItdkBundle {
    std::vector<std::string> node_names;              // id -> name
    std::unordered_map<std::string, NodeId> name_to_id;
    std::vector<std::vector<std::string>> addresses;  // id -> IPv4 strings seen
    std::vector<std::vector<NodeId>> links;           // each: >= 2 distinct members
    std::vector<std::int64_t> as_of;                  // id -> ASN, -1 unassigned
    std::uint64_t conflicting_as_assignments = 0;     // duplicates with different ASN (first wins)

    NodeId intern(const std::string& name) {
        auto it = name_to_id.find(name);
        if (it != name_to_id.end()) return it->second;
        const NodeId id = static_cast<NodeId>(node_names.size());
        node_names.push_back(name);
        addresses.emplace_back();
        as_of.push_back(-1);
        name_to_id.emplace(name, id);
        return id;
    }
};

namespace detail {

inline bool valid_node_name(const std::string& s) {
    if (s.size() < 2 || s[0] != 'N') return false;
    return std::all_of(s.begin() + 1, s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

inline std::string strip_colon_suffix(const std::string& tok) {
    const auto pos = tok.find(':');
    return pos == std::string::npos ? tok : tok.substr(0, pos);
}

[[noreturn]] inline void fail(const char* file_kind, std::size_t line_no, const std::string& what) {
    throw std::runtime_error(std::string(file_kind) + " line " + std::to_string(line_no) + ": " + what);
}

}  // namespace detail

/// "node <NAME>:" followed by whitespace-separated addresses.
inline void parse_itdk_nodes(ItdkBundle& bundle, std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string kw, name_tok;
        if (!(ls >> kw >> name_tok)) detail::fail("nodes", line_no, "malformed line");
        if (kw != "node") continue;  // unknown record kind, skip
        const std::string name = detail::strip_colon_suffix(name_tok);
        if (!detail::valid_node_name(name)) detail::fail("nodes", line_no, "malformed node name '" + name + "'");
        const NodeId id = bundle.intern(name);
        std::string addr;
        while (ls >> addr) bundle.addresses[id].push_back(addr);
    }
}

/// "link <LNAME>:" followed by members "<NAME>" or "<NAME>:<address>".
/// Members referenced before any node record are created implicitly.
inline void parse_itdk_links(ItdkBundle& bundle, std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string kw, lname;
        if (!(ls >> kw >> lname)) detail::fail("links", line_no, "malformed line");
        if (kw != "link") continue;
        std::vector<NodeId> members;
        std::string tok;
        while (ls >> tok) {
            const std::string name = detail::strip_colon_suffix(tok);
            if (!detail::valid_node_name(name)) detail::fail("links", line_no, "malformed member name '" + name + "'");
            const NodeId id = bundle.intern(name);
            if (std::find(members.begin(), members.end(), id) == members.end()) members.push_back(id);
        }
        if (members.size() < 2) detail::fail("links", line_no, "link with fewer than 2 distinct members");
        bundle.links.push_back(std::move(members));
    }
}

/// "node.AS <NAME> <ASN> [<method>]". Conflicting re-assignment keeps the
/// first value and is counted.
inline void parse_itdk_node_as(ItdkBundle& bundle, std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string kw, name;
        long long asn = 0;
        if (!(ls >> kw >> name)) detail::fail("node.AS", line_no, "malformed line");
        if (kw != "node.AS") continue;
        if (!detail::valid_node_name(name)) detail::fail("node.AS", line_no, "malformed node name '" + name + "'");
        if (!(ls >> asn) || asn <= 0) detail::fail("node.AS", line_no, "AS number must be a positive integer");
        const NodeId id = bundle.intern(name);
        if (bundle.as_of[id] >= 0) {
            if (bundle.as_of[id] != asn) ++bundle.conflicting_as_assignments;
            continue;
        }
        bundle.as_of[id] = asn;
    }
}

struct ItdkPaths {
    std::string nodes_path;
    std::string links_path;
    std::string node_as_path;  // optional, empty = absent
};

inline ItdkBundle parse_itdk(const ItdkPaths& paths) {
    ItdkBundle bundle;
    {
        std::ifstream in(paths.nodes_path);
        if (!in) throw std::runtime_error("cannot open " + paths.nodes_path);
        parse_itdk_nodes(bundle, in);
    }
    {
        std::ifstream in(paths.links_path);
        if (!in) throw std::runtime_error("cannot open " + paths.links_path);
        parse_itdk_links(bundle, in);
    }
    if (!paths.node_as_path.empty()) {
        std::ifstream in(paths.node_as_path);
        if (!in) throw std::runtime_error("cannot open " + paths.node_as_path);
        parse_itdk_node_as(bundle, in);
    }
    return bundle;
}

/// One node per ITDK node; each m-member link becomes the clique on its
/// members (a shared medium puts all members at mutual distance 1).
inline Graph build_device_graph(const ItdkBundle& bundle) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (const auto& members : bundle.links)
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                edges.emplace_back(members[i], members[j]);
    Graph g = Graph::from_edges(bundle.node_names.size(), std::move(edges), SemanticType::Device);
    for (NodeId u = 0; u < bundle.node_names.size(); ++u)
        g.names().set(u, bundle.node_names[u]);
    return g;
}

struct AsGraphResult {
    Graph graph;
    std::size_t excluded_devices = 0;  // devices with no AS assignment
};

/// AS channel: quotient of the device graph under AS membership.
/// Unassigned devices are excluded (pooling them would fabricate a hub).
inline AsGraphResult build_as_graph(const ItdkBundle& bundle, const Graph& device_graph) {
    if (device_graph.node_count() != bundle.as_of.size())
        throw std::invalid_argument("device graph does not match bundle");
    QuotientResult q = quotient_by_partition(device_graph, bundle.as_of);
    AsGraphResult res;
    res.excluded_devices = q.excluded_nodes;
    res.graph = std::move(q.graph);
    for (NodeId u = 0; u < res.graph.node_count(); ++u)
        res.graph.names().set(u, "AS" + std::to_string(q.label_of_node[u]));
    return res;
}

}  // namespace graphdim

#endif
