#include <sstream>

#include <catch_amalgamated.hpp>

#include "graphdim/itdk.hpp"

using namespace graphdim;

namespace {

const std::string kFixtureDir = GRAPHDIM_FIXTURE_DIR "/itdk";

ItdkBundle fixture_bundle() {
    return parse_itdk({kFixtureDir + "/fixture.nodes", kFixtureDir + "/fixture.links",
                       kFixtureDir + "/fixture.nodes.as"});
}

}  // namespace

TEST_CASE("grammar: node, link, node.AS lines") {
    ItdkBundle b;
    std::istringstream nodes("node N1:  1.2.3.4 5.6.7.8\n");
    parse_itdk_nodes(b, nodes);
    REQUIRE(b.name_to_id.count("N1") == 1);
    REQUIRE(b.addresses[0] == std::vector<std::string>{"1.2.3.4", "5.6.7.8"});

    std::istringstream links("link L7:  N1:1.2.3.4 N2 N3\n");
    parse_itdk_links(b, links);
    REQUIRE(b.links.size() == 1);
    REQUIRE(b.links[0].size() == 3);

    std::istringstream as("node.AS N1 7018 refinement\n");
    parse_itdk_node_as(b, as);
    REQUIRE(b.as_of[b.name_to_id.at("N1")] == 7018);
}

TEST_CASE("grammar errors") {
    ItdkBundle b;
    std::istringstream bad_name("node X9:\n");
    REQUIRE_THROWS_WITH(parse_itdk_nodes(b, bad_name),
                        Catch::Matchers::ContainsSubstring("malformed node name"));
    std::istringstream short_link("link L1: N1 N1\n");
    REQUIRE_THROWS_WITH(parse_itdk_links(b, short_link),
                        Catch::Matchers::ContainsSubstring("fewer than 2 distinct"));
    std::istringstream bad_asn("node.AS N1 -3\n");
    REQUIRE_THROWS_AS(parse_itdk_node_as(b, bad_asn), std::runtime_error);
}

TEST_CASE("conflicting AS assignment: first wins, counted") {
    ItdkBundle b;
    std::istringstream as("node.AS N1 100\nnode.AS N1 200\nnode.AS N1 100\n");
    parse_itdk_node_as(b, as);
    REQUIRE(b.as_of[0] == 100);
    REQUIRE(b.conflicting_as_assignments == 1);
}

TEST_CASE("nodes referenced only in links are created implicitly") {
    ItdkBundle b;
    std::istringstream links("link L1: N5 N6\n");
    parse_itdk_links(b, links);
    REQUIRE(b.node_names.size() == 2);
    REQUIRE(b.name_to_id.count("N5") == 1);
}

TEST_CASE("device graph: 2-member links are plain edges, multi-member links are cliques") {
    ItdkBundle b;
    std::istringstream links("link L1: N1 N2\nlink L2: N2 N3\n");
    parse_itdk_links(b, links);
    Graph g = build_device_graph(b);
    REQUIRE(g.node_count() == 3);
    REQUIRE(g.edge_count() == 2);

    ItdkBundle tri;
    std::istringstream tlinks("link L1: N1 N2 N3\n");
    parse_itdk_links(tri, tlinks);
    Graph t = build_device_graph(tri);
    REQUIRE(t.edge_count() == 3);

    ItdkBundle dup;
    std::istringstream dlinks("link L1: N1 N2\nlink L2: N1 N2\n");
    parse_itdk_links(dup, dlinks);
    REQUIRE(build_device_graph(dup).edge_count() == 1);
}

TEST_CASE("fixture bundle: device channel structure") {
    const ItdkBundle b = fixture_bundle();
    REQUIRE(b.node_names.size() == 10);
    REQUIRE(b.conflicting_as_assignments == 1);
    const Graph dev = build_device_graph(b);
    REQUIRE(dev.node_count() == 10);
    REQUIRE(dev.edge_count() == 10);
    REQUIRE(dev.type(0) == SemanticType::Device);
    REQUIRE(*dev.names().name_of(9) == "N10");
}

TEST_CASE("fixture bundle: AS quotient structure") {
    const ItdkBundle b = fixture_bundle();
    const Graph dev = build_device_graph(b);
    const AsGraphResult as = build_as_graph(b, dev);
    REQUIRE(as.excluded_devices == 2);
    REQUIRE(as.graph.node_count() == 4);
    REQUIRE(as.graph.edge_count() == 3);
    // labels ascending: AS100 - AS200 - AS300 - AS400 path
    REQUIRE(*as.graph.names().name_of(0) == "AS100");
    REQUIRE(*as.graph.names().name_of(3) == "AS400");
    REQUIRE(as.graph.degree(0) == 1);
    REQUIRE(as.graph.degree(1) == 2);
    REQUIRE(as.graph.degree(2) == 2);
    REQUIRE(as.graph.degree(3) == 1);
    REQUIRE(as.graph.type(0) == SemanticType::AS);
}

TEST_CASE("ingest -> save -> load round-trips bit-exactly") {
    const ItdkBundle b = fixture_bundle();
    for (const Graph& g : {build_device_graph(b), build_as_graph(b, build_device_graph(b)).graph}) {
        std::ostringstream out;
        save_graph(g, out);
        std::istringstream in(out.str());
        const Graph g2 = load_graph(in);
        REQUIRE(g == g2);
        std::ostringstream out2;
        save_graph(g2, out2);
        REQUIRE(out.str() == out2.str());
    }
}

TEST_CASE("all-devices-in-one-AS collapses to a bare node") {
    ItdkBundle b;
    std::istringstream links("link L1: N1 N2\nlink L2: N2 N3\n");
    parse_itdk_links(b, links);
    std::istringstream as("node.AS N1 9\nnode.AS N2 9\nnode.AS N3 9\n");
    parse_itdk_node_as(b, as);
    const AsGraphResult res = build_as_graph(b, build_device_graph(b));
    REQUIRE(res.graph.node_count() == 1);
    REQUIRE(res.graph.edge_count() == 0);
}

TEST_CASE("edges between unassigned devices contribute nothing") {
    ItdkBundle b;
    std::istringstream links("link L1: N1 N2\nlink L2: N3 N4\n");
    parse_itdk_links(b, links);
    std::istringstream as("node.AS N1 5\nnode.AS N2 6\n");
    parse_itdk_node_as(b, as);
    const AsGraphResult res = build_as_graph(b, build_device_graph(b));
    REQUIRE(res.graph.node_count() == 2);
    REQUIRE(res.graph.edge_count() == 1);
    REQUIRE(res.excluded_devices == 2);
}

TEST_CASE("comment lines and unknown record kinds are skipped") {
    ItdkBundle b;
    std::istringstream nodes("# header\nnode N1: 1.2.3.4\nother stuff here\n");
    parse_itdk_nodes(b, nodes);
    REQUIRE(b.node_names.size() == 1);
}
