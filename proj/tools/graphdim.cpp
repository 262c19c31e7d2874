// graphdim: generate, ingest, and measure statistical graph dimension.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphdim/ball.hpp"
#include "graphdim/dimension.hpp"
#include "graphdim/ensemble.hpp"
#include "graphdim/graph.hpp"
#include "graphdim/itdk.hpp"
#include "graphdim/lattice.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

struct Output {
    std::ofstream file;
    std::ostream* os = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open " + path + " for writing");
        os = &file;
    }
    std::ostream& out() { return *os; }
};

void echo_header(std::ostream& os, const std::string& tool,
                 const std::vector<std::pair<std::string, std::string>>& kv) {
    os << "# tool=graphdim " << tool << " version=" << kVersion << '\n';
    os << "# config:";
    for (const auto& [k, v] : kv) os << ' ' << k << '=' << v;
    os << '\n';
}

bool g_quiet = false;

void note(const std::string& msg) {
    if (!g_quiet) std::cerr << msg << '\n';
}

graphdim::Graph load_with_warnings(const std::string& path) {
    graphdim::LoadStats stats;
    graphdim::Graph g = graphdim::load_graph(path, graphdim::SemanticType::Device, &stats);
    if (stats.canonical.self_loops_dropped || stats.canonical.duplicates_dropped)
        note("warning: dropped " + std::to_string(stats.canonical.self_loops_dropped) + " self-loops, " +
             std::to_string(stats.canonical.duplicates_dropped) + " duplicate edges from " + path);
    return g;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"statistical graph dimension toolkit"};
    app.require_subcommand(1);
    unsigned threads = 1;
    app.add_option("--threads", threads, "worker cap")->capture_default_str();
    app.add_flag("--quiet", g_quiet, "suppress diagnostics on stderr");

    // gen-hypercube
    auto* gen = app.add_subcommand("gen-hypercube", "generate an n-dimensional lattice");
    int gen_dim = 0, gen_side = 0;
    std::string gen_out;
    gen->add_option("--dim", gen_dim, "lattice dimension")->required();
    gen->add_option("--side", gen_side, "side length in links")->required();
    gen->add_option("--out", gen_out, "output path")->required();

    // validate-lattice
    auto* val = app.add_subcommand("validate-lattice", "check a graph against lattice closed forms");
    int val_dim = 0, val_side = 0;
    std::string val_graph;
    val->add_option("--graph", val_graph)->required();
    val->add_option("--dim", val_dim)->required();
    val->add_option("--side", val_side)->required();

    // ball
    auto* ball = app.add_subcommand("ball", "ball-growth profile from one origin");
    std::string ball_graph, ball_out;
    std::uint64_t ball_origin = 0;
    int ball_rmax = 0;
    bool ball_excl = false;
    ball->add_option("--graph", ball_graph)->required();
    ball->add_option("--origin", ball_origin)->required();
    ball->add_option("--rmax", ball_rmax)->required();
    ball->add_flag("--exclude-origin", ball_excl);
    ball->add_option("--out", ball_out);

    // degree
    auto* deg = app.add_subcommand("degree", "degree distribution and degree dimension");
    std::string deg_graph, deg_out;
    bool deg_loglog = false;
    deg->add_option("--graph", deg_graph)->required();
    deg->add_flag("--loglog", deg_loglog, "emit log(k),log(N(k)) rows");
    deg->add_option("--out", deg_out);

    // dimension
    auto* dim = app.add_subcommand("dimension", "randomized-origin ensemble dimension profile");
    std::string dim_graph, dim_out;
    std::uint64_t dim_samples = 0, dim_seed = 0;
    int dim_rmax = 0;
    bool dim_excl = false, dim_giant = false;
    dim->add_option("--graph", dim_graph)->required();
    dim->add_option("--samples", dim_samples)->required();
    dim->add_option("--rmax", dim_rmax)->required();
    dim->add_option("--seed", dim_seed)->required();
    dim->add_flag("--exclude-origin", dim_excl);
    dim->add_flag("--giant-only", dim_giant);
    dim->add_option("--out", dim_out);

    // calibrate
    auto* cal = app.add_subcommand("calibrate", "hypercube calibration table");
    std::string cal_dims_str, cal_out;
    int cal_side = 20, cal_rmax = 20;
    std::uint64_t cal_samples = 50, cal_seed = 0;
    cal->add_option("--dims", cal_dims_str, "comma-separated dimensions")->required();
    cal->add_option("--side", cal_side)->capture_default_str();
    cal->add_option("--rmax", cal_rmax)->capture_default_str();
    cal->add_option("--samples", cal_samples)->capture_default_str();
    cal->add_option("--seed", cal_seed)->required();
    cal->add_option("--out", cal_out);

    // ingest-itdk
    auto* ing = app.add_subcommand("ingest-itdk", "build device or AS channel from ITDK files");
    std::string ing_nodes, ing_links, ing_as, ing_channel, ing_out, ing_names;
    ing->add_option("--nodes", ing_nodes)->required();
    ing->add_option("--links", ing_links)->required();
    ing->add_option("--node-as", ing_as);
    ing->add_option("--channel", ing_channel)->required()->check(CLI::IsMember({"device", "as"}));
    ing->add_option("--out", ing_out)->required();
    ing->add_option("--names", ing_names, "write id->name sidecar");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (*gen) {
            graphdim::LatticeSpec spec{gen_dim, gen_side};
            graphdim::Graph g = graphdim::generate_hypercube(spec);
            graphdim::save_graph(g, gen_out);
            note("wrote " + std::to_string(g.node_count()) + " nodes, " +
                 std::to_string(g.edge_count()) + " edges to " + gen_out);
        } else if (*val) {
            graphdim::Graph g = load_with_warnings(val_graph);
            graphdim::LatticeReport rep = graphdim::validate_lattice(g, {val_dim, val_side});
            std::cout << "nodes: " << rep.actual_nodes << " (expected " << rep.expected_nodes << ") "
                      << (rep.node_count_ok ? "ok" : "MISMATCH") << '\n';
            std::cout << "edges: " << rep.actual_edges << " (expected " << rep.expected_edges << ") "
                      << (rep.edge_count_ok ? "ok" : "MISMATCH") << '\n';
            std::cout << "degrees: " << (rep.degrees_ok ? "ok" : "MISMATCH") << '\n';
            if (!rep.ok()) {
                std::cout << rep.details;
                return 1;
            }
        } else if (*ball) {
            graphdim::Graph g = load_with_warnings(ball_graph);
            graphdim::BallProfile p =
                graphdim::ball_profile(g, static_cast<graphdim::NodeId>(ball_origin), ball_rmax, !ball_excl);
            Output o;
            o.open(ball_out);
            echo_header(o.out(), "ball",
                        {{"graph", ball_graph},
                         {"origin", std::to_string(ball_origin)},
                         {"rmax", std::to_string(ball_rmax)},
                         {"include_origin", ball_excl ? "false" : "true"}});
            o.out() << "R,N\n";
            for (int r = 0; r <= p.r_max; ++r) o.out() << r << ',' << p.at(r) << '\n';
        } else if (*deg) {
            graphdim::Graph g = load_with_warnings(deg_graph);
            graphdim::DegreeDistribution d = graphdim::degree_distribution(g);
            Output o;
            o.open(deg_out);
            echo_header(o.out(), "degree",
                        {{"graph", deg_graph}, {"loglog", deg_loglog ? "true" : "false"}});
            if (deg_loglog) {
                o.out() << "log_k,log_Nk\n";
                for (const auto& [k, nk] : d.histogram)
                    if (k > 0)
                        o.out() << fmt(std::log(static_cast<double>(k))) << ','
                                << fmt(std::log(static_cast<double>(nk))) << '\n';
            } else {
                o.out() << "k,Nk\n";
                for (const auto& [k, nk] : d.histogram) o.out() << k << ',' << nk << '\n';
            }
            o.out() << "# mean_degree=" << fmt(d.mean_degree)
                    << " degree_dimension=" << fmt(d.degree_dimension) << '\n';
        } else if (*dim) {
            graphdim::Graph g = load_with_warnings(dim_graph);
            graphdim::EnsembleSpec spec;
            spec.sample_count = dim_samples;
            spec.r_max = dim_rmax;
            spec.seed = dim_seed;
            spec.include_origin = !dim_excl;
            spec.origin_filter = dim_giant ? graphdim::OriginFilter::GiantComponentOnly
                                           : graphdim::OriginFilter::AllNodes;
            graphdim::EnsembleStats stats = graphdim::run_ensemble(g, spec, threads);
            Output o;
            o.open(dim_out);
            echo_header(o.out(), "dimension",
                        {{"graph", dim_graph},
                         {"samples", std::to_string(dim_samples)},
                         {"rmax", std::to_string(dim_rmax)},
                         {"seed", std::to_string(dim_seed)},
                         {"include_origin", dim_excl ? "false" : "true"},
                         {"origin_filter", dim_giant ? "giant" : "all"}});
            o.out() << "R,mean_raw,mean_calibrated,std,min,max\n";
            for (const auto& rs : stats.per_radius)
                o.out() << rs.radius << ',' << fmt(rs.mean_raw) << ',' << fmt(rs.mean_calibrated) << ','
                        << fmt(rs.std_calibrated) << ',' << fmt(rs.min_calibrated) << ','
                        << fmt(rs.max_calibrated) << '\n';
            graphdim::ConfinementReport rep = graphdim::confinement_report(stats);
            o.out() << "# confinement: confined_fraction=" << fmt(rep.confined_fraction);
            if (rep.mean_confinement_radius)
                o.out() << " mean_radius=" << fmt(*rep.mean_confinement_radius);
            if (rep.max_confinement_radius) o.out() << " max_radius=" << *rep.max_confinement_radius;
            o.out() << '\n';
            o.out() << "# peak: R=" << stats.peak_radius
                    << " mean_calibrated=" << fmt(stats.peak_mean_calibrated) << '\n';
            for (const auto& rs : rep.decay)
                o.out() << "# decay: R=" << rs.radius << " mean_calibrated=" << fmt(rs.mean_calibrated)
                        << '\n';
        } else if (*cal) {
            std::vector<int> dims;
            {
                std::stringstream ss(cal_dims_str);
                std::string tok;
                while (std::getline(ss, tok, ',')) dims.push_back(std::stoi(tok));
                if (dims.empty()) throw CLI::ValidationError("--dims", "no dimensions given");
            }
            graphdim::EnsembleSpec spec;
            spec.sample_count = cal_samples;
            spec.r_max = cal_rmax;
            spec.seed = cal_seed;
            auto rows = graphdim::calibration_suite(dims, cal_side, spec, threads);
            Output o;
            o.open(cal_out);
            echo_header(o.out(), "calibrate",
                        {{"dims", cal_dims_str},
                         {"side", std::to_string(cal_side)},
                         {"rmax", std::to_string(cal_rmax)},
                         {"samples", std::to_string(cal_samples)},
                         {"seed", std::to_string(cal_seed)}});
            o.out() << "dim,mean_calibrated,std,max_mean_calibrated,peak_R\n";
            for (const auto& row : rows)
                o.out() << row.dim << ',' << fmt(row.mean_at_rmax) << ',' << fmt(row.std_at_rmax) << ','
                        << fmt(row.max_over_radius) << ',' << row.peak_radius << '\n';
        } else if (*ing) {
            graphdim::ItdkBundle bundle = graphdim::parse_itdk({ing_nodes, ing_links, ing_as});
            if (bundle.conflicting_as_assignments)
                note("warning: " + std::to_string(bundle.conflicting_as_assignments) +
                     " conflicting AS assignments (first wins)");
            graphdim::Graph device = graphdim::build_device_graph(bundle);
            if (ing_channel == "device") {
                graphdim::save_graph(device, ing_out);
                if (!ing_names.empty()) {
                    std::ofstream nf(ing_names, std::ios::binary);
                    graphdim::save_names(device, nf);
                }
                note("device channel: " + std::to_string(device.node_count()) + " nodes, " +
                     std::to_string(device.edge_count()) + " edges");
            } else {
                graphdim::AsGraphResult as = graphdim::build_as_graph(bundle, device);
                graphdim::save_graph(as.graph, ing_out);
                if (!ing_names.empty()) {
                    std::ofstream nf(ing_names, std::ios::binary);
                    graphdim::save_names(as.graph, nf);
                }
                note("AS channel: " + std::to_string(as.graph.node_count()) + " nodes, " +
                     std::to_string(as.graph.edge_count()) + " edges; excluded " +
                     std::to_string(as.excluded_devices) + " unassigned devices");
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
