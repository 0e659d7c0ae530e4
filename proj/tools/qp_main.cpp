#include "quickpath/engine.hpp"
#include "quickpath/index_io.hpp"
#include "quickpath/instance_gen.hpp"
#include "quickpath/oracle.hpp"
#include "quickpath/text_util.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

namespace {

using namespace quickpath;

Point parse_point_flag(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("expected 'x,y', got '" + text + "'");
    return {parse_real(text.substr(0, comma), "x"), parse_real(text.substr(comma + 1), "y")};
}

void print_legs(const QuickestPath& qp) {
    for (const auto& leg : qp.legs) {
        std::cout << "leg " << (leg.kind == LegKind::ride ? "ride" : "walk") << " "
                  << format_real(leg.from.x) << " " << format_real(leg.from.y) << " "
                  << format_real(leg.to.x) << " " << format_real(leg.to.y) << " "
                  << format_real(leg.cost);
        if (leg.kind == LegKind::ride) std::cout << " road " << leg.road;
        std::cout << "\n";
    }
}

const char* kind_name(CandidateKind k) {
    switch (k) {
        case CandidateKind::type1: return "type1";
        case CandidateKind::type2: return "type2";
        default: return "direct";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"quickest-path queries on planar transportation networks"};
    app.require_subcommand(1);

    std::string net_path, index_path, out_path;
    std::string from_text, to_text, mode_text = "fixed";
    int samples = 400;
    double eps = 0.5, tau = 0.0;
    std::string sizes_text = "5,10,20,40";
    int trials = 1;
    std::uint64_t seed = 1;

    auto* validate_cmd = app.add_subcommand("validate", "check a network file");
    validate_cmd->add_option("network", net_path)->required();

    auto* solve_cmd = app.add_subcommand("solve", "exact quickest path");
    solve_cmd->add_option("network", net_path)->required();
    solve_cmd->add_option("--from", from_text)->required();
    solve_cmd->add_option("--to", to_text)->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force discretization cost");
    oracle_cmd->add_option("network", net_path)->required();
    oracle_cmd->add_option("--from", from_text)->required();
    oracle_cmd->add_option("--to", to_text)->required();
    oracle_cmd->add_option("--samples", samples);

    auto* build_cmd = app.add_subcommand("build-index", "preprocess a query index");
    build_cmd->add_option("network", net_path)->required();
    build_cmd->add_option("--mode", mode_text)->check(CLI::IsMember({"fixed", "apsp", "wspd"}));
    build_cmd->add_option("--to", to_text);
    build_cmd->add_option("--eps", eps)->required();
    build_cmd->add_option("--tau", tau);
    build_cmd->add_option("--out", out_path)->required();

    auto* query_cmd = app.add_subcommand("query", "query a persisted index");
    query_cmd->add_option("index", index_path)->required();
    query_cmd->add_option("--from", from_text)->required();
    query_cmd->add_option("--to", to_text);

    auto* bench_cmd = app.add_subcommand("bench", "graph size and timing CSV");
    bench_cmd->add_option("--sizes", sizes_text);
    bench_cmd->add_option("--trials", trials);
    bench_cmd->add_option("--seed", seed);

    auto* export_cmd = app.add_subcommand("export-path", "write the path polyline as CSV");
    export_cmd->add_option("network", net_path)->required();
    export_cmd->add_option("--from", from_text)->required();
    export_cmd->add_option("--to", to_text)->required();
    export_cmd->add_option("--out", out_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (validate_cmd->parsed()) {
        Network net = load_network_file(net_path);
        std::cout << "ok roads " << net.roads.size() << " alpha_min "
                  << format_real(net.alpha_min) << " alpha_max " << format_real(net.alpha_max)
                  << "\n";
        return 0;
    }

    if (solve_cmd->parsed()) {
        Network net = load_network_file(net_path);
        QuickestPath qp = quickest_path(net, parse_point_flag(from_text), parse_point_flag(to_text));
        std::cout << "cost " << format_real(qp.cost) << "\n";
        print_legs(qp);
        return 0;
    }

    if (oracle_cmd->parsed()) {
        Network net = load_network_file(net_path);
        double cost = oracle_cost(net, parse_point_flag(from_text), parse_point_flag(to_text), samples);
        std::cout << "cost " << format_real(cost) << "\n";
        return 0;
    }

    if (build_cmd->parsed()) {
        Network net = load_network_file(net_path);
        if (mode_text == "fixed") {
            if (to_text.empty()) throw std::invalid_argument("fixed mode needs --to");
            FixedDestIndex index = build_fixed(net, parse_point_flag(to_text), eps);
            save_index_file(index, out_path);
            std::cout << "index written " << out_path << " mode fixed vertices "
                      << index.graph.vertex_count() << "\n";
        } else {
            TwoPointMode mode = mode_text == "apsp" ? TwoPointMode::exact_apsp : TwoPointMode::wspd;
            std::optional<double> tau_opt;
            if (mode == TwoPointMode::wspd) {
                if (tau <= 0.0) throw std::invalid_argument("wspd mode needs --tau in (0, 1)");
                tau_opt = tau;
            }
            TwoPointIndex index = build_two_point(net, eps, mode, tau_opt);
            save_index_file(index, out_path);
            std::cout << "index written " << out_path << " mode " << mode_text << " vertices "
                      << index.graph.vertex_count() << "\n";
        }
        return 0;
    }

    if (query_cmd->parsed()) {
        LoadedIndex loaded = load_index_file(index_path);
        Point from = parse_point_flag(from_text);
        if (std::holds_alternative<FixedDestIndex>(loaded)) {
            if (!to_text.empty())
                throw std::invalid_argument("fixed-destination index takes only --from");
            QueryAnswer ans = query_fixed(std::get<FixedDestIndex>(loaded), from);
            std::cout << "cost " << format_real(ans.cost) << "\n";
            std::cout << "kind " << kind_name(ans.kind_s) << "\n";
            if (ans.witness) print_legs(*ans.witness);
        } else {
            if (to_text.empty()) throw std::invalid_argument("two-point index needs --to");
            QueryAnswer ans = query_two_point(std::get<TwoPointIndex>(loaded), from,
                                              parse_point_flag(to_text));
            std::cout << "cost " << format_real(ans.cost) << "\n";
            std::cout << "kind " << kind_name(ans.kind_s) << " " << kind_name(ans.kind_t) << "\n";
        }
        return 0;
    }

    if (bench_cmd->parsed()) {
        std::cout << "n,trial,vertices,edges,build_ms,solve_ms,cost\n";
        std::string token;
        std::vector<int> sizes;
        std::istringstream ss(sizes_text);
        while (std::getline(ss, token, ','))
            sizes.push_back(static_cast<int>(parse_int(token, "size")));
        for (int n : sizes) {
            for (int trial = 0; trial < trials; ++trial) {
                InstanceParams params;
                params.roads = n;
                std::uint64_t instance_seed = seed + 1000003ull * static_cast<std::uint64_t>(trial) +
                                              static_cast<std::uint64_t>(n);
                Network net = random_network(instance_seed, params);
                std::mt19937_64 rng(instance_seed ^ 0x9e3779b97f4a7c15ull);
                auto [s, t] = random_query_pair(rng, params.box, 1.0);
                auto t0 = std::chrono::steady_clock::now();
                PathGraph g = build_graph(net, s, t);
                auto t1 = std::chrono::steady_clock::now();
                QuickestPath qp = quickest_path(net, s, t);
                auto t2 = std::chrono::steady_clock::now();
                auto ms = [](auto a, auto b) {
                    return std::chrono::duration<double, std::milli>(b - a).count();
                };
                std::cout << n << "," << trial << "," << g.vertex_count() << "," << g.edge_count
                          << "," << format_real(ms(t0, t1)) << "," << format_real(ms(t1, t2))
                          << "," << format_real(qp.cost) << "\n";
            }
        }
        return 0;
    }

    if (export_cmd->parsed()) {
        Network net = load_network_file(net_path);
        Point s = parse_point_flag(from_text);
        QuickestPath qp = quickest_path(net, s, parse_point_flag(to_text));
        std::ofstream out(out_path);
        if (!out) throw ParseError("cannot open output file: " + out_path);
        out << "x,y,kind\n";
        out << format_real(s.x) << "," << format_real(s.y) << ",start\n";
        for (const auto& leg : qp.legs)
            out << format_real(leg.to.x) << "," << format_real(leg.to.y) << ","
                << (leg.kind == LegKind::ride ? "ride" : "walk") << "\n";
        std::cout << "wrote " << out_path << " cost " << format_real(qp.cost) << "\n";
        return 0;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const quickpath::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const quickpath::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
