#include "quickpath/engine.hpp"
#include "quickpath/network.hpp"
#include "quickpath/text_util.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#ifndef QP_CLI_PATH
#error "QP_CLI_PATH must point at the qp binary"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / "quickpath_cli_tests";
    fs::create_directories(dir);
    return dir;
}

RunResult run_cli(const std::string& args, const std::string& stem) {
    fs::path out_file = scratch_dir() / (stem + ".out");
    std::string cmd = std::string(QP_CLI_PATH) + " " + args + " > " + out_file.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult res;
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    std::stringstream buf;
    buf << in.rdbuf();
    res.out = buf.str();
    return res;
}

fs::path write_file(const std::string& name, const std::string& content) {
    fs::path p = scratch_dir() / name;
    std::ofstream out(p);
    out << content;
    return p;
}

std::string first_cost_line(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind("cost ", 0) == 0) return line.substr(5);
    return {};
}

} // namespace

TEST_CASE("solve prints the exact cost with full precision") {
    fs::path net = write_file("single.qpn", "qpn v1\nroad -10 0 30 0 0.6 directed\n");
    RunResult res = run_cli("solve " + net.string() + " --from 0,4 --to 20,4", "solve184");
    CHECK(res.exit_code == 0);
    CHECK(first_cost_line(res.out) == quickpath::format_real(18.4));
    CHECK(res.out.find("leg ride") != std::string::npos);

    fs::path empty = write_file("empty.qpn", "qpn v1\n");
    RunResult direct = run_cli("solve " + empty.string() + " --from 0,0 --to 3,4", "solve5");
    CHECK(direct.exit_code == 0);
    CHECK(first_cost_line(direct.out) == "5");
}

TEST_CASE("validate rejects crossing roads with exit 1") {
    fs::path bad = write_file("bad.qpn",
                              "qpn v1\nroad 0 0 10 0 0.5 directed\nroad 5 -5 5 5 0.5 directed\n");
    RunResult res = run_cli("validate " + bad.string(), "validate_bad");
    CHECK(res.exit_code == 1);
    CHECK(res.out.find("roads 0 and 1") != std::string::npos);

    fs::path good = write_file("good.qpn", "qpn v1\nroad 0 0 10 0 0.5 directed\n");
    RunResult ok = run_cli("validate " + good.string(), "validate_good");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.rfind("ok", 0) == 0);
}

TEST_CASE("parameter errors exit with code 2") {
    fs::path net = write_file("param.qpn", "qpn v1\nroad 0 0 10 0 0.5 directed\n");
    fs::path out = scratch_dir() / "param.qpx";
    RunResult res = run_cli("build-index " + net.string() + " --mode fixed --to 1,1 --eps 1.5 --out " +
                                out.string(),
                            "eps_too_big");
    CHECK(res.exit_code == 2);

    RunResult missing = run_cli("build-index " + net.string() + " --mode wspd --eps 0.5 --out " +
                                    out.string(),
                                "wspd_no_tau");
    CHECK(missing.exit_code == 2);

    RunResult unknown = run_cli("frobnicate", "unknown_cmd");
    CHECK(unknown.exit_code == 2);
}

TEST_CASE("build-index then query matches the in-process answer bit for bit") {
    fs::path net = write_file("roundtrip.qpn",
                              "qpn v1\n"
                              "road 2 1 30 3 0.4 directed\n"
                              "road 5 20 35 22 0.7 undirected\n");
    fs::path index = scratch_dir() / "roundtrip.qpx";
    RunResult build = run_cli("build-index " + net.string() +
                                  " --mode fixed --to 33,20 --eps 0.5 --out " + index.string(),
                              "build_fixed");
    REQUIRE(build.exit_code == 0);

    RunResult q1 = run_cli("query " + index.string() + " --from 1,2", "query1");
    RunResult q2 = run_cli("query " + index.string() + " --from 1,2", "query2");
    CHECK(q1.exit_code == 0);
    CHECK(q1.out == q2.out); // repeated runs are bit-identical

    quickpath::Network parsed = quickpath::load_network_file(net.string());
    // The CLI answer equals the library answer formatted the same way.
    auto built = quickpath::build_fixed(parsed, {33, 20}, 0.5);
    auto ans = quickpath::query_fixed(built, {1, 2});
    CHECK(first_cost_line(q1.out) == quickpath::format_real(ans.cost));
}

TEST_CASE("export-path writes a CSV polyline") {
    fs::path net = write_file("export.qpn", "qpn v1\nroad -10 0 30 0 0.6 directed\n");
    fs::path csv = scratch_dir() / "path.csv";
    RunResult res = run_cli("export-path " + net.string() + " --from 0,4 --to 20,4 --out " +
                                csv.string(),
                            "export");
    CHECK(res.exit_code == 0);
    std::ifstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "x,y,kind");
    int rows = 0;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 4); // start + three legs
}

TEST_CASE("bench emits CSV with a header") {
    RunResult res = run_cli("bench --sizes 3,5 --trials 1 --seed 9", "bench");
    CHECK(res.exit_code == 0);
    CHECK(res.out.rfind("n,trial,vertices,edges,build_ms,solve_ms,cost\n", 0) == 0);
    int lines = 0;
    for (char c : res.out)
        if (c == '\n') ++lines;
    CHECK(lines == 3); // header + one row per size
}

TEST_CASE("oracle subcommand reports a cost") {
    fs::path net = write_file("oracle.qpn", "qpn v1\nroad -10 0 30 0 0.6 directed\n");
    RunResult res = run_cli("oracle " + net.string() + " --from 0,4 --to 20,4 --samples 201",
                            "oracle");
    CHECK(res.exit_code == 0);
    double cost = quickpath::parse_real(first_cost_line(res.out), "cost");
    CHECK(cost >= 18.4 - 1e-9);
    CHECK(cost <= 18.6);
}
