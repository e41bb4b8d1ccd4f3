#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "fixtures.hpp"
#include "tempo/temporal_graph.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(TG_BINARY) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) r.output += buf.data();
    int status = pclose(pipe);
    r.exit_code = WEXITSTATUS(status);
    return r;
}

std::string write_example(const std::string& name) {
    std::string path = "/tmp/tempo_cli_" + name + ".tg";
    std::ofstream out(path);
    tempo::serialize_temporal_graph(fixtures::example_graph(), out);
    return path;
}

} // namespace

TEST_CASE("cli info", "[cli]") {
    auto path = write_example("info");
    auto r = run("info " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("n=6 tau=3 m=14") != std::string::npos);

    SECTION("empty graph file") {
        std::ofstream out("/tmp/tempo_cli_empty.tg");
        out << "1 1\n";
        out.close();
        auto r2 = run("info /tmp/tempo_cli_empty.tg");
        CHECK(r2.exit_code == 0);
        CHECK(r2.output.find("n=1 tau=1 m=0") != std::string::npos);
    }
    SECTION("malformed file exits 3 with a line number") {
        std::ofstream out("/tmp/tempo_cli_bad.tg");
        out << "2 2\n0 1 1\n0 1 1\n";
        out.close();
        auto r2 = run("info /tmp/tempo_cli_bad.tg");
        CHECK(r2.exit_code == 3);
        CHECK(r2.output.find("line 3") != std::string::npos);
    }
}

TEST_CASE("cli params", "[cli]") {
    auto path = write_example("params");
    auto r = run("params " + path + " --exact");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("tw_inf 2 (exact)") != std::string::npos);
    CHECK(r.output.find("tw_down 2 (exact)") != std::string::npos);
    CHECK(r.output.find("ttw") != std::string::npos);

    auto rh = run("params " + path + " --heuristic --delta 1");
    CHECK(rh.exit_code == 0);
    CHECK(rh.output.find("(heuristic)") != std::string::npos);

    SECTION("heuristic mode handles graphs past the exact budget") {
        auto gen = run("gen random -n 40 --tau 3 -p 0.15 --seed 4 -o /tmp/tempo_cli_wide.tg");
        REQUIRE(gen.exit_code == 0);
        auto rw = run("params /tmp/tempo_cli_wide.tg --heuristic");
        CHECK(rw.exit_code == 0);
        CHECK(rw.output.find("ttw") != std::string::npos);
    }
}

TEST_CASE("cli solve envelope", "[cli]") {
    std::ofstream out("/tmp/tempo_cli_sep.tg");
    out << "4 2\n0 1 1\n1 3 2\n0 2 1\n2 3 2\n";
    out.close();
    auto r = run("solve separation /tmp/tempo_cli_sep.tg -s 0 -z 3 -k 2 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"status\": \"feasible\"") != std::string::npos);
    CHECK(r.output.find("\"value\": 2") != std::string::npos);

    SECTION("oracle flag agrees") {
        auto r2 = run("solve separation /tmp/tempo_cli_sep.tg -s 0 -z 3 -k 2 --oracle --format json");
        CHECK(r2.exit_code == 0);
        CHECK(r2.output.find("\"status\": \"feasible\"") != std::string::npos);
    }
    SECTION("infeasible still exits 0") {
        auto r2 = run("solve separation /tmp/tempo_cli_sep.tg -s 0 -z 3 -k 1 --format json");
        CHECK(r2.exit_code == 0);
        CHECK(r2.output.find("\"status\": \"infeasible\"") != std::string::npos);
    }
    SECTION("unknown problem exits 2") {
        auto r2 = run("solve frobnicate /tmp/tempo_cli_sep.tg");
        CHECK(r2.exit_code == 2);
    }
    SECTION("matching with delta 0 returns all edges") {
        auto path = write_example("match");
        auto r2 = run("solve matching " + path + " --delta 0 --format json");
        CHECK(r2.exit_code == 0);
        CHECK(r2.output.find("\"value\": 14") != std::string::npos);
    }
}

TEST_CASE("cli gen determinism and sidecar", "[cli]") {
    auto a = run("gen random -n 5 --tau 3 -p 0.5 --seed 9 -o -");
    auto b = run("gen random -n 5 --tau 3 -p 0.5 --seed 9 -o -");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);

    auto sat = run("gen sat --formula \"1 -2 / 2\" -o /tmp/tempo_cli_sat.tg --sidecar "
                   "/tmp/tempo_cli_sat.json");
    CHECK(sat.exit_code == 0);
    std::ifstream in("/tmp/tempo_cli_sat.tg");
    REQUIRE(in.good());
    auto g = tempo::parse_temporal_graph(in);
    CHECK(g.num_vertices() == 5); // center + 2 vars + 2 clauses
    std::ifstream side("/tmp/tempo_cli_sat.json");
    std::string sidecar((std::istreambuf_iterator<char>(side)), std::istreambuf_iterator<char>());
    CHECK(sidecar.find("clause_windows") != std::string::npos);
}

TEST_CASE("cli tdc and validate round trip", "[cli]") {
    auto path = write_example("tdc");
    auto r = run("tdc " + path + " -o /tmp/tempo_cli_out.td");
    CHECK(r.exit_code == 0);
    auto v = run("validate " + path + " --td /tmp/tempo_cli_out.td");
    CHECK(v.exit_code == 0);
    CHECK(v.output.find("valid width=2") != std::string::npos);

    SECTION("usage error without a decomposition") {
        auto r2 = run("validate " + path);
        CHECK(r2.exit_code == 2);
    }
}

TEST_CASE("cli exploration solve", "[cli]") {
    std::ofstream out("/tmp/tempo_cli_exp.tg");
    out << "2 2\n0 1 1\n0 1 2\n";
    out.close();
    auto r = run("solve explore /tmp/tempo_cli_exp.tg -s 0 --return-to-base --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"status\": \"feasible\"") != std::string::npos);
}

TEST_CASE("cli reach and foremost", "[cli]") {
    std::ofstream out("/tmp/tempo_cli_walk.tg");
    out << "3 9\n0 1 3\n1 2 5\n0 2 9\n";
    out.close();
    SECTION("foremost emits the walk line format") {
        auto r = run("solve foremost /tmp/tempo_cli_walk.tg -s 0 -z 2");
        CHECK(r.exit_code == 0);
        CHECK(r.output.find("0 -(3)- 1 -(5)- 2") != std::string::npos);
        CHECK(r.output.find("value: 5") != std::string::npos);
    }
    SECTION("foremost json envelope parses and carries the arrival") {
        auto r = run("solve foremost /tmp/tempo_cli_walk.tg -s 0 -z 2 --format json");
        CHECK(r.exit_code == 0);
        auto doc = nlohmann::json::parse(r.output);
        CHECK(doc["status"] == "feasible");
        CHECK(doc["value"] == 5);
        CHECK(doc["witness"]["arrival"] == 5);
        CHECK(doc["witness"]["edges"].size() == 2);
    }
    SECTION("reach lists the reachable set") {
        auto r = run("solve reach /tmp/tempo_cli_walk.tg -s 0 --strict --format json");
        CHECK(r.exit_code == 0);
        auto doc = nlohmann::json::parse(r.output);
        CHECK(doc["value"] == 3);
    }
}

TEST_CASE("cli budget exit code", "[cli]") {
    auto gen = run("gen random -n 30 --tau 2 -p 0.4 --seed 3 -o /tmp/tempo_cli_big.tg");
    REQUIRE(gen.exit_code == 0);
    auto r = run("tdc /tmp/tempo_cli_big.tg --budget-n 25");
    CHECK(r.exit_code == 4);
    CHECK(r.output.find("budget") != std::string::npos);
}

TEST_CASE("cli strictness flags are mutually exclusive", "[cli]") {
    auto path = write_example("flags");
    auto r = run("solve separation " + path + " -s 0 -z 5 --strict --nonstrict");
    CHECK(r.exit_code == 2);
}
