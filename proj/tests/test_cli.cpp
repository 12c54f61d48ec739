// End-to-end checks of the command-line binary. The test runner passes the
// binary location through the DPLAB_BIN environment variable; without it
// these cases emit a warning and pass vacuously.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

namespace fs = std::filesystem;

const char* cli_path() { return std::getenv("DPLAB_BIN"); }

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    const fs::path out = fs::temp_directory_path() / "dplab_cli_out.txt";
    const std::string cmd = std::string(cli_path()) + " " + args + " > " +
                            out.string() + " 2>&1";
    const int raw = std::system(cmd.c_str());
    std::ifstream in(out);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return {WEXITSTATUS(raw), buffer.str()};
}

fs::path scratch(const std::string& name) {
    return fs::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("command line round trips generate, inspect, verify") {
    if (!cli_path()) {
        MESSAGE("DPLAB_BIN not set; skipping CLI tests");
        return;
    }

    const auto instance = scratch("cli_interval.json");

    SUBCASE("gen followed by verify exits zero") {
        auto gen = run("gen interval --eps 0.04 --m 41 -o " + instance.string());
        CHECK(gen.exit_code == 0);
        auto verify = run("verify " + instance.string());
        CHECK(verify.exit_code == 0);
        CHECK(verify.output.find("all certificates pass") != std::string::npos);
    }

    SUBCASE("eps and dist report the expected values") {
        run("gen interval --eps 0.04 --m 41 -o " + instance.string());
        auto eps = run("eps " + instance.string());
        CHECK(eps.exit_code == 0);
        CHECK(eps.output.find("eps = 0.04") != std::string::npos);
        auto dist = run("dist " + instance.string() + " --witness");
        CHECK(dist.exit_code == 0);
        CHECK(dist.output.find("dist = 0.4") != std::string::npos);
    }

    SUBCASE("tampered expectations fail verification with exit 1") {
        run("gen recero --n 3 --eps 0.1 --m 2 -o " + instance.string());
        std::ifstream in(instance);
        std::stringstream buffer;
        buffer << in.rdbuf();
        std::string text = buffer.str();
        const auto pos = text.find("\"expected_eps\":");
        REQUIRE(pos != std::string::npos);
        text.replace(pos, std::string("\"expected_eps\":").size(), "\"expected_eps\": 0.9, \"x\":");
        const auto tampered = scratch("cli_tampered.json");
        std::ofstream(tampered) << text;
        auto verify = run("verify " + tampered.string());
        CHECK(verify.exit_code == 1);
        CHECK(verify.output.find("[fail]") != std::string::npos);
    }

    SUBCASE("catalog verification passes end to end") {
        auto verify = run("verify --all-generators");
        CHECK(verify.exit_code == 0);
        CHECK(verify.output.find("all certificates pass") != std::string::npos);
    }

    SUBCASE("a row beyond the enumeration threshold exits with the usage code") {
        const auto big = scratch("cli_big.json");
        std::ostringstream text;
        text << "{\"x_points\": [";
        for (int i = 0; i < 25; ++i) text << (i ? "," : "") << "\"p" << i << "\"";
        text << "], \"y_graph\": {\"vertices\": [\"y\"], \"edges\": []}, \"rows\": [[";
        for (int i = 0; i < 25; ++i) text << (i ? "," : "") << "0.04";
        text << "]]}";
        std::ofstream(big) << text.str();
        auto eps = run("eps " + big.string());
        CHECK(eps.exit_code == 2);
        CHECK(eps.output.find("enumeration threshold") != std::string::npos);
    }

    SUBCASE("malformed input exits with the usage code") {
        const auto garbage = scratch("cli_garbage.json");
        std::ofstream(garbage) << "{not json";
        CHECK(run("eps " + garbage.string()).exit_code == 2);
        CHECK(run("gen interval --eps 0.3 --m 41 -o " + instance.string()).exit_code == 2);
        CHECK(run("gen interval -o " + instance.string()).exit_code == 2);
        CHECK(run("search --card-x 3 --y-vertices 1 --eps 0.1 --budget 10 -o x.json")
                  .exit_code == 2);  // seed is mandatory
        CHECK(run("search --card-x 3 --y-vertices 1 --eps 0.1 --budget 0 --seed 1")
                  .exit_code == 2);
    }

    SUBCASE("bounds emits the documented CSV header and rz flag") {
        auto bounds = run("bounds --eps-grid 0.01:0.24:0.01 --card 3");
        CHECK(bounds.exit_code == 0);
        CHECK(bounds.output.rfind("eps,o_X,o_prime_X,two_sqrt_eps,r17,applicable_rz\n", 0) == 0);
        int lines = 0;
        for (char c : bounds.output)
            if (c == '\n') ++lines;
        CHECK(lines == 25);  // header + 24 grid rows
        auto edge = run("bounds --eps-grid 0.12:0.12:0.01 --card 3");  // 0.12 >= 2/17
        CHECK(edge.output.find(",0\n") != std::string::npos);
    }

    SUBCASE("search writes a re-verifiable instance and a trace") {
        const auto best = scratch("cli_best.json");
        const auto trace = scratch("cli_trace.csv");
        auto search = run("search --card-x 2 --y-vertices 1 --eps 0.09 --budget 3000 "
                          "--seed 11 -o " + best.string() + " --trace " + trace.string());
        CHECK(search.exit_code == 0);
        CHECK(run("verify " + best.string()).exit_code == 0);
        std::ifstream tin(trace);
        std::string header;
        std::getline(tin, header);
        CHECK(header == "restart,evaluation,dist,eps");
    }

    SUBCASE("scaled generation composes from a base file") {
        run("gen tripod-weighted --n 1 --m 4 -o " + instance.string());
        const auto scaled = scratch("cli_scaled.json");
        auto gen = run("gen scaled --base " + instance.string() + " --eps 0.05 -o " +
                       scaled.string());
        CHECK(gen.exit_code == 0);
        auto eps = run("eps " + scaled.string());
        CHECK(eps.output.find("eps = 0.05") != std::string::npos);
        auto verify = run("verify " + scaled.string());
        CHECK(verify.exit_code == 0);
    }
}
