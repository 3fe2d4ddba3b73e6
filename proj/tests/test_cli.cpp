#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

#include "support/dot_validator.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

// Runs the tool under test through the shell and captures one stream.
RunResult run(const std::string& args) {
    const char* bin = std::getenv("GROUPLAB_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "GROUPLAB_BIN must point at the built binary");
    std::string cmd = std::string("\"") + bin + "\" " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// Same, but captures standard error instead of standard output.
RunResult run_stderr(const std::string& args) { return run(args + " 2>&1 1>/dev/null"); }

int line_count(const std::string& s) {
    int lines = 0;
    for (char c : s)
        if (c == '\n') ++lines;
    return lines;
}

}  // namespace

TEST_CASE("construct emits a schema-1 document") {
    RunResult r = run("construct Q8 --format json 2>/dev/null");
    CHECK(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["name"] == "Q8");
    CHECK(doc["order"] == 8);
    CHECK(doc["table"].size() == 8);
    CHECK(doc["provenance"] == "Q8");
}

TEST_CASE("construct output is byte deterministic") {
    RunResult a = run("construct DQ8 --format json 2>/dev/null");
    RunResult b = run("construct DQ8 --format json 2>/dev/null");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("semidihedral lattice drawing carries 15 nodes") {
    RunResult r = run("construct SD8 --format dot-lattice 2>/dev/null");
    CHECK(r.code == 0);
    auto sum = dot_validator::inspect(r.out);
    INFO(sum.error);
    CHECK(sum.ok);
    CHECK(sum.directed);
    CHECK(sum.node_count == 15);
}

TEST_CASE("trivial cycle graph is a single vertex without edges") {
    RunResult r = run("construct C1 --format dot-cycle 2>/dev/null");
    CHECK(r.code == 0);
    auto sum = dot_validator::inspect(r.out);
    CHECK(sum.ok);
    CHECK_FALSE(sum.directed);
    CHECK(sum.node_count == 1);
    CHECK(sum.edge_count == 0);
}

TEST_CASE("cayley drawing renders the order-2 generator undirected") {
    RunResult r = run("construct D6 --format dot-cayley 2>/dev/null");
    CHECK(r.code == 0);
    auto sum = dot_validator::inspect(r.out);
    INFO(sum.error);
    CHECK(sum.ok);
    CHECK(sum.directed);
    CHECK(sum.node_count == 12);
    CHECK(sum.undirected_edge_count == 6);   // one edge per reflection pair
    CHECK(sum.edge_count == 18);             // 12 rotation arrows plus 6 flips
}

TEST_CASE("parse failures exit 2 with a one-line diagnostic") {
    for (const char* args : {"construct zork", "construct", "frobnicate",
                             "construct Q8 --format bogus", "compare Q8 D4 --mode bogus",
                             "verify --claim no-such-claim"}) {
        INFO(args);
        RunResult r = run_stderr(args);
        CHECK(r.code == 2);
        CHECK(line_count(r.out) == 1);
        CHECK(r.out.find("error") != std::string::npos);
    }
}

TEST_CASE("parameter violations exit 3 with a one-line diagnostic") {
    for (const char* args : {"construct Q12", "construct Dic7", "construct sdp:8:2",
                             "construct C0", "construct C300", "analyze DQ12"}) {
        INFO(args);
        RunResult r = run_stderr(args);
        CHECK(r.code == 3);
        CHECK(line_count(r.out) == 1);
        CHECK(r.out.rfind("error:", 0) == 0);
    }
}

TEST_CASE("compare separates lattice equality from group isomorphism") {
    RunResult same = run("compare C8xC2 SA8 --mode lattice 2>/dev/null");
    CHECK(same.code == 0);
    json j = json::parse(same.out);
    CHECK(j["equivalent"] == true);
    CHECK(j["witness"]["kind"] == "subgroup-node-bijection");
    CHECK(j["witness"]["map"].size() == 11);

    RunResult differ = run("compare C8xC2 SA8 --mode iso 2>/dev/null");
    CHECK(differ.code == 1);
    json d = json::parse(differ.out);
    CHECK(d["equivalent"] == false);
    CHECK_FALSE(d.contains("witness"));
}

TEST_CASE("compare matches cycle graphs across nonisomorphic groups") {
    RunResult r = run("compare C4xC2xC2 DQ8 --mode cyclegraph 2>/dev/null");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["equivalent"] == true);
    CHECK(j["witness"]["kind"] == "vertex-bijection");
    CHECK(j["witness"]["map"].size() == 16);

    RunResult lat = run("compare C4xC2xC2 DQ8 --mode lattice 2>/dev/null");
    CHECK(lat.code == 1);
}

TEST_CASE("compare reports a verified self map") {
    RunResult r = run("compare Q8 Q8 --mode iso 2>/dev/null");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["witness"]["map"].size() == 8);
}

TEST_CASE("single-claim verify run") {
    RunResult r = run("verify --claim six-groups-order-32 2>/dev/null");
    CHECK(r.code == 0);
    CHECK(r.out.find("six-groups-order-32") != std::string::npos);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("1/1 claims passed") != std::string::npos);
}

TEST_CASE("verify table honors NO_COLOR and non-tty output") {
    RunResult piped = run("verify --claim family-orders 2>/dev/null");
    CHECK(piped.code == 0);
    CHECK(piped.out.find('\x1b') == std::string::npos);

    const char* bin = std::getenv("GROUPLAB_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string("NO_COLOR=1 \"") + bin +
                      "\" verify --claim family-orders 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(out.find('\x1b') == std::string::npos);
}

TEST_CASE("verify emits json on request") {
    RunResult r = run("verify --claim family-orders --format json 2>/dev/null");
    CHECK(r.code == 0);
    json arr = json::parse(r.out);
    CHECK(arr.is_array());
    CHECK(arr.size() == 1);
    CHECK(arr[0]["id"] == "family-orders");
    CHECK(arr[0]["pass"] == true);
}

TEST_CASE("full verification suite passes end to end") {
    RunResult r = run("verify --format json 2>/dev/null");
    CHECK(r.code == 0);
    json arr = json::parse(r.out);
    CHECK(arr.size() == 19);
    for (const json& e : arr) {
        INFO(e["id"].get<std::string>() << ": " << e["detail"].get<std::string>());
        CHECK(e["pass"] == true);
    }
}

TEST_CASE("output flag writes the same bytes to a file") {
    std::string path = "grouplab_cli_out.json";
    RunResult direct = run("construct Q8 --format json 2>/dev/null");
    RunResult to_file = run("construct Q8 --format json --output " + path + " 2>/dev/null");
    CHECK(direct.code == 0);
    CHECK(to_file.code == 0);
    CHECK(to_file.out.empty());
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == direct.out);
    std::remove(path.c_str());
}

TEST_CASE("analyze reports the headline subgroup counts") {
    RunResult r = run("analyze SA8 2>/dev/null");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["subgroup_count"] == 11);
    CHECK(j["normal_subgroup_count"] == 9);
    CHECK(j["lattice"]["unicorn_count"] == 7);
}
