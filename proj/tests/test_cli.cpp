// End-to-end checks of the command line tool: output payloads, exit
// codes and byte-level determinism.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(P3HELIX_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("eval emits the catalog record") {
    const RunResult r = run("eval 1/9");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"index\": \"1/9\"") != std::string::npos);
    CHECK(r.out.find("\"9\",") != std::string::npos);
    CHECK(r.out.find("\"-2\",") != std::string::npos);
    CHECK(r.out.find("\"4/3\"") != std::string::npos);
    CHECK(r.out.find("\"conjectural\": true") != std::string::npos);
}

TEST_CASE("chi") {
    const RunResult r = run("chi \"(1,0,0,0)\" \"(1,3,9/2,9/2)\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "20\n");
}

TEST_CASE("perp") {
    const RunResult r =
        run(R"(perp '["1","0","0","0"]' '["1","1","1/2","1/6"]' '["1","2","2","4/3"]')");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "[\"3\",\"1\",\"-1/2\",\"1/6\"]\n");
}

TEST_CASE("mutate") {
    const std::string preferred =
        R"('[["1","-1","1/2","-1/6"],["1","0","0","0"],["1","1","1/2","1/6"],["1","2","2","4/3"]]')";
    const RunResult r = run("mutate " + preferred + " R1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[\"3\",\"1\",\"-1/2\",\"1/6\"]") != std::string::npos);
}

TEST_CASE("parents and resolve") {
    CHECK(run("parents 1/9").out == "{\"left\":\"0\",\"right\":\"1/3\"}\n");
    const RunResult res = run("resolve 1/3");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"multiplicity\": 4") != std::string::npos);
    CHECK(res.out.find("\"multiplicity\": 6") != std::string::npos);
}

TEST_CASE("table formats and determinism") {
    const RunResult a = run("table --max-order 2 --format csv");
    CHECK(a.exit_code == 0);
    CHECK(a.out.rfind("index,order,", 0) == 0);
    const RunResult b = run("table --max-order 2 --format csv");
    CHECK(a.out == b.out);
    CHECK(run("table --max-order 1 --format md").out.rfind("| index |", 0) == 0);
}

TEST_CASE("tree output") {
    const RunResult dot = run("tree --depth 1 --format dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.out.find("digraph") != std::string::npos);
    const RunResult js = run("tree --depth 1 --format json");
    CHECK(js.out.find("\"move\": \"root\"") != std::string::npos);
}

TEST_CASE("verify and audit succeed at small bounds") {
    const RunResult v = run("verify --max-order 2 --tree-depth 2");
    CHECK(v.exit_code == 0);
    CHECK(v.out.find("all checks passed") != std::string::npos);
    const RunResult vj = run("verify --max-order 1 --tree-depth 1 --format json");
    CHECK(vj.out.find("\"all_pass\": true") != std::string::npos);

    const RunResult a = run("audit");
    CHECK(a.exit_code == 0);
    CHECK(a.out.find("7/20") != std::string::npos);
}

TEST_CASE("p2 subcommands") {
    CHECK(run("p2 eval 1/4").out ==
          "{\"t\":\"1/4\",\"alpha\":\"2/5\",\"r\":\"5\",\"delta\":\"12/25\",\"chi\":\"6\"}\n");
    const RunResult d = run("p2 delta 0 --cutoff 0");
    CHECK(d.out.find("\"delta\":\"1\"") != std::string::npos);
    CHECK(d.out.find("\"certified\":true") != std::string::npos);
    const RunResult s = run("p2 stable 1 0 1 --cutoff 2");
    CHECK(s.out.find("\"verdict\":\"stable\"") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run("no-such-command").exit_code == 64);
    CHECK(run("eval").exit_code == 64);           // missing argument
    CHECK(run("eval 1/5").exit_code == 64);       // malformed index
    CHECK(run("resolve 0").exit_code == 2);       // valid index, no resolution
    CHECK(run(R"(perp '["1","0","0","0"]' '["1","0","0","0"]' '["1","1","1/2","1/6"]')")
              .exit_code == 2);                   // singular system
    CHECK(run("p2 stable 2 1/2 1/4").exit_code == 2);  // non-integral character
    CHECK(run("eval 1/9").exit_code == 0);
}
