#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_raw(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

RunResult run(const std::string& args) {
    return run_raw(std::string(PIERCE_CLI_PATH) + " " + args + " 2>/dev/null");
}

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content)
        : path("/tmp/pierce_cli_" + name) {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

const char* kSquare = R"({"id":"sq","points":[[0,0],[1,0],[1,1],[0,1]]})";
const char* kCollinear = R"({"id":"line","points":[[0,0],[1,0],[3,0]]})";

}  // namespace

TEST_CASE("verify on a file exits 0 and reports the verdict") {
    TempFile f("sq.json", kSquare);
    const RunResult res = run("verify --file " + f.path);
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"all_ok\":true") != std::string::npos);
}

TEST_CASE("verify over generated batches exits 0") {
    for (const char* gen : {"uniform-square", "gaussian", "clustered", "circle-boundary"}) {
        const RunResult res =
            run(std::string("verify --gen ") + gen + " --trials 40 --seed 5 --n-min 2 --n-max 40");
        CHECK(res.exit_code == 0);
    }
}

TEST_CASE("a hand-built violating tree drives exit code 1") {
    TempFile f("line.json", kCollinear);
    // Path 0-1-2: the disk of (0,1) has center (0.5,0) radius 0.5 but the
    // enclosing-circle center is (1.5,0).
    TempFile t("badtree.json", R"({"edges":[[0,1],[1,2]]})");
    const RunResult res = run("verify --file " + f.path + " --tree " + t.path);
    CHECK(res.exit_code == 1);
    CHECK(res.out.find("\"verdict\":false") != std::string::npos);
    CHECK(res.out.find("\"instance\"") != std::string::npos);  // offending instance dumped
}

TEST_CASE("input errors exit 2") {
    CHECK(run("verify --file /nope/missing.json").exit_code == 2);
    TempFile dup("dup.json", R"({"points":[[0,0],[0,0]]})");
    CHECK(run("verify --file " + dup.path).exit_code == 2);
    TempFile bad("bad.json", R"({"points":[[0,0],["a",1]]})");
    CHECK(run("verify --file " + bad.path).exit_code == 2);
    CHECK(run("verify --gen no-such-generator --trials 1").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    TempFile sq("sq2.json", kSquare);
    CHECK(run("matching --file " + sq.path + " --seed oops").exit_code == 2);
}

TEST_CASE("identical seeds give byte-identical verify output") {
    const std::string args = "verify --gen clustered --trials 25 --seed 99 --n-min 2 --n-max 32";
    const RunResult a = run(args);
    const RunResult b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("PIERCE_SEED is the seed fallback") {
    const std::string args = "verify --gen gaussian --trials 5 --n-min 2 --n-max 12";
    const RunResult with_flag = run(args + " --seed 1234");
    const RunResult with_env = run_raw("PIERCE_SEED=1234 " + std::string(PIERCE_CLI_PATH) +
                                       " " + args + " 2>/dev/null");
    // Same stream either way.
    CHECK(with_env.out == with_flag.out);
}

TEST_CASE("ratio report is valid JSON and carries the optimal block") {
    TempFile f("sq3.json", kSquare);
    const RunResult res = run("ratio --file " + f.path + " --optimal");
    CHECK(res.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(res.out);
    CHECK(doc["id"] == "sq");
    CHECK(doc["ratio_at_center"].get<double>() == doctest::Approx(std::sqrt(2.0)));
    CHECK(doc["optimal"]["ratio"].get<double>() == doctest::Approx(1.0577).epsilon(1e-2));
    CHECK(doc["edges"].size() == 3);
}

TEST_CASE("matching report on the square picks the diagonals") {
    TempFile f("sq4.json", kSquare);
    const RunResult res = run("matching --file " + f.path);
    CHECK(res.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(res.out);
    CHECK(doc["matching"]["total_weight"].get<double>() ==
          doctest::Approx(2.0 * std::sqrt(2.0)));
    CHECK(doc["sqrt2_ok"].get<bool>());
    CHECK(doc["pierced_at_optimal"].get<bool>());

    TempFile odd("odd.json", kCollinear);
    CHECK(run("matching --file " + odd.path).exit_code == 2);
}

TEST_CASE("oracle cross-check passes on the square") {
    TempFile f("sq5.json", kSquare);
    const RunResult res = run("oracle --file " + f.path);
    CHECK(res.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(res.out);
    CHECK(doc["tree"]["match"].get<bool>());
    CHECK(doc["sec"]["match"].get<bool>());
}

TEST_CASE("render writes an SVG with the expected layers") {
    TempFile f("sq6.json", kSquare);
    const std::string out = "/tmp/pierce_cli_render.svg";
    const RunResult res =
        run("render --file " + f.path + " --out " + out + " --disks --ellipses 1.4142135624");
    CHECK(res.exit_code == 0);
    std::ifstream svg(out);
    REQUIRE(svg.good());
    std::string text((std::istreambuf_iterator<char>(svg)), std::istreambuf_iterator<char>());
    CHECK(text.find("<svg") != std::string::npos);
    CHECK(text.find("stroke=\"red\"") != std::string::npos);     // tree edges
    CHECK(text.find("steelblue") != std::string::npos);          // disks
    CHECK(text.find("<ellipse") != std::string::npos);           // ellipses
    std::remove(out.c_str());
}

TEST_CASE("search-lower-bound smoke run emits a 4-point witness") {
    const RunResult res = run("search-lower-bound --seed 11 --restarts 2 --budget 6000");
    CHECK(res.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(res.out);
    CHECK(doc["instance"]["points"].size() == 4);
    CHECK(doc["rho_star"].get<double>() >= 1.0);
    CHECK(doc["tree_edges"].size() == 3);
}
