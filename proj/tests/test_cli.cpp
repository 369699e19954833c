#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "windiso/io.hpp"

using namespace windiso;

namespace {

std::string binary() {
    const char* bin = std::getenv("WINDISO_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "WINDISO_BIN must point at the CLI binary");
    return bin;
}

int run(const std::string& args) {
    std::string cmd = binary() + " " + args;
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

std::string tmp_path(const char* name) {
    return "/tmp/windiso_cli_" + std::to_string(getpid()) + "_" + name;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

const char* kUnitSquare =
    R"({"version": 1, "vertices": [["0","0"],["1","0"],["1","1"],["0","1"]]})";

}  // namespace

TEST_CASE("gen reproduces the golden walk byte for byte") {
    std::string out = tmp_path("walk.json");
    CHECK(run("gen --family closed-random-walk --n 10 --seed 42 -o " + out + " >/dev/null 2>&1") ==
          0);
    std::string got = read_file(out);
    std::string want = read_file(std::string(GOLDEN_DIR) + "/walk_n10_seed42.json");
    CHECK(got == want);
    std::remove(out.c_str());
}

TEST_CASE("gen writes to stdout by default") {
    std::string out = tmp_path("eight.json");
    CHECK(run("gen --family figure-eight > " + out + " 2>/dev/null") == 0);
    ClosedCurve c = curve_from_json(read_file(out));
    CHECK(c.size() == 4);
    CHECK(c.signed_area() == Rational(0));
    std::remove(out.c_str());
}

TEST_CASE("gen rejects a non-coprime star stride") {
    CHECK(run("gen --family star --n 4 --step 2 >/dev/null 2>&1") == 2);
}

TEST_CASE("check accepts the unit square and writes a report") {
    std::string curve = tmp_path("square.json");
    std::string report = tmp_path("report.json");
    write_text(curve, kUnitSquare);
    CHECK(run("check " + curve + " --p 1 --q 1 -o " + report + " >/dev/null 2>&1") == 0);
    std::string doc = read_file(report);
    CHECK(doc.find("\"lhs\": \"1\"") != std::string::npos);
    CHECK(doc.find("\"pass\": true") != std::string::npos);
    std::remove(curve.c_str());
    std::remove(report.c_str());
}

TEST_CASE("check rejects out-of-range exponents as usage errors") {
    std::string curve = tmp_path("square2.json");
    write_text(curve, kUnitSquare);
    CHECK(run("check " + curve + " --p 1 --q 2.5 >/dev/null 2>&1") == 2);
    CHECK(run("check " + curve + " --p 2 --q 1 >/dev/null 2>&1") == 2);
    CHECK(run("check " + curve + " --p 1.5 --q 1.3 >/dev/null 2>&1") == 2);  // inside the guard
    std::remove(curve.c_str());
}

TEST_CASE("check fails cleanly on a missing curve file") {
    CHECK(run("check /tmp/windiso_no_such_curve.json --p 1 --q 1 >/dev/null 2>&1") == 2);
}

TEST_CASE("sweep over an empty corpus emits only the header") {
    std::string cfg = tmp_path("empty.json");
    std::string csv = tmp_path("empty.csv");
    write_text(cfg, R"({"families": [], "p_grid": [1.0], "q_count": 1, "guard": 0.05})");
    CHECK(run("sweep --config " + cfg + " -o " + csv + " >/dev/null 2>&1") == 0);
    CHECK(read_file(csv) == "family,n,seed,p,q,pvar,lhs,rhs,ratio,steps,pass\n");
    std::remove(cfg.c_str());
    std::remove(csv.c_str());
}

TEST_CASE("sweep exit code reflects violations") {
    std::string cfg = tmp_path("tiny.json");
    std::string csv = tmp_path("tiny.csv");
    write_text(cfg, R"({"families": [{"family": "regular_polygon", "n": 8}],
                        "p_grid": [1.0, 1.5], "q_count": 2, "guard": 0.05})");
    CHECK(run("sweep --config " + cfg + " -o " + csv + " >/dev/null 2>&1") == 0);
    std::string ok = read_file(csv);
    CHECK(ok.find(",1\n") != std::string::npos);
    // Shrinking every rhs by 100x forces failures and exit code 1.
    CHECK(run("sweep --config " + cfg + " -o " + csv + " --rhs-scale 0.01 >/dev/null 2>&1") == 1);
    CHECK(read_file(csv).find(",0\n") != std::string::npos);
    std::remove(cfg.c_str());
    std::remove(csv.c_str());
}

TEST_CASE("field renders the pinned square heatmap") {
    std::string curve = tmp_path("square3.json");
    std::string ppm = tmp_path("square.ppm");
    write_text(curve, kUnitSquare);
    CHECK(run("field " + curve + " --heatmap " + ppm + " --resolution 64 64 >/dev/null 2>&1") ==
          0);
    std::string img = read_file(ppm);
    CHECK(fnv1a64(reinterpret_cast<const std::uint8_t*>(img.data()), img.size()) ==
          0x233bbe3c98374afbULL);
    std::remove(curve.c_str());
    std::remove(ppm.c_str());
}

TEST_CASE("field emits cell json on stdout by default") {
    std::string curve = tmp_path("square4.json");
    std::string out = tmp_path("field.json");
    write_text(curve, kUnitSquare);
    CHECK(run("field " + curve + " > " + out + " 2>/dev/null") == 0);
    CHECK(read_file(out).find("\"cells\"") != std::string::npos);
    std::remove(curve.c_str());
    std::remove(out.c_str());
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("frobnicate >/dev/null 2>&1") == 2);
    CHECK(run("gen >/dev/null 2>&1") == 2);
    CHECK(run("gen --family regular --n 4 --bogus >/dev/null 2>&1") == 2);
    CHECK(run("sweep >/dev/null 2>&1") == 2);
    CHECK(run("--help >/dev/null 2>&1") == 0);
    CHECK(run("gen --help >/dev/null 2>&1") == 0);
}
