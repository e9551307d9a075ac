#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

fs::path work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "circim_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run(const std::string& args) {
    const fs::path out = work_dir() / "stdout.txt";
    const fs::path err = work_dir() / "stderr.txt";
    std::string cmd = std::string(CIRCIM_CLI_PATH) + " " + args + " > " + out.string() + " 2> " +
                      err.string();
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

fs::path write_file(const std::string& name, const std::string& content) {
    fs::path p = work_dir() / name;
    std::ofstream(p, std::ios::binary) << content;
    return p;
}

const char* kQuadraticJson =
    R"({"terms": [{"k": 2, "re": "1", "im": "0"}, {"k": 1, "re": "3", "im": "0"}, {"k": 0, "re": "1", "im": "0"}]})";
const char* kBalancedJson =
    R"({"terms": [{"k": 1, "re": "1", "im": "0"}, {"k": -1, "re": "1", "im": "0"}]})";

}  // namespace

TEST_CASE("compute-h emits the expected polynomial with degree metadata") {
    fs::path in = write_file("quadratic.json", kQuadraticJson);
    RunResult r = run("compute-h " + in.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"h_total\": 4") != std::string::npos);
    CHECK(r.out.find("\"hC_w\": 2") != std::string::npos);
    CHECK(r.out.find("\"hC_wbar\": 2") != std::string::npos);
    CHECK(r.out.find("\"x\"") != std::string::npos);
    CHECK(r.out.find("\"w\"") != std::string::npos);

    RunResult again = run("compute-h " + in.string());
    CHECK(again.out == r.out);  // byte-identical
}

TEST_CASE("compute-h writes to a file when asked") {
    fs::path in = write_file("balanced.json", kBalancedJson);
    fs::path out = work_dir() / "balanced_h.json";
    RunResult r = run("compute-h " + in.string() + " -o " + out.string());
    CHECK(r.exit_code == 0);
    std::ifstream f(out);
    std::ostringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str().find("\"c\": \"-4\"") != std::string::npos);  // h = -4y^2
}

TEST_CASE("malformed input exits with the input-error code") {
    fs::path in = write_file("broken.json", "{not json");
    CHECK(run("compute-h " + in.string()).exit_code == 2);
    CHECK(run("compute-h /nonexistent/missing.json").exit_code == 2);
    fs::path constant = write_file("constant.json", R"({"terms": [{"k": 0, "re": "1", "im": "0"}]})");
    CHECK(run("compute-h " + constant.string()).exit_code == 2);
}

TEST_CASE("usage errors exit with the input-error code") {
    CHECK(run("").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
    fs::path in = write_file("quadratic.json", kQuadraticJson);
    CHECK(run("plot " + in.string() + " --resolution 8").exit_code == 2);
    CHECK(run("plot " + in.string() + " --bbox 1,1,0,0").exit_code == 2);
    CHECK(run("verify " + in.string() + " --rational 0").exit_code == 2);
}

TEST_CASE("classification verdicts appear in the report") {
    fs::path line = write_file("balanced.json", kBalancedJson);
    RunResult r = run("classify " + line.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("LINE_INFINITE_GAP") != std::string::npos);
    CHECK(r.out.find("eta_squared") != std::string::npos);

    fs::path fin = write_file("quadratic.json", kQuadraticJson);
    RunResult rf = run("classify " + fin.string());
    CHECK(rf.exit_code == 0);
    CHECK(rf.out.find("FINITE_GAP") != std::string::npos);
}

TEST_CASE("verification reports full exact vanishing") {
    fs::path in = write_file("quadratic.json", kQuadraticJson);
    RunResult r = run("verify " + in.string() + " --rational 50");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("50/50 exact zeros") != std::string::npos);
    CHECK(r.out.find("residual") != std::string::npos);
}

TEST_CASE("bound reports combine the formula with the numeric count") {
    fs::path p = write_file("pz.json", R"({"terms": [{"k": 1, "re": "1", "im": "0"}]})");
    fs::path q = write_file("pz1.json",
                            R"({"terms": [{"k": 1, "re": "1", "im": "0"}, {"k": 0, "re": "1", "im": "0"}]})");
    RunResult r = run("bound --p " + p.string() + " --q " + q.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"bound\": 2") != std::string::npos);
    CHECK(r.out.find("\"numeric_count\": 2") != std::string::npos);

    RunResult skip = run("bound --p " + p.string() + " --q " + q.string() + " --no-count");
    CHECK(skip.exit_code == 0);
    CHECK(skip.out.find("numeric_count") == std::string::npos);
}

TEST_CASE("intersections command reports points") {
    fs::path p = write_file("pz.json", R"({"terms": [{"k": 1, "re": "1", "im": "0"}]})");
    fs::path q = write_file("pz3.json",
                            R"({"terms": [{"k": 1, "re": "1", "im": "0"}, {"k": 0, "re": "3", "im": "0"}]})");
    RunResult r = run("intersections --p " + p.string() + " --q " + q.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"count\": 0") != std::string::npos);
    CHECK(r.out.find("\"overlap_suspected\": false") != std::string::npos);
}

TEST_CASE("construction emits a certified polynomial") {
    RunResult r = run("construct --points 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"N\": 2") != std::string::npos);
    CHECK(r.out.find("\"M\"") != std::string::npos);
    CHECK(r.out.find("certified_min_modulus") != std::string::npos);

    fs::path anchors = write_file("anchors.json", R"({"anchors": [{"re": "1/2", "im": "0"}]})");
    RunResult ra = run("construct --anchors " + anchors.string());
    CHECK(ra.exit_code == 0);
    CHECK(ra.out.find("\"N\": 1") != std::string::npos);

    fs::path bad = write_file("bad_anchors.json", R"({"anchors": [{"re": "2", "im": "0"}]})");
    CHECK(run("construct --anchors " + bad.string()).exit_code == 2);
}

TEST_CASE("plotting writes an SVG with curve and contour strokes") {
    fs::path in = write_file("quadratic.json", kQuadraticJson);
    fs::path svg = work_dir() / "quadratic.svg";
    RunResult r = run("plot " + in.string() + " -o " + svg.string() + " --resolution 96");
    CHECK(r.exit_code == 0);
    REQUIRE(fs::exists(svg));
    std::ifstream f(svg);
    std::ostringstream ss;
    ss << f.rdbuf();
    const std::string body = ss.str();
    CHECK(body.find("<svg") != std::string::npos);
    CHECK(body.find("<polyline") != std::string::npos);
    CHECK(body.find("</svg>") != std::string::npos);

    fs::path svg2 = work_dir() / "quadratic2.svg";
    RunResult r2 = run("plot " + in.string() + " -o " + svg2.string() + " --resolution 96");
    CHECK(r2.exit_code == 0);
    std::ifstream f2(svg2);
    std::ostringstream ss2;
    ss2 << f2.rdbuf();
    CHECK(ss2.str() == body);  // deterministic
}
