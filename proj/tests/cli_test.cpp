#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "seglink/invariants.hpp"
#include "seglink/link_engine.hpp"
#include "seglink/link_io.hpp"

using namespace seglink;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// Runs the CLI with stdout+stderr captured.
RunResult run_cli(const std::string& args) {
    const std::string out_path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                                 "/seglink_cli_out.txt";
    const std::string cmd = std::string(SEGLINK_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    r.output = buf.str();
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = std::string("/tmp/") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

double parse_named_value(const std::string& output, const std::string& key) {
    const auto pos = output.find(key + " = ");
    REQUIRE(pos != std::string::npos);
    return std::strtod(output.c_str() + pos + key.size() + 3, nullptr);
}

}  // namespace

TEST_CASE("lk on an exported builtin reproduces the library value exactly") {
    for (const std::string name : {"hopf_square", "solomon"}) {
        const auto& link = builtin_links().at(name);
        const std::string path = write_temp(name + ".json", write_link_json(link));
        const RunResult r = run_cli("lk " + path);
        CHECK(r.exit_code == 0);
        const double printed = parse_named_value(r.output, "lk_total");
        CHECK(printed == lk_link(link).lk_total);
    }
}

TEST_CASE("lk exit codes for bad input") {
    const std::string bad = write_temp("bad.json", "{ not json");
    CHECK(run_cli("lk " + bad).exit_code == 2);

    CHECK(run_cli("lk /nonexistent/file.json").exit_code == 2);

    PolyLink touching;
    touching.comp1 = {{-1, 0, 0}, {1, 0, 0}};
    touching.closed1 = false;
    touching.comp2 = {{0, -1, 0}, {0, 1, 0}};
    touching.closed2 = false;
    const std::string path = write_temp("touching.json", write_link_json(touching));
    CHECK(run_cli("lk " + path).exit_code == 3);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("lk").exit_code == 2);
    CHECK(run_cli("verify --count 0").exit_code == 2);
    CHECK(run_cli("table no-such-kind").exit_code == 2);
    CHECK(run_cli("periodic --k 7").exit_code == 2);
    CHECK(run_cli("builtins --export no_such_link").exit_code == 2);
}

TEST_CASE("invariants of the canonical pair print round-trip exact values") {
    const Segment s1{{0, 0, -0.5}, {1, 0, -0.5}};
    const Segment s2{{0, 0, 0.5}, {0, 1, 0.5}};
    const SegmentPairInvariants inv = extract_invariants(s1, s2);

    const RunResult r = run_cli("invariants --coords 0 0 -0.5 1 0 -0.5 0 0 0.5 0 1 0.5");
    CHECK(r.exit_code == 0);
    CHECK(parse_named_value(r.output, "alpha") == inv.alpha);
    CHECK(parse_named_value(r.output, "d") == inv.d);
    CHECK(parse_named_value(r.output, "a1") == inv.a1);
    CHECK(parse_named_value(r.output, "b2") == inv.b2);
    CHECK(r.output.find("flags: none") != std::string::npos);
}

TEST_CASE("invariants flags parallel input, exit 0") {
    const RunResult r = run_cli("invariants --coords 0 0 0 1 0 0 0 1 0 1 1 0");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("parallel") != std::string::npos);
}

TEST_CASE("invariants reports degenerate input with flags, exit 0") {
    const RunResult r = run_cli("invariants --coords 0 0 0 0 0 0 1 0 0 2 0 0");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("degenerate1") != std::string::npos);
    CHECK(r.output.find("(degenerate)") != std::string::npos);
}

TEST_CASE("invariants from a two-segment file") {
    const std::string path = write_temp("pair.json", R"({"components":[
        {"vertices":[[0,0,-0.5],[1,0,-0.5]]},
        {"vertices":[[0,0,0.5],[0,1,0.5]]}]})");
    const RunResult r = run_cli("invariants " + path);
    CHECK(r.exit_code == 0);
    CHECK(parse_named_value(r.output, "d") == doctest::Approx(1.0));
}

TEST_CASE("verify passes at the documented tolerance and fails at an absurd one") {
    const RunResult ok = run_cli("verify --count 25 --seed 42 --tol 1e-9");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("PASS") != std::string::npos);

    const RunResult bad = run_cli("verify --count 1 --seed 7 --tol 1e-30");
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("FAIL") != std::string::npos);
}

TEST_CASE("table asymptotics: every row passes") {
    const RunResult r = run_cli("table asymptotics");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.output);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "case,parameter,value,limit,tolerance,status");
    int rows = 0;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        ++rows;
        CHECK(line.substr(line.size() - 4) == "pass");
    }
    CHECK(rows >= 8);
}

TEST_CASE("table lk-surface is antisymmetric in d") {
    const RunResult r = run_cli("table lk-surface --grid 11");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.output);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "a,d,lk");

    struct Row { double a, d, lk; };
    std::vector<Row> rows;
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        Row row{};
        char* end = nullptr;
        row.a = std::strtod(line.c_str(), &end);
        row.d = std::strtod(end + 1, &end);
        row.lk = std::strtod(end + 1, nullptr);
        rows.push_back(row);
    }
    CHECK(rows.size() == 121);
    for (const Row& row : rows) {
        const auto mirror = std::find_if(rows.begin(), rows.end(), [&](const Row& m) {
            return m.a == row.a && m.d == -row.d;
        });
        REQUIRE(mirror != rows.end());
        CHECK(std::abs(mirror->lk + row.lk) <= 1e-12);
    }
}

TEST_CASE("table at-surface edge approaches sign(d)*(pi/2 - alpha)") {
    const RunResult r = run_cli("table at-surface --grid 9 --dmax 100");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.output);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "d,alpha,at");
    double worst = 0.0;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        char* end = nullptr;
        const double d = std::strtod(line.c_str(), &end);
        const double alpha = std::strtod(end + 1, &end);
        const double at = std::strtod(end + 1, nullptr);
        // the d -> infinity line holds for alpha strictly inside (0, pi);
        // the endpoints follow the parallel convention instead
        if (std::abs(d) == 100.0 && alpha > 0.0 && alpha < 3.141592653589793) {
            const double sign = d > 0 ? 1.0 : -1.0;
            worst = std::max(worst, std::abs(at - sign * (1.5707963267948966 - alpha)));
        }
    }
    CHECK(worst < 0.02);
}

TEST_CASE("periodic CSV shape and limit annotation") {
    const RunResult r = run_cli("periodic --k 1 --nmax 5");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.output);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "n,partial_lk,delta");
    int rows = 0;
    bool annotated = false;
    while (std::getline(lines, line)) {
        if (line.rfind("# limit_estimate", 0) == 0) annotated = true;
        else if (!line.empty()) ++rows;
    }
    CHECK(rows == 6);
    CHECK(annotated);

    CHECK(run_cli("periodic --nmax 0").exit_code == 0);
}

TEST_CASE("builtins export round trip") {
    const RunResult listing = run_cli("builtins");
    CHECK(listing.exit_code == 0);
    CHECK(listing.output.find("hopf_square") != std::string::npos);

    const std::string path = "/tmp/seglink_export.json";
    const RunResult ex = run_cli("builtins --export whitehead --out " + path);
    CHECK(ex.exit_code == 0);
    const PolyLink back = read_link_file(path);
    CHECK(lk_link(back).lk_total == lk_link(builtin_links().at("whitehead")).lk_total);
}
