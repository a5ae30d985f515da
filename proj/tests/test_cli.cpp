#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "halfline/csv.hpp"

using namespace halfline;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string cmd = (env.empty() ? "" : env + " ") +
                            std::string(HALFLINE_CLI_BINARY) + " " + args +
                            " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), got);
    }
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("shortest round-trip formatting survives re-parsing") {
    for (double v : {0.1, -0.375, 1.0 / 3.0, 1e-300, 6.02e23, 0.0,
                     -2.2250738585072014e-308}) {
        CHECK(parse_double(format_double(v)) == v);
    }
}

TEST_CASE("csv rows round-trip bit for bit") {
    CsvRow row;
    row.model = "kdv";
    row.omega0 = 0.375;
    row.x = 1.0 / 7.0;
    row.t = 123.456;
    row.xi = row.x / row.t;
    row.method = "exact";
    row.value = -0.987654321987654321;
    row.err_estimate = 3.2e-11;
    row.region = "IIa";
    row.status = "ok";
    CsvRow back = from_csv_line(to_csv_line(row));
    CHECK(back.model == row.model);
    CHECK(back.omega0 == row.omega0);
    CHECK(back.x == row.x);
    CHECK(back.t == row.t);
    CHECK(back.xi == row.xi);
    CHECK(back.value == row.value);
    CHECK(back.err_estimate == row.err_estimate);
    CHECK(back.region == row.region);
    CHECK(back.status == row.status);
}

TEST_CASE("malformed csv lines are rejected") {
    CHECK_THROWS(from_csv_line("kdv,0.375,1"));
    CHECK_THROWS(from_csv_line(""));
}

TEST_CASE("write/read csv preserves a sample table") {
    std::vector<CsvRow> rows(3);
    rows[0].model = "kdv";
    rows[0].value = 0.25;
    rows[1].model = "bbm";
    rows[1].t = 17.0;
    rows[2].model = "kdv";
    rows[2].status = "non-convergent";
    std::ostringstream os;
    write_csv(os, rows);
    std::istringstream is(os.str());
    std::vector<CsvRow> back = read_csv(is);
    REQUIRE(back.size() == 3);
    CHECK(back[0].value == 0.25);
    CHECK(back[1].t == 17.0);
    CHECK(back[2].status == "non-convergent");
    // Empty tables still carry the header.
    std::ostringstream empty;
    write_csv(empty, {});
    CHECK(empty.str() == std::string(kCsvHeader) + "\n");
}

TEST_CASE("cli: roots runs and flags the radiating root") {
    RunResult r = run_cli("roots --model kdv --omega0 0.375");
    CHECK(r.exit_code == 0);
    // One root line is marked as radiating (is_k0 = 1) with value near 1/2.
    std::istringstream is(r.out);
    std::string line;
    bool found = false;
    while (std::getline(is, line)) {
        if (line.find("boundary-D+,1,") == std::string::npos) continue;
        found = std::abs(parse_double(line.substr(0, line.find(','))) - 0.5) <=
                1e-12;
    }
    CHECK(found);
}

TEST_CASE("cli: uncovered coefficient family exits with code 2") {
    RunResult r =
        run_cli("roots --model general --a-m2 1 --a1 -1 --a3 -1 --omega0 0.5");
    CHECK(r.exit_code == 2);
}

TEST_CASE("cli: evaluate emits the csv schema") {
    RunResult r = run_cli(
        "evaluate --model kdv --omega0 0.375 --method exact "
        "--x-min 0 --x-max 2 --x-count 3 --t-min 5 --t-count 1");
    CHECK(r.exit_code == 0);
    std::istringstream is(r.out);
    std::vector<CsvRow> rows = read_csv(is);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].method == "exact");
    CHECK(rows[0].x == 0.0);
    CHECK(rows[0].value ==
          doctest::Approx(-std::sin(0.375 * 5.0)).epsilon(1e-8));
}

TEST_CASE("cli: byte-identical determinism across repeated runs") {
    const std::string args =
        "evaluate --model bbm --omega0 0.4 --method all "
        "--x-min 0 --x-max 6 --x-count 4 --t-min 3 --t-max 9 --t-count 2";
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("cli: json config seeds values and flags override") {
    const std::string path = "/tmp/halfline_cli_cfg.json";
    {
        std::ofstream f(path);
        f << "{\"omega0\": 0.4, \"x-max\": 6.0, \"x-count\": 4, "
             "\"t-min\": 3.0, \"method\": \"exact\"}\n";
    }
    RunResult from_cfg = run_cli("evaluate --model bbm --config " + path +
                                 " --x-min 0 --t-count 1");
    RunResult from_flags = run_cli(
        "evaluate --model bbm --omega0 0.4 --method exact "
        "--x-min 0 --x-max 6 --x-count 4 --t-min 3 --t-count 1");
    CHECK(from_cfg.exit_code == 0);
    CHECK(from_cfg.out == from_flags.out);
    // A flag overrides the config value.
    RunResult overridden = run_cli("evaluate --model bbm --config " + path +
                                   " --omega0 0.45 --x-min 0 --t-count 1");
    CHECK(overridden.out.find("bbm,0.45,") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("cli: phase-diagram labels and curves") {
    RunResult r = run_cli("phase-diagram --model kdv --resolution 12");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find(",region,") != std::string::npos);
    CHECK(r.out.find(",curve,") != std::string::npos);
    CHECK(r.out.find(",cg,") != std::string::npos);
    CHECK(r.out.find(",IVa,") != std::string::npos);
}

TEST_CASE("cli: thread cap preserves output ordering") {
    const std::string args =
        "evaluate --model kdv --omega0 0.375 --method exact "
        "--x-min 0 --x-max 8 --x-count 6 --t-min 4 --t-count 1";
    RunResult serial = run_cli(args, "HALFLINE_THREADS=1");
    RunResult parallel = run_cli(args, "HALFLINE_THREADS=8");
    CHECK(serial.out == parallel.out);
    CHECK(!serial.out.empty());
}
