#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "surdlab/error.hpp"
#include "surdlab/explorer.hpp"

using namespace surdlab;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    args.insert(args.begin(), "surdlab");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("surdlab_test_" + name);
}

}  // namespace

TEST_CASE("scan CSV format") {
    std::ostringstream os;
    write_scan_csv(os, scan_periods(2, 4, 1));
    // sqrt 2 = [1; 2], sqrt 8 = [2; 1, 4], sqrt 18 = [4; 4, 8], sqrt 32 = [5; 1, 1, 1, 10]
    CHECK(os.str() == "d,n,radicand,D\n2,1,2,1\n2,2,8,2\n2,3,18,2\n2,4,32,4\n");
}

TEST_CASE("limit points and question 3") {
    const auto records = scan_periods(2, 10, 1);
    const LimitPointReport all = limit_points(records, 0);
    std::uint64_t total = 0;
    for (const auto& [D, c] : all.counts) total += c;
    CHECK(total == 10);
    CHECK(all.candidates.size() == all.counts.size());

    const LimitPointReport once = limit_points(records, 1);
    const auto q = question3(once, 1);
    REQUIRE(q.size() == 1);
    CHECK(q[0].k_candidate);  // D(1 * sqrt 2) = 1
    CHECK(q[0].satisfied());

    const LimitPointReport strict = limit_points(records, kDefaultThreshold);
    CHECK(strict.candidates.empty());
}

TEST_CASE("question 3 snapshot for d = 2, n <= 20000") {
    // Derived from tests/data/scan_d2_n20000_freq.csv (independent Python
    // oracle): below 12 only the even periods occur >= 20 times.
    const LimitPointReport report = limit_points(scan_periods(2, 20000, 4), kDefaultThreshold);
    const auto rows = question3(report, 10);
    REQUIRE(rows.size() == 10);
    for (const Q3Row& row : rows) {
        INFO("k = " << row.k);
        CHECK(row.k_candidate == (row.k % 2 == 0));
        CHECK(row.k1_candidate == (row.k % 2 == 1));
        CHECK(row.satisfied());
    }
    std::ostringstream os;
    write_q3_csv(os, rows);
    CHECK(os.str().rfind("k,k_candidate,k1_candidate,satisfied\n1,0,1,1\n2,1,0,1\n", 0) == 0);
}

TEST_CASE("spectrum CSV format") {
    std::ostringstream os;
    write_spectrum_csv(os, euclid_spectrum(1, 3, 2, 1));
    CHECK(os.str() == "n,attained,covers_k,smallest_missing\n1,1,0,2\n2,1,0,2\n3,1;2,1,\n");
}

TEST_CASE("every verification suite passes on small bounds") {
    SuiteBounds b;
    b.dmax = 150;
    b.nmax = 40;
    b.bound = 60;
    b.kmax = 20;
    b.samples = 300;
    b.workers = 3;
    for (const std::string& name : suite_names()) {
        INFO(name);
        const SuiteResult r = run_suite(name, b);
        CHECK(r.passed);
        CHECK(r.cases > 0);
    }
    CHECK_THROWS_AS(run_suite("nope", b), Error);
}

TEST_CASE("cli: scan writes byte-identical CSV for any worker count") {
    const auto p1 = temp_file("scan1.csv"), p8 = temp_file("scan8.csv");
    const CliRun a = cli({"scan", "--d", "3", "--nmax", "500", "--workers", "1", "--out", p1.string()});
    const CliRun b = cli({"scan", "--d", "3", "--nmax", "500", "--workers", "8", "--out", p8.string()});
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    CHECK(slurp(p1) == slurp(p8));
    CHECK(slurp(p1).find("3,6,108,8\n") != std::string::npos);
    CHECK(a.out.find("limit-point candidates") != std::string::npos);
}

TEST_CASE("cli: usage and error exit codes") {
    CHECK(cli({"scan", "--d", "4", "--nmax", "10"}).code == 2);
    CHECK(cli({"verify", "unknown-suite"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"--help"}).code == 0);

    const CliRun even_r = cli({"construct", "--d", "3", "--r", "2"});
    CHECK(even_r.code == 2);
    CHECK(even_r.err.find("\"r-not-odd\"") != std::string::npos);

    const CliRun limit = cli({"construct", "--d", "3", "--index-limit", "100"});
    CHECK(limit.code == 3);
    CHECK(limit.err.find("\"index-limit\"") != std::string::npos);

    CHECK(cli({"scan", "--d", "2", "--nmax", "3", "--out", "/nonexistent/dir/x.csv"}).code == 2);
}

TEST_CASE("cli: construct, verify, euclid-spectrum, q3") {
    const auto cert_path = temp_file("cert5.json");
    const CliRun c = cli({"construct", "--d", "5", "--r", "1", "--out", cert_path.string()});
    CHECK(c.code == 0);
    const auto j = nlohmann::ordered_json::parse(slurp(cert_path));
    CHECK(j["p"] == 47);
    CHECK(j["q"] == 29);
    CHECK(j["m"] == 840);
    CHECK(j["working_d"] == "80");
    CHECK(j["verified"] == true);
    CHECK(j["n"].is_string());

    const CliRun v = cli({"verify", "wlasnosci", "--dmax", "300", "--workers", "2"});
    CHECK(v.code == 0);
    CHECK(v.out.find("PASS") != std::string::npos);

    const CliRun s = cli({"euclid-spectrum", "--nmin", "1", "--nmax", "5", "--k", "2"});
    CHECK(s.code == 0);
    CHECK(s.out.find("5,1;2;3,1,\n") != std::string::npos);

    const CliRun q = cli({"q3", "--d", "2", "--nmax", "10", "--kmax", "1", "--threshold", "1"});
    CHECK(q.code == 0);
    CHECK(q.out == "k,k_candidate,k1_candidate,satisfied\n1,1,1,1\n");
}
