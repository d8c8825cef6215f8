#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using nlohmann::json;
using Catch::Approx;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string cli_path()
{
    const char* p = std::getenv("CLAB_CLI");
    REQUIRE(p != nullptr);
    return p;
}

RunResult run(const std::string& args)
{
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    while (size_t n = fread(buf.data(), 1, buf.size(), pipe))
        r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("transform to-ambient emits the ambient point", "[cli]")
{
    auto r = run("transform --space s2 --chart spherical --radius 1 "
                 "--to-ambient 1.5707963267948966 0 --json");
    REQUIRE(r.exit_code == 0);
    json rec = json::parse(r.out);
    CHECK(rec["schema"] == "output_record.v1");
    CHECK(rec["command"] == "transform");
    auto amb = rec["outputs"]["ambient"];
    REQUIRE(amb.size() == 3);
    CHECK(amb[0].get<double>() == Approx(1.0).margin(1e-14));
    CHECK(amb[1].get<double>() == Approx(0.0).margin(1e-14));
    CHECK(amb[2].get<double>() == Approx(0.0).margin(1e-14));
    CHECK(rec["outputs"]["constraint_residual"].get<double>() < 1e-14);
}

TEST_CASE("transform reports coverage violations with exit 2", "[cli]")
{
    auto r = run("transform --space e11 --chart pseudo_polar --from-ambient 0 1");
    CHECK(r.exit_code == 2);
}

TEST_CASE("classify identifies a squared boost", "[cli]")
{
    auto r = run("classify --space e11 --matrix 1 0 0 0 0 0 --json");
    REQUIRE(r.exit_code == 0);
    json rec = json::parse(r.out);
    CHECK(rec["outputs"]["label"].get<std::string>().substr(0, 2) == "Q2");
    CHECK(!rec["outputs"]["trivial"].get<bool>());
}

TEST_CASE("lame oracle cross-check passes", "[cli]")
{
    auto r = run("lame --l 3 --a 0 1 2 --oracle --json");
    REQUIRE(r.exit_code == 0);
    json rec = json::parse(r.out);
    CHECK(rec["pass"].get<bool>());
    CHECK(rec["outputs"]["max_oracle_deviation"].get<double>() < 1e-9);
    CHECK(rec["outputs"]["eigenvalue_count"].get<int>() == 7);
}

TEST_CASE("verify runs a single contraction case", "[cli]")
{
    auto r = run("verify S2.spherical→E2.polar --samples 5 --json");
    REQUIRE(r.exit_code == 0);
    json rec = json::parse(r.out);
    CHECK(rec["pass"].get<bool>());
    auto reports = rec["outputs"]["reports"];
    REQUIRE(reports.size() == 1);
    CHECK(reports[0]["pass"].get<bool>());
    CHECK(reports[0]["max_err"].back().get<double>() < 1e-2);
}

TEST_CASE("verify rejects unknown case ids", "[cli]")
{
    auto r = run("verify no.such.case");
    CHECK(r.exit_code == 2);
}

TEST_CASE("json output is deterministic", "[cli]")
{
    std::string cmd = "lame --l 4 --a 0.2 1.1 2.7 --oracle --json";
    auto r1 = run(cmd);
    auto r2 = run(cmd);
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
    CHECK(!r1.out.empty());
}

TEST_CASE("config file sets the radius list; CLI flag wins", "[cli]")
{
    std::string cfg = "/tmp/clab_cli_test_config.txt";
    {
        std::ofstream f(cfg);
        f << "# test config\n"
          << "samples = 5\n"
          << "r_list = 60,120,240\n";
    }
    auto r = run("--config " + cfg +
                 " verify S2.spherical→E2.polar --json");
    REQUIRE(r.exit_code == 0);
    json rec = json::parse(r.out);
    auto R = rec["outputs"]["reports"][0]["R"];
    REQUIRE(R.size() == 3);
    CHECK(R[0].get<double>() == Approx(60));
    CHECK(R[2].get<double>() == Approx(240));

    auto r2 = run("--config " + cfg +
                  " verify S2.spherical→E2.polar --R-list 70,140,280 --json");
    REQUIRE(r2.exit_code == 0);
    json rec2 = json::parse(r2.out);
    CHECK(rec2["outputs"]["reports"][0]["R"][0].get<double>() == Approx(70));
    std::remove(cfg.c_str());
}

TEST_CASE("roundtrip check failure uses exit code 1", "[cli]")
{
    std::string cfg = "/tmp/clab_cli_test_tol.txt";
    {
        std::ofstream f(cfg);
        f << "roundtrip_tol = 1e-30\n";
    }
    auto r = run("--config " + cfg +
                 " transform --space h2 --chart equidistant --radius 1 "
                 "--to-ambient 0.51 0.37 --check-roundtrip --json");
    CHECK(r.exit_code == 1);
    json rec = json::parse(r.out);
    CHECK(!rec["pass"].get<bool>());
    std::remove(cfg.c_str());
}
