#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "relspec/commands.hpp"

using namespace relspec;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

fs::path fresh_dir(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("relspec_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

const char* kPlateConfig = R"({
  "schema_version": 1,
  "geometry": {"type": "point_plates", "gap": 1.0},
  "bc": "dirichlet",
  "kappa_grid": {"min": 0.5, "max": 4.0, "n": 8, "spacing": "linear"}
})";

const char* kMeshConfig = R"({
  "schema_version": 1,
  "geometry": [
    {"type": "circle", "center": [-2.0, 0.0], "radius": 1.0},
    {"type": "circle", "center": [2.0, 0.0], "radius": 1.0}
  ],
  "bc": "dirichlet",
  "mesh": {"n_per_component": [48, 48]},
  "kappa_grid": {"min": 0.5, "max": 2.0, "n": 4, "spacing": "log"}
})";

} // namespace

TEST_CASE("config parsing: schema versioning and strict keys") {
    CHECK_NOTHROW(parse_config(kPlateConfig));
    // Wrong schema version.
    std::string bad = kPlateConfig;
    bad.replace(bad.find("\"schema_version\": 1"), 19, "\"schema_version\": 2");
    CHECK_THROWS(parse_config(bad));
    // Unknown top-level key.
    std::string extra = kPlateConfig;
    extra.insert(extra.rfind('}'), ", \"typo_key\": 3");
    CHECK_THROWS(parse_config(extra));
    // Unknown nested key.
    std::string nested = kPlateConfig;
    nested.insert(nested.find(", \"spacing\""), ", \"stray\": 1");
    CHECK_THROWS(parse_config(nested));
    // Hash is populated and content-dependent.
    std::string other = kPlateConfig;
    other.replace(other.find("\"gap\": 1.0"), 10, "\"gap\": 2.0");
    CHECK(parse_config(kPlateConfig).hash != parse_config(other).hash);
    CHECK_FALSE(parse_config(kPlateConfig).hash.empty());
}

TEST_CASE("xi subcommand writes the closed form for point plates") {
    const fs::path dir = fresh_dir("xi_plates");
    CmdOptions opts;
    opts.out_dir = dir.string();
    REQUIRE(run_xi(parse_config(kPlateConfig), opts) == 0);
    const std::string csv = slurp(dir / "xi.csv");
    REQUIRE(csv.rfind("kappa,xi", 0) == 0);

    std::istringstream in(csv);
    std::string line;
    std::getline(in, line); // header
    int rows = 0;
    while (std::getline(in, line)) {
        const auto comma = line.find(',');
        REQUIRE(comma != std::string::npos);
        const double kappa = std::stod(line.substr(0, comma));
        const double xi = std::stod(line.substr(comma + 1));
        CHECK(xi == doctest::Approx(std::log1p(-std::exp(-2.0 * kappa))).epsilon(1e-15));
        ++rows;
    }
    CHECK(rows == 8);
}

TEST_CASE("xi subcommand is deterministic: bitwise-identical CSV") {
    const fs::path d1 = fresh_dir("det1"), d2 = fresh_dir("det2");
    CmdOptions opts;
    opts.threads = 1;
    opts.out_dir = d1.string();
    REQUIRE(run_xi(parse_config(kMeshConfig), opts) == 0);
    opts.out_dir = d2.string();
    REQUIRE(run_xi(parse_config(kMeshConfig), opts) == 0);
    CHECK(slurp(d1 / "xi.csv") == slurp(d2 / "xi.csv"));
}

TEST_CASE("energy subcommand writes a complete record") {
    const fs::path dir = fresh_dir("energy");
    CmdOptions opts;
    opts.out_dir = dir.string();
    REQUIRE(run_energy(parse_config(kPlateConfig), opts) == 0);
    const auto rec = nlohmann::json::parse(slurp(dir / "energy.json"));
    CHECK(rec.at("value").get<double>() ==
          doctest::Approx(-M_PI / 24.0).epsilon(1e-8));
    CHECK(rec.at("abs_error_estimate").get<double>() >= 0.0);
    CHECK(rec.at("n_evaluations").get<long>() > 0);
    CHECK_FALSE(rec.at("config_hash").get<std::string>().empty());
}

TEST_CASE("verify subcommand runs the fast suite and reports") {
    const fs::path dir = fresh_dir("verify");
    CmdOptions opts;
    opts.out_dir = dir.string();
    CHECK(run_verify("fast", opts) == 0);
    const auto rep = nlohmann::json::parse(slurp(dir / "verify.json"));
    CHECK(rep.at("all_pass").get<bool>());
}
