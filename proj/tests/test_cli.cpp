#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cavity/cli.hpp>

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

using nlohmann::json;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = cavity::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST_CASE("number formatting is pinned to 15 significant digits") {
    using cavity::cli::format_number;
    CHECK(format_number(std::numbers::pi) == "3.14159265358979");
    CHECK(format_number(0.25) == "0.25");
    CHECK(format_number(4.0) == "4");
    CHECK(format_number(1e-20) == "1e-20");
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(123456789012345678.0) == "1.23456789012346e+17");
}

TEST_CASE("zeros") {
    const auto r = run({"zeros", "--l", "0", "--count", "2"});
    CHECK(r.status == 0);
    CHECK(r.out == "n,l,x,beta\n1,0,3.14159265358979,1\n2,0,6.28318530717959,2\n");
    const auto j = json::parse(run({"zeros", "--l", "1", "--count", "1", "--format", "json"}).out);
    CHECK(j["zeros"][0]["x"].get<double>() == doctest::Approx(4.49340945790906));
}

TEST_CASE("spectrum json for the l = 0 rows") {
    const auto r = run({"spectrum", "--R", "1", "--nmax", "3", "--lmax", "0", "--convention", "all",
                        "--format", "json"});
    REQUIRE(r.status == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["units"] == "h^2/(8 M R^2)");
    CHECK(doc["geometry"]["D"].get<double>() == 2.0);
    const auto& cmp = doc["comparison"];
    REQUIRE(cmp.size() == 3);
    const double paper[] = {0.25, 1.0, 2.25};
    for (int i = 0; i < 3; ++i) {
        const double n2 = (i + 1) * (i + 1);
        CHECK(cmp[i]["E_i"].get<double>() == doctest::Approx(n2).epsilon(1e-12));
        CHECK(cmp[i]["E_ii_conventional"].get<double>() == doctest::Approx(n2).epsilon(1e-12));
        CHECK(cmp[i]["E_ii_paper"].get<double>() == doctest::Approx(paper[i]).epsilon(1e-12));
    }
    // modes: three conventions x three rows, EigenMode schema
    REQUIRE(doc["modes"].size() == 9);
    for (const auto& m : doc["modes"]) {
        CHECK(m.contains("n"));
        CHECK(m.contains("l"));
        CHECK(m.contains("kR"));
        CHECK(m.contains("energy"));
        CHECK(m.contains("provenance"));
        CHECK(m.contains("convention"));
    }
    CHECK(doc["modes"][8]["convention"] == "ii-paper");
    CHECK(doc["modes"][8]["energy"].get<double>() == doctest::Approx(2.25));
}

TEST_CASE("spectrum csv has a constant column count") {
    const auto r = run({"spectrum", "--R", "2", "--eps", "0.1", "--nmax", "2", "--lmax", "2",
                        "--convention", "i"});
    REQUIRE(r.status == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 1 + 6);
    for (const auto& row : rows) CHECK(row.size() == 7);
    CHECK(rows[4][5] == "cross-product");

    const auto si = run({"spectrum", "--R", "1e-9", "--nmax", "1", "--convention", "ii-conv",
                         "--mass", "9.1093837015e-31"});
    const auto si_rows = parse_csv(si.out);
    CHECK(std::stod(si_rows[1][6]) == doctest::Approx(6.0245e-20).epsilon(1e-4));
}

TEST_CASE("spectrum with oracle errors attached") {
    const auto r = run({"spectrum", "--nmax", "2", "--lmax", "1", "--eps", "0.1", "--format",
                        "json", "--oracle-points", "500"});
    REQUIRE(r.status == 0);
    for (const auto& row : json::parse(r.out)["comparison"])
        CHECK(row["oracle_error"].get<double>() < 1e-6);
}

TEST_CASE("compare reaches 1e-6 with Richardson extrapolation") {
    const auto r = run({"compare", "--R", "1", "--eps", "0", "--l", "0", "--count", "3",
                        "--points", "2000", "--richardson"});
    REQUIRE(r.status == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == std::vector<std::string>{"n", "l", "kR_analytic", "kR_oracle", "relative_error"});
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(std::stod(rows[i][4]) <= 1e-6);
}

TEST_CASE("oracle emits the mode schema") {
    const auto r = run({"oracle", "--eps", "0.2", "--l", "1", "--count", "2", "--points", "300",
                        "--format", "json"});
    REQUIRE(r.status == 0);
    const auto doc = json::parse(r.out);
    REQUIRE(doc["modes"].size() == 2);
    CHECK(doc["modes"][0]["provenance"] == "finite-difference");
    CHECK(doc["modes"][0]["convention"] == "i");
}

TEST_CASE("sweep-eps") {
    const auto r = run({"sweep-eps", "--n", "1", "--l", "0", "--R", "1", "--eps-list", "0.1,0.01"});
    REQUIRE(r.status == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(std::stod(rows[1][1]) == doctest::Approx(std::numbers::pi / 0.9).epsilon(1e-14));
    CHECK(std::stod(rows[2][2]) < std::stod(rows[1][2]));
}

TEST_CASE("wavefunction samples") {
    const auto r = run({"wavefunction", "--R", "1", "--eps", "0", "--l", "0", "--n", "1",
                        "--samples", "5"});
    REQUIRE(r.status == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == std::vector<std::string>{"r", "chi", "R_l", "density"});
    CHECK(std::stod(rows[3][0]) == 0.5);
    CHECK(std::stod(rows[3][1]) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-8));
    const double R = std::stod(rows[3][2]);
    CHECK(std::stod(rows[3][3]) == doctest::Approx(R * R));
}

TEST_CASE("planewave-check verdict and profile") {
    const auto r = run({"planewave-check", "--kr-max", "10", "--grid", "21", "--L", "40", "--tol", "1e-8"});
    CHECK(r.status == 0);
    CHECK(r.out.find("verdict=PASS") != std::string::npos);
    const auto fail = run({"planewave-check", "--L", "5"});
    CHECK(fail.status == 1);
    CHECK(fail.out.find("verdict=FAIL") != std::string::npos);
    const auto prof = run({"planewave-check", "--profile", "--kr-max", "10", "--grid", "3"});
    const auto rows = parse_csv(prof.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[1][1] == "0");
}

TEST_CASE("exit statuses") {
    auto unknown = run({"zeros", "--l", "0", "--count", "2", "--bogus"});
    CHECK(unknown.status == 2);
    CHECK(unknown.err.find("Usage") != std::string::npos);
    CHECK(run({}).status == 2);
    CHECK(run({"spectrum", "--R", "1", "--eps", "1"}).status == 2);
    CHECK(run({"spectrum", "--eps", "0.1", "--convention", "ii-paper"}).status == 2);
    CHECK(run({"spectrum", "--convention", "iii"}).status == 2);
    CHECK(run({"oracle", "--points", "8"}).status == 2);
    CHECK(run({"oracle", "--convention", "x"}).status == 2);
    CHECK(run({"zeros", "--l", "101", "--count", "1"}).status == 2);
    CHECK(run({"--help"}).status == 0);

    const auto numeric = run({"planewave-check", "--profile", "--kr-max", "95", "--grid", "2",
                              "--tol", "1e-300"});
    CHECK(numeric.status == 1);
    CHECK(numeric.err.find("numeric failure") != std::string::npos);
    CHECK(std::count(numeric.err.begin(), numeric.err.end(), '\n') == 1);
}

TEST_CASE("invalid CAVITYSPEC_LMAX is rejected") {
    setenv("CAVITYSPEC_LMAX", "many", 1);
    CHECK(run({"zeros", "--l", "0", "--count", "1"}).status == 2);
    unsetenv("CAVITYSPEC_LMAX");
    CHECK(run({"zeros", "--l", "0", "--count", "1"}).status == 0);
}

TEST_CASE("identical configurations give byte-identical output") {
    const std::vector<std::string> args = {"spectrum", "--nmax", "4", "--lmax", "3", "--eps",
                                           "0.05", "--format", "json"};
    CHECK(run(args).out == run(args).out);
    const std::vector<std::string> csv = {"wavefunction", "--l", "2", "--n", "2", "--eps", "0.1"};
    CHECK(run(csv).out == run(csv).out);
}

TEST_CASE("--out writes to a file") {
    const auto path = std::filesystem::temp_directory_path() / "cavityspec_zeros_test.csv";
    const auto r = run({"zeros", "--l", "0", "--count", "1", "--out", path.string()});
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), {});
    CHECK(text == "n,l,x,beta\n1,0,3.14159265358979,1\n");
    std::filesystem::remove(path);
}
