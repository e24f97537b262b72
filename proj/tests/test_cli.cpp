#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "gctqft/cli.hpp"

using namespace gctqft;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir()
    {
        path = fs::temp_directory_path() / ("gctqft_test_" + std::to_string(std::rand()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("corpus emission and round-trips")
{
    TempDir dir;
    auto r = cli::run({"corpus", "--output-dir", dir.path.string()});
    REQUIRE(r.exit_code == 0);
    auto files = r.report.at("files").get<std::vector<std::string>>();
    CHECK(files.size() >= 20);

    // spec-named contents
    auto has = [&](const std::string& f) { return std::find(files.begin(), files.end(), f) != files.end(); };
    CHECK(has("c3.json"));
    CHECK(has("z2_sigma_1.json"));
    CHECK(has("z2_sigma_i.json"));
    CHECK(has("z2_sigma_minus1.json"));
    CHECK(has("z2_sigma_minus_i.json"));
    CHECK(has("gluing_interval_to_circle.json"));

    // every corpus file round-trips through parse -> serialize unchanged
    for (const auto& f : files) {
        auto j = io::load_file(dir.file(f));
        io::json j2;
        if (j.contains("kind") && j.at("kind") == "gluing")
            j2 = io::to_json(io::gluing_from_json(j));
        else if (j.contains("cells"))
            j2 = io::to_json(io::complex_from_json(j));
        else
            j2 = io::to_json(io::presentation_from_json(j));
        INFO(f);
        CHECK(j == j2);
    }
}

TEST_CASE("reports are deterministic")
{
    TempDir dir;
    REQUIRE(cli::run({"corpus", "--output-dir", dir.path.string()}).exit_code == 0);
    auto a = cli::run({"check-category", dir.file("z2_sigma_i.json")});
    auto b = cli::run({"check-category", dir.file("z2_sigma_i.json")});
    CHECK(a.report.dump() == b.report.dump());
    auto c = cli::run({"classify", "--group", "2", "--level", "4"});
    auto d = cli::run({"classify", "--group", "2", "--level", "4"});
    CHECK(c.report.dump() == d.report.dump());

    // induced-map matrices are reproducible bit-for-bit
    std::vector<std::string> im{"induced-map", dir.file("mult_square.json"), "--y0", "y0", "--y1", "y1",
                                "--w", "w", "--dim", "1", "--group", "2,2", "--oracle", "both"};
    auto e = cli::run(im);
    auto f = cli::run(im);
    REQUIRE(e.exit_code == 0);
    CHECK(e.report.dump() == f.report.dump());
}

TEST_CASE("exit codes")
{
    TempDir dir;
    REQUIRE(cli::run({"corpus", "--output-dir", dir.path.string()}).exit_code == 0);

    SECTION("valid category checks exit 0")
    {
        CHECK(cli::run({"check-category", dir.file("z2_sigma_i.json")}).exit_code == 0);
    }
    SECTION("axiom violations exit 1")
    {
        // Z/3 with sigma = -1 fails the odd-order condition
        io::json bad{{"format", "gctqft/1"},
                     {"orders", {3}},
                     {"level", 6},
                     {"sigma_diag", {io::to_json(RingElement::integer(6, -1))}}};
        io::write_file(dir.file("bad.json"), bad);
        auto r = cli::run({"check-category", dir.file("bad.json")});
        CHECK(r.exit_code == 1);
        CHECK(r.report.at("order_conditions") == false);
        CHECK(r.report.contains("violations"));
    }
    SECTION("malformed JSON exits 2 with a location")
    {
        std::ofstream out(dir.file("broken.json"));
        out << "{ not json";
        out.close();
        auto r = cli::run({"check-category", dir.file("broken.json")});
        CHECK(r.exit_code == 2);
        CHECK(r.report.contains("error"));
    }
    SECTION("NOT normalizable is still a successful computation")
    {
        auto r = cli::run({"anomaly", dir.file("z2_sigma_minus1.json")});
        CHECK(r.exit_code == 0);
        CHECK(r.report.at("verdict") == "NOT normalizable");
    }
    SECTION("infeasible classification exits 2 with the bound")
    {
        auto r = cli::run({"classify", "--group", "12", "--level", "24", "--mode", "full"});
        CHECK(r.exit_code == 2);
        CHECK(r.report.at("error").get<std::string>().find("budget") != std::string::npos);
    }
    SECTION("non-modular gluing exits 1")
    {
        auto r = cli::run({"modularity-check", dir.file("gluing_interval_to_circle.json"), "--group", "3"});
        CHECK(r.exit_code == 1);
        CHECK(r.report.at("verdict") == "NOT modular");
        CHECK(r.report.at("defect") == 2);
    }
    SECTION("inadmissible bordism data exits 2")
    {
        // y0 n y1 != w: the square's boundary objects share their side walls
        auto r = cli::run({"induced-map", dir.file("square.json"), "--y0", "y0", "--y1", "y1", "--w", "none",
                           "--dim", "1", "--group", "2"});
        CHECK(r.exit_code == 2);
        CHECK(r.report.contains("error"));
    }
    SECTION("unknown subcomplex exits 2")
    {
        auto r = cli::run({"homology", dir.file("interval.json"), "--pair", "I,nope", "--dim", "1", "--group", "2"});
        CHECK(r.exit_code == 2);
    }
}

TEST_CASE("spec command examples")
{
    TempDir dir;
    REQUIRE(cli::run({"corpus", "--output-dir", dir.path.string()}).exit_code == 0);

    SECTION("anomaly table rows")
    {
        auto r1 = cli::run({"anomaly", dir.file("z2_sigma_1.json")});
        CHECK(r1.report.at("extension") == "R[1/2]");
        CHECK(r1.report.at("anomalous") == false);
        auto r2 = cli::run({"anomaly", dir.file("z2_sigma_i.json")});
        CHECK(r2.report.at("extension") == "R[1/sqrt(2)]");
        CHECK(r2.report.at("anomalous") == true);
    }
    SECTION("homology of the interval pair is Z/2")
    {
        auto r = cli::run({"homology", dir.file("interval.json"), "--pair", "I,dI", "--dim", "1", "--group", "2"});
        REQUIRE(r.exit_code == 0);
        CHECK(r.report.at("group") == io::json{{"orders", {2}}});
    }
    SECTION("classify Z/2 at level 4")
    {
        auto r = cli::run({"classify", "--group", "2", "--level", "4"});
        CHECK(r.report.at("braided_count") == 4);
        CHECK(r.report.at("symmetric_count") == 2);
    }
    SECTION("state space of c(3)")
    {
        auto r = cli::run({"state-space", dir.file("c3.json"), "--y", "all", "--w", "feet", "--dim", "1", "--group",
                           "2,2"});
        CHECK(r.report.at("rank") == 16);
    }
    SECTION("induced map oracle diff on the square")
    {
        auto r = cli::run({"induced-map", dir.file("square.json"), "--y0", "y0", "--y1", "y1", "--w", "w", "--dim",
                           "1", "--group", "4", "--oracle", "both"});
        CHECK(r.exit_code == 0);
        CHECK(r.report.at("oracles_agree") == true);
    }
    SECTION("report can be written to a file")
    {
        auto out = dir.file("report.json");
        auto r = cli::run({"anomaly", dir.file("z2_sigma_1.json"), "--output", out});
        CHECK(r.exit_code == 0);
        CHECK(io::load_file(out) == r.report);
    }
}
