#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "gtwist/enumeration.hpp"
#include "gtwist/io.hpp"
#include "gtwist/k4.hpp"
#include "gtwist/canonical.hpp"
#include "gtwist/recognizer.hpp"

using namespace gtwist;
namespace fs = std::filesystem;

namespace {

const std::string kBinary = GTWIST_CLI_BINARY;

int run_cmd(const std::string& args, const std::string& out_file = "/dev/null") {
    const std::string cmd = kBinary + " " + args + " > " + out_file + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / "gtwist_cli_test") {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("fnv1a64 reference values") {
    CHECK(cli::fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(cli::fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("gen is deterministic per seed and check accepts its output") {
    TempDir tmp;
    const std::string out = (tmp.path / "a").string();
    REQUIRE(run_cmd("gen --kind twisted -n 6 --seed 11 --out " + out) == 0);
    const fs::path rs_file = tmp.path / "a" / "twisted_n6_s11.rs.txt";
    REQUIRE(fs::exists(rs_file));
    const std::string first = slurp(rs_file);

    const std::string out2 = (tmp.path / "b").string();
    REQUIRE(run_cmd("gen --kind twisted -n 6 --seed 11 --out " + out2) == 0);
    CHECK(slurp(tmp.path / "b" / "twisted_n6_s11.rs.txt") == first);

    const std::string report_file = (tmp.path / "report.json").string();
    REQUIRE(run_cmd("check " + rs_file.string() + " --json", report_file) == 0);
    auto report = nlohmann::json::parse(slurp(report_file));
    CHECK(report["schema"] == "gtwist-report/1");
    CHECK(report["gt"] == true);
    CHECK(report["certificate"].contains("v1"));

    // The embedded certificate re-verifies against the input.
    auto parsed = read_rotation_system_file(rs_file.string());
    GtCertificate cert{report["certificate"]["v1"], report["certificate"]["v2"],
                       report["certificate"]["A"].get<std::vector<Vertex>>(),
                       report["certificate"]["B"].get<std::vector<Vertex>>()};
    CHECK(verify_certificate(parsed.rs, cert));
}

TEST_CASE("gen radial produces a T5 instance the checker accepts") {
    TempDir tmp;
    REQUIRE(run_cmd("gen --kind radial -n 5 --seed 9 --out " + tmp.path.string()) == 0);
    const fs::path rs_file = tmp.path / "radial_n5_s9.rs.txt";
    REQUIRE(fs::exists(rs_file));
    CHECK(canonical_key(read_rotation_system_file(rs_file.string()).rs) == t5_key());
    const std::string report_file = (tmp.path / "r.json").string();
    REQUIRE(run_cmd("check " + rs_file.string() + " --json", report_file) == 0);
    CHECK(nlohmann::json::parse(slurp(report_file))["gt"] == true);
}

TEST_CASE("check reports non-GT instances with a witness") {
    TempDir tmp;
    const fs::path file = tmp.path / "exceptional.rs.txt";
    write_text_file(file.string(), serialize(derive_exceptional_k6()));
    const std::string report_file = (tmp.path / "r.json").string();
    REQUIRE(run_cmd("check " + file.string() + " --mode abstract --json", report_file) == 0);
    auto report = nlohmann::json::parse(slurp(report_file));
    CHECK(report["gt"] == false);
    CHECK(report["witness"]["kind"] == "exceptional-k6");

    REQUIRE(run_cmd("check " + file.string() + " --mode realizable --json", report_file) == 0);
    report = nlohmann::json::parse(slurp(report_file));
    CHECK(report["gt"] == false);
    CHECK(report["witness"]["kind"] == "no-valid-pair");
}

TEST_CASE("exit codes: usage, parse, precondition, disagreement") {
    TempDir tmp;
    CHECK(run_cmd("check") == cli::kExitUsage);
    CHECK(run_cmd("nonsense") == cli::kExitUsage);

    const fs::path bad = tmp.path / "bad.rs.txt";
    write_text_file(bad.string(), "n 5\n0: 1 2 3 4\n");
    CHECK(run_cmd("check " + bad.string()) == cli::kExitParse);

    const fs::path tiny = tmp.path / "small.rs.txt";
    write_text_file(tiny.string(), "n 4\n0: 1 2 3\n1: 0 2 3\n2: 0 1 3\n3: 0 1 2\n");
    CHECK(run_cmd("check " + tiny.string()) == cli::kExitPrecondition);

    // A five-vertex system with an unrealizable 4-subsystem on {0,1,2,3}:
    // the realizable path refuses a verdict.
    const auto& catalog = K4Catalog::instance();
    int bad_bits = 0;
    while (catalog.by_pattern(bad_bits).kind != K4Kind::Unrealizable) ++bad_bits;
    std::vector<std::vector<Vertex>> rows(5);
    for (Vertex v = 0; v < 4; ++v) {
        std::vector<Vertex> others;
        for (Vertex u = 0; u < 4; ++u)
            if (u != v) others.push_back(u);
        if ((bad_bits >> v) & 1) std::swap(others[1], others[2]);
        others.push_back(4);
        rows[v] = others;
    }
    rows[4] = {0, 1, 2, 3};
    const fs::path unreal = tmp.path / "unreal.rs.txt";
    write_text_file(unreal.string(), serialize(RotationSystem::from_rows(rows)));
    CHECK(run_cmd("check " + unreal.string() + " --mode realizable") ==
          cli::kExitPrecondition);

    CHECK(run_cmd("enum --nmax 12") == cli::kExitPrecondition);
    CHECK(run_cmd("xval -n 7 --count 8 --seed 5 --inject-flip 2") == cli::kExitDisagreement);
}

TEST_CASE("enum prints the class counts and persists byte-stable catalogs") {
    TempDir tmp;
    const std::string out_file = (tmp.path / "enum.txt").string();
    const std::string cat1 = (tmp.path / "cat1").string();
    REQUIRE(run_cmd("enum --nmax 6 --out " + cat1, out_file) == 0);
    const std::string printed = slurp(out_file);
    CHECK(printed.find("n=5: 1 class, 1 GT") != std::string::npos);
    CHECK(printed.find("n=6: 4 classes, 3 GT") != std::string::npos);

    const std::string cat2 = (tmp.path / "cat2").string();
    REQUIRE(run_cmd("enum --nmax 6 --out " + cat2, out_file) == 0);
    CHECK(slurp(fs::path(cat1) / "n6" / "representatives.rs.txt") ==
          slurp(fs::path(cat2) / "n6" / "representatives.rs.txt"));
    CHECK(slurp(fs::path(cat1) / "n6" / "index.tsv") ==
          slurp(fs::path(cat2) / "n6" / "index.tsv"));

    Catalog loaded = load_catalog(cat1, 6);
    CHECK(loaded.entries.size() == 4);
    CHECK(loaded.gt_count() == 3);

    // Without --out nothing is persisted.
    const fs::path probe = tmp.path / "probe";
    fs::create_directories(probe);
    const std::string cmd = "cd " + probe.string() + " && " + kBinary + " enum --nmax 5 > /dev/null 2>&1";
    REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
    CHECK_FALSE(fs::exists(probe / "n5"));
}

TEST_CASE("xval agreement run and render") {
    TempDir tmp;
    const std::string report_file = (tmp.path / "x.json").string();
    REQUIRE(run_cmd("xval -n 6 --count 15 --seed 2 --json", report_file) == 0);
    auto report = nlohmann::json::parse(slurp(report_file));
    CHECK(report["agreements"] == 15);

    REQUIRE(run_cmd("gen --kind points -n 6 --seed 4 --out " + tmp.path.string()) == 0);
    const std::string svg = (tmp.path / "out.svg").string();
    REQUIRE(run_cmd("render " + (tmp.path / "points_n6_s4.points.txt").string() + " --out " +
                    svg) == 0);
    CHECK(slurp(svg).find("<svg") != std::string::npos);
}
