#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "gtwist/enumeration.hpp"
#include "gtwist/geometry_io.hpp"
#include "gtwist/io.hpp"
#include "gtwist/k4.hpp"
#include "gtwist/radial.hpp"
#include "gtwist/recognizer.hpp"
#include "gtwist/rng.hpp"
#include "gtwist/svg.hpp"

namespace gtwist::cli {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

constexpr const char* kReportSchema = "gtwist-report/1";

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

json witness_json(const Witness& w) {
    json out;
    if (const auto* bad = std::get_if<BadFiveSubset>(&w)) {
        out["kind"] = "bad-five-subset";
        out["subset"] = bad->subset;
    } else if (const auto* stc = std::get_if<StarTriangleCount>(&w)) {
        out["kind"] = "star-triangle-count";
        out["vertex"] = stc->vertex;
        out["count"] = stc->count;
    } else if (const auto* nvp = std::get_if<NoValidPair>(&w)) {
        out["kind"] = "no-valid-pair";
        json tried = json::array();
        for (auto& [a, b] : nvp->tried) tried.push_back({a, b});
        out["tried"] = tried;
    } else if (const auto* exc = std::get_if<ExceptionalCase>(&w)) {
        out["kind"] = "exceptional-k6";
        out["detail"] = exc->detail;
    }
    return out;
}

std::string witness_text(const Witness& w) {
    std::ostringstream out;
    if (const auto* bad = std::get_if<BadFiveSubset>(&w)) {
        out << "five-vertex subsystem {";
        for (int i = 0; i < 5; ++i) out << (i ? "," : "") << bad->subset[i];
        out << "} is not T5";
    } else if (const auto* stc = std::get_if<StarTriangleCount>(&w)) {
        out << "vertex " << stc->vertex << " has " << stc->count
            << " empty star triangles (generalized twisted needs exactly 2)";
    } else if (const auto* nvp = std::get_if<NoValidPair>(&w)) {
        out << "no candidate vertex pair admits a valid bipartition (" << nvp->tried.size()
            << " pairs tried)";
    } else if (const auto* exc = std::get_if<ExceptionalCase>(&w)) {
        out << "exceptional case: " << exc->detail;
    }
    return out.str();
}

// Re-check emitted evidence; an emitted certificate or witness that fails its
// own re-verification is an internal error.
void require_evidence_sound(const RotationSystem& rs, const GtDecision& d) {
    if (d.gt) {
        if (!d.certificate || !verify_certificate(rs, *d.certificate))
            throw std::logic_error("internal error: emitted certificate does not verify");
    } else if (d.witness) {
        if (const auto* bad = std::get_if<BadFiveSubset>(&*d.witness)) {
            if (is_t5_subset(rs, bad->subset))
                throw std::logic_error("internal error: BadFiveSubset witness re-checks as T5");
        } else if (const auto* stc = std::get_if<StarTriangleCount>(&*d.witness)) {
            if (static_cast<int>(empty_star_triangles_at(rs, stc->vertex).size()) != stc->count ||
                stc->count == 2)
                throw std::logic_error("internal error: StarTriangleCount witness mismatch");
        }
    }
}

struct InstancePool {
    // Mixed realizable instances at one size: radial (monotone family),
    // convex, random point sets, enumeration-catalog members, and
    // single-vertex-deleted GT instances.
    std::vector<std::pair<std::string, RotationSystem>> make(int n, int count,
                                                             std::uint64_t seed) {
        Rng rng(seed);
        std::vector<std::pair<std::string, RotationSystem>> out;
        if (n <= 8 && catalogs.empty()) catalogs = build_catalogs(std::max(5, n));
        int catalog_at = 0;
        for (int i = 0; i < count; ++i) {
            switch (i % 5) {
                case 0:
                    out.emplace_back("radial",
                                     radial_rotation_system(monotone_radial(n, rng.u64())));
                    break;
                case 1:
                    out.emplace_back("convex",
                                     straightline_rotation_system(convex_points(n)));
                    break;
                case 2:
                    out.emplace_back("points", straightline_rotation_system(
                                                   random_points(n, rng.u64())));
                    break;
                case 3: {
                    if (n >= 5 && n <= 8) {
                        const auto& entries = catalogs[static_cast<size_t>(n) - 5].entries;
                        out.emplace_back("catalog",
                                         entries[catalog_at++ % entries.size()].representative);
                    } else {
                        out.emplace_back("radial", radial_rotation_system(
                                                       monotone_radial(n, rng.u64())));
                    }
                    break;
                }
                default: {
                    auto big = radial_rotation_system(monotone_radial(n + 1, rng.u64()));
                    std::vector<Vertex> keep;
                    const Vertex drop = static_cast<Vertex>(rng.uniform(0, n));
                    for (Vertex v = 0; v <= n; ++v)
                        if (v != drop) keep.push_back(v);
                    out.emplace_back("deleted-gt", induced_subsystem(big, keep));
                    break;
                }
            }
        }
        return out;
    }

    std::vector<Catalog> catalogs;
};

// Least-squares slope of log(time) against log(n).
double fit_exponent(const std::vector<std::pair<double, double>>& n_vs_time) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(n_vs_time.size());
    for (auto& [n, t] : n_vs_time) {
        const double x = std::log(n), y = std::log(t);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

int cmd_check(const std::string& path, const std::string& mode, bool as_json) {
    const auto started = Clock::now();
    std::string text;
    ParsedRotationSystem parsed = [&] {
        text = slurp_file(path);
        return parse_rotation_system(text);
    }();
    const RotationSystem& rs = parsed.rs;

    GtDecision decision;
    try {
        decision = (mode == "realizable") ? recognize_realizable(rs) : recognize_abstract(rs);
    } catch (const NotRealizableError& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "note: the input is outside the realizable-mode contract; for"
                     " non-realizable rotation systems the two-step algorithm's answer"
                     " can depend on the choice of the start vertex, so no verdict is"
                     " reported\n";
        return kExitPrecondition;
    }
    require_evidence_sound(rs, decision);

    if (as_json) {
        json report;
        report["schema"] = kReportSchema;
        report["command"] = "check";
        report["mode"] = mode;
        report["input"] = {{"path", path}, {"digest", hex64(fnv1a64(text))}, {"n", rs.n()}};
        report["gt"] = decision.gt;
        if (decision.certificate) {
            report["certificate"] = {{"v1", decision.certificate->v1},
                                     {"v2", decision.certificate->v2},
                                     {"A", decision.certificate->A},
                                     {"B", decision.certificate->B}};
        }
        if (decision.witness) report["witness"] = witness_json(*decision.witness);
        report["timing_ms"] = ms_since(started);
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << path << ": n=" << rs.n() << ", " << mode << " mode\n";
        if (decision.gt) {
            const auto& c = *decision.certificate;
            std::cout << "generalized twisted: yes\n"
                      << "certificate: v1=" << c.v1 << " v2=" << c.v2 << " A={";
            for (size_t i = 0; i < c.A.size(); ++i) std::cout << (i ? "," : "") << c.A[i];
            std::cout << "} B={";
            for (size_t i = 0; i < c.B.size(); ++i) std::cout << (i ? "," : "") << c.B[i];
            std::cout << "}\n";
        } else {
            std::cout << "generalized twisted: no\n"
                      << "witness: " << witness_text(*decision.witness) << "\n";
        }
    }
    return kExitOk;
}

int cmd_gen(const std::string& kind, int n, std::uint64_t seed, const std::string& out_dir,
            bool svg) {
    std::filesystem::create_directories(out_dir);
    const std::string stem =
        out_dir + "/" + kind + "_n" + std::to_string(n) + "_s" + std::to_string(seed);
    std::vector<std::string> written;

    RotationSystem rs = [&]() -> RotationSystem {
        if (kind == "radial" || kind == "twisted") {
            RadialDrawing d =
                (kind == "radial") ? random_radial(n, seed) : monotone_radial(n, seed);
            write_text_file(stem + ".radial.txt", serialize_radial(d));
            written.push_back(stem + ".radial.txt");
            if (svg) {
                write_text_file(stem + ".svg", render_svg(d));
                written.push_back(stem + ".svg");
            }
            return radial_rotation_system(d);
        }
        PointSet ps = (kind == "convex") ? convex_points(n) : random_points(n, seed);
        write_text_file(stem + ".points.txt", serialize_points(ps));
        written.push_back(stem + ".points.txt");
        if (svg) {
            write_text_file(stem + ".svg", render_svg(ps));
            written.push_back(stem + ".svg");
        }
        return straightline_rotation_system(ps);
    }();

    write_text_file(stem + ".rs.txt", serialize(rs));
    written.push_back(stem + ".rs.txt");
    for (const auto& f : written) std::cout << f << "\n";
    return kExitOk;
}

int cmd_enum(int n_max, const std::string& out_dir) {
    auto catalogs = build_catalogs(n_max);
    for (const Catalog& c : catalogs) {
        std::cout << "n=" << c.n << ": " << c.entries.size()
                  << (c.entries.size() == 1 ? " class, " : " classes, ") << c.gt_count()
                  << " GT\n";
    }
    if (!out_dir.empty()) {
        // Stable run id keeps reruns byte-identical.
        const std::string run_id = "enum-nmax" + std::to_string(n_max);
        for (const Catalog& c : catalogs) save_catalog(c, out_dir, run_id);
        std::cout << "catalogs written to " << out_dir << "\n";
    }
    return kExitOk;
}

int cmd_xval(int n, int count, std::uint64_t seed, bool as_json, int inject_flip) {
    const auto started = Clock::now();
    InstancePool pool;
    auto instances = pool.make(n, count, seed);
    int index = 0;
    for (const auto& [kind, rs] : instances) {
        GtDecision abstract = recognize_abstract(rs);
        GtDecision realizable = recognize_realizable(rs);
        require_evidence_sound(rs, abstract);
        require_evidence_sound(rs, realizable);
        bool abstract_gt = abstract.gt;
        if (index == inject_flip) abstract_gt = !abstract_gt;  // harness self-test
        if (abstract_gt != realizable.gt) {
            std::cerr << "DISAGREEMENT on instance " << index << " (" << kind << ", n=" << n
                      << "): abstract=" << (abstract_gt ? "gt" : "not-gt")
                      << " realizable=" << (realizable.gt ? "gt" : "not-gt") << "\n"
                      << serialize(rs);
            return kExitDisagreement;
        }
        ++index;
    }
    if (as_json) {
        json report;
        report["schema"] = kReportSchema;
        report["command"] = "xval";
        report["n"] = n;
        report["count"] = count;
        report["seed"] = seed;
        report["agreements"] = index;
        report["timing_ms"] = ms_since(started);
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "xval n=" << n << " count=" << count << ": all " << index << " agree\n";
    }
    return kExitOk;
}

int cmd_bench(std::vector<int> sizes, std::uint64_t seed, bool as_json) {
    if (sizes.empty()) sizes = {250, 500, 1000, 2000};
    std::sort(sizes.begin(), sizes.end());
    Rng rng(seed);

    json report;
    report["schema"] = kReportSchema;
    report["command"] = "bench";

    std::vector<std::pair<double, double>> realizable_fit;
    json realizable_rows = json::array();
    for (int n : sizes) {
        auto rs = radial_rotation_system(monotone_radial(n, rng.u64()));
        double best = 1e100;
        for (int rep = 0; rep < 3; ++rep) {
            const auto t0 = Clock::now();
            GtDecision d = recognize_realizable(rs);
            best = std::min(best, ms_since(t0));
            if (!d.gt) throw std::logic_error("bench: monotone instance not recognized as GT");
        }
        realizable_fit.emplace_back(n, best);
        realizable_rows.push_back({{"n", n}, {"ms", best}});
        if (!as_json)
            std::printf("realizable  n=%-6d %10.3f ms\n", n, best);
    }
    const double real_exp = fit_exponent(realizable_fit);

    std::vector<std::pair<double, double>> abstract_fit;
    json abstract_rows = json::array();
    for (int n = 7; n <= 12; ++n) {
        auto rs = radial_rotation_system(monotone_radial(n, rng.u64()));
        if (!recognize_abstract(rs).gt)  // warmup
            throw std::logic_error("bench: monotone instance not GT");
        double per_call = 1e100;
        for (int round = 0; round < 3; ++round) {
            // Repeat until the clock resolution stops mattering.
            int reps = 1;
            for (;;) {
                const auto t0 = Clock::now();
                for (int r = 0; r < reps; ++r) {
                    GtDecision d = recognize_abstract(rs);
                    if (!d.gt) throw std::logic_error("bench: monotone instance not GT");
                }
                const double elapsed = ms_since(t0);
                if (elapsed > 100.0) {
                    per_call = std::min(per_call, elapsed / reps);
                    break;
                }
                reps *= 4;
            }
        }
        abstract_fit.emplace_back(n, per_call);
        abstract_rows.push_back({{"n", n}, {"ms", per_call}});
        if (!as_json)
            std::printf("abstract    n=%-6d %10.5f ms\n", n, per_call);
    }
    const double abs_exp = fit_exponent(abstract_fit);

    if (as_json) {
        report["realizable"] = {{"rows", realizable_rows}, {"exponent", real_exp}};
        report["abstract"] = {{"rows", abstract_rows}, {"exponent", abs_exp}};
        std::cout << report.dump(2) << "\n";
    } else {
        std::printf("empirical exponent, realizable path: %.2f\n", real_exp);
        std::printf("empirical exponent, abstract path:   %.2f\n", abs_exp);
    }
    return kExitOk;
}

int cmd_render(const std::string& path, const std::string& out) {
    const std::string text = slurp_file(path);
    std::string svg;
    try {
        svg = render_svg(parse_radial(text));
    } catch (const ParseError&) {
        svg = render_svg(parse_points(text));
    }
    write_text_file(out, svg);
    std::cout << out << "\n";
    return kExitOk;
}

}  // namespace

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

int run(int argc, const char* const* argv) {
    CLI::App app{"generalized twisted rotation systems: recognizers, generators, enumeration"};
    app.require_subcommand(1);

    std::string path, mode = "abstract", gen_out = ".", enum_out, out_file = "out.svg", kind;
    std::uint64_t seed = 1;
    int n = 0, count = 100, n_max = kEnumerationDefaultMaxN, inject_flip = -1;
    bool as_json = false, svg = false;
    std::vector<int> sizes;

    auto* check = app.add_subcommand("check", "decide whether a rotation system is GT");
    check->add_option("file", path, "rotation system file (.rs.txt)")->required();
    check->add_option("--mode", mode, "abstract (O(n^5)) or realizable (O(n^2))")
        ->check(CLI::IsMember({"abstract", "realizable"}));
    check->add_flag("--json", as_json, "machine-readable report");

    auto* gen = app.add_subcommand("gen", "generate an instance with ground truth");
    gen->add_option("--kind", kind, "radial | twisted | convex | points")
        ->required()
        ->check(CLI::IsMember({"radial", "twisted", "convex", "points"}));
    gen->add_option("-n", n, "vertex count")->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", seed, "RNG seed");
    gen->add_option("--out", gen_out, "output directory");
    gen->add_flag("--svg", svg, "also write an SVG rendering");

    auto* enum_cmd = app.add_subcommand("enum", "enumerate all-T5 classes per n");
    enum_cmd->add_option("--nmax", n_max, "largest n (5..9)");
    enum_cmd->add_option("--out", enum_out, "catalog directory to persist into");

    auto* xval = app.add_subcommand("xval", "cross-validate the two recognizers");
    xval->add_option("-n", n, "instance size")->required()->check(CLI::PositiveNumber);
    xval->add_option("--count", count, "number of instances");
    xval->add_option("--seed", seed, "RNG seed");
    xval->add_flag("--json", as_json, "machine-readable report");
    xval->add_option("--inject-flip", inject_flip, "flip one verdict (harness self-test)")
        ->group("");  // hidden

    auto* bench = app.add_subcommand("bench", "timing and empirical scaling exponents");
    bench->add_option("--sizes", sizes, "realizable-path sizes")->delimiter(',');
    bench->add_option("--seed", seed, "RNG seed");
    bench->add_flag("--json", as_json, "machine-readable report");

    auto* render = app.add_subcommand("render", "render a drawing file to SVG");
    render->add_option("file", path, "drawing parameter or point file")->required();
    render->add_option("--out", out_file, "output SVG path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (check->parsed()) return cmd_check(path, mode, as_json);
        if (gen->parsed()) return cmd_gen(kind, n, seed, gen_out, svg);
        if (enum_cmd->parsed()) return cmd_enum(n_max, enum_out);
        if (xval->parsed()) return cmd_xval(n, count, seed, as_json, inject_flip);
        if (bench->parsed()) return cmd_bench(sizes, seed, as_json);
        if (render->parsed()) return cmd_render(path, out_file);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const NotRealizableError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const GenerationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return kExitUsage;
}

}  // namespace gtwist::cli
