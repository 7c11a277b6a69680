// Command-line front end: instance generation, builders, verification,
// bound tables and SVG rendering. Artifacts go to files or stdout,
// diagnostics to stderr.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "cofinite/cofinite.hpp"

namespace {

using namespace cofinite;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(Errc::ParseError, "cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(Errc::ParseError, "cannot write '" + path + "'");
    }
    out << text;
}

Instance load_instance(const std::string& path)
{
    return json::parse_text(read_file(path), [](const json::Json& j) { return json::parse_instance(j); });
}

Cover load_cover(const std::string& path)
{
    return json::parse_text(read_file(path), [](const json::Json& j) { return json::parse_cover(j); });
}

std::string report_summary(const CoverReport& r)
{
    std::ostringstream out;
    out << (r.passed() ? "PASS" : "FAIL") << " faces=" << r.faces_checked << " multiplicity={";
    bool first = true;
    for (const auto& [k, v] : r.multiplicity) {
        out << (first ? "" : ",") << k << ":" << v;
        first = false;
    }
    out << "} witnesses=" << r.witnesses.size() << '\n';
    for (const auto& w : r.witnesses) {
        out << "  " << violation_name(w.kind) << ' ' << to_string(w.point) << '\n';
    }
    return out.str();
}

InstanceKind parse_kind(const std::string& s)
{
    if (s == "convex") return InstanceKind::Convex;
    if (s == "general") return InstanceKind::General;
    throw Error(Errc::ParseError, "unknown instance kind '" + s + "' (convex|general)");
}

Setting require_setting(const std::string& s)
{
    auto m = parse_setting(s);
    if (!m) {
        throw Error(Errc::ParseError, "unknown mode '" + s + "'");
    }
    return *m;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Convex covers of the plane minus a finite point set"};
    app.require_subcommand(1);

    long n = 0;
    long k = 2;
    std::uint64_t seed = 0;
    std::string mode = "disjoint";
    std::optional<long> bound;
    std::string in;
    std::string out;
    std::string format;
    std::string kind;
    std::string kind_override;
    std::string report_path;
    std::size_t samples = 10000;

    auto* gen = app.add_subcommand("gen", "Generate a seeded instance");
    gen->add_option("--n", n, "Number of points")->required()->check(CLI::NonNegativeNumber);
    gen->add_option("--seed", seed, "Random seed");
    gen->add_option("--kind", kind, "convex | general")->default_val("general");
    gen->add_option("--bound", bound, "Coordinate bound")->check(CLI::PositiveNumber);
    gen->add_option("--out", out, "Output file (default stdout)");

    auto* build = app.add_subcommand("build", "Build a cover for an instance file");
    build->add_option("--mode", mode, "convex | disjoint | general")->required();
    build->add_option("--in", in, "Instance JSON")->required();
    build->add_option("--out", out, "Output file (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "Verify a cover file exactly and by sampling");
    verify_cmd->add_option("--in", in, "Cover JSON")->required();
    verify_cmd->add_option("--samples", samples, "Monte-Carlo samples (0 skips)");
    verify_cmd->add_option("--seed", seed, "Sampling seed");
    verify_cmd->add_option("--format", format, "json | text")->default_val("text");
    verify_cmd->add_option("--out", out, "Report file (default stdout)");

    auto* pipeline = app.add_subcommand("pipeline", "Generate, build and verify");
    pipeline->add_option("--mode", mode, "convex | disjoint | general | grid")->required();
    pipeline->add_option("--n", n, "Number of points")->check(CLI::NonNegativeNumber);
    pipeline->add_option("--k", k, "Grid side for the grid mode");
    pipeline->add_option("--seed", seed, "Random seed");
    pipeline->add_option("--bound", bound, "Coordinate bound")->check(CLI::PositiveNumber);
    pipeline->add_option("--kind", kind_override, "Instance kind override: convex | general");
    pipeline->add_option("--in", in, "Instance JSON instead of generation");
    pipeline->add_option("--samples", samples, "Monte-Carlo samples");
    pipeline->add_option("--out", out, "Directory for instance/cover/report JSON");
    pipeline->add_option("--format", format, "text | json | svg")->default_val("text");

    auto* table = app.add_subcommand("table", "Region-count targets for n = 0..N");
    table->add_option("--n", n, "Largest n")->required()->check(CLI::NonNegativeNumber);
    table->add_option("--format", format, "text | json")->default_val("text");
    table->add_option("--out", out, "Output file (default stdout)");

    auto* grid = app.add_subcommand("grid", "Strip encapsulation of the K x K grid minus its even points");
    grid->add_option("--k", k, "Grid side")->required();
    grid->add_option("--format", format, "json | svg | text")->default_val("text");
    grid->add_option("--out", out, "Output file (default stdout)");

    auto* render = app.add_subcommand("render", "Render a cover file as SVG");
    render->add_option("--in", in, "Cover JSON")->required();
    render->add_option("--report", report_path, "Report JSON whose witnesses are marked");
    render->add_option("--out", out, "SVG file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    try {
        if (*gen) {
            Instance inst = gen_instance(n, seed, parse_kind(kind), bound);
            write_output(out, json::dump(json::emit(inst)));
            return kExitPass;
        }
        if (*build) {
            Cover cover = build_for(require_setting(mode), load_instance(in));
            write_output(out, json::dump(json::emit(cover)));
            std::cerr << cover.builder << ": " << cover.regions.size() << " regions\n";
            return kExitPass;
        }
        if (*verify_cmd) {
            Cover cover = load_cover(in);
            CoverReport report = verify(cover);
            bool ok = report.passed();
            if (samples > 0) {
                CoverReport mc = monte_carlo_check(cover, samples, seed);
                std::cerr << "sampled: " << report_summary(mc);
                ok = ok && mc.passed();
            }
            write_output(out, format == "json" ? json::dump(json::emit(report)) : report_summary(report));
            return ok ? kExitPass : kExitFail;
        }
        if (*pipeline) {
            RunConfig cfg;
            cfg.mode = require_setting(mode);
            cfg.n = n;
            cfg.k = k;
            cfg.seed = seed;
            cfg.bound = bound;
            cfg.samples = samples;
            if (!kind_override.empty()) {
                cfg.kind = parse_kind(kind_override);
            }
            if (!in.empty()) {
                cfg.instance = load_instance(in);
            }
            PipelineResult res = run_pipeline(cfg);
            std::cerr << res.message << '\n';
            if (!res.cover) {
                return res.exit_code;
            }
            const CoverReport& primary = res.exact ? *res.exact : *res.sampled;
            if (!out.empty()) {
                std::filesystem::create_directories(out);
                const std::filesystem::path dir(out);
                write_output((dir / "instance.json").string(), json::dump(json::emit(res.cover->instance)));
                write_output((dir / "cover.json").string(), json::dump(json::emit(*res.cover)));
                write_output((dir / "report.json").string(), json::dump(json::emit(primary)));
                write_output((dir / "montecarlo.json").string(), json::dump(json::emit(*res.sampled)));
                if (format == "svg") {
                    write_output((dir / "cover.svg").string(), render_svg(*res.cover, &primary));
                }
            } else if (format == "json") {
                write_output("", json::dump(json::emit(primary)));
            } else if (format == "svg") {
                write_output("", render_svg(*res.cover, &primary));
            } else {
                write_output("", report_summary(primary));
            }
            return res.exit_code;
        }
        if (*table) {
            auto rows = run_table(n);
            write_output(out, format == "json" ? json::dump(table_json(rows)) : table_text(rows));
            return kExitPass;
        }
        if (*grid) {
            auto [inst, cover] = build_grid_encapsulation(k);
            CoverReport report = verify(cover);
            if (format == "json") {
                write_output(out, json::dump(json::emit(cover)));
            } else if (format == "svg") {
                write_output(out, render_svg(cover, &report));
            } else {
                write_output(out, report_summary(report));
            }
            std::cerr << "grid K=" << k << ": " << inst.size() << " points, " << cover.regions.size()
                      << " regions, " << (report.passed() ? "PASS" : "FAIL") << '\n';
            return report.passed() ? kExitPass : kExitFail;
        }
        if (*render) {
            Cover cover = load_cover(in);
            std::optional<CoverReport> report;
            if (!report_path.empty()) {
                report = json::parse_text(read_file(report_path),
                                          [](const json::Json& j) { return json::parse_report(j); });
            }
            write_output(out, render_svg(cover, report ? &*report : nullptr));
            return kExitPass;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitInvalid;
}
