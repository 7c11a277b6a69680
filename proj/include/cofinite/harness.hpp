#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cofinite/constructions.hpp"
#include "cofinite/error.hpp"
#include "cofinite/geometry.hpp"
#include "cofinite/json_io.hpp"
#include "cofinite/verifier.hpp"

namespace cofinite {

enum class InstanceKind { Convex, General };

inline const char* kind_name(InstanceKind k) { return k == InstanceKind::Convex ? "convex" : "general"; }

inline const char* setting_name(Setting s)
{
    switch (s) {
    case Setting::ConvexCover: return "CONVEX_COVER";
    case Setting::DisjointCover: return "DISJOINT_COVER";
    case Setting::GeneralCoverUb: return "GENERAL_COVER_UB";
    case Setting::GridEnc: return "GRID_ENC";
    }
    return "?";
}

inline std::optional<Setting> parse_setting(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return c == '-' ? '_' : std::toupper(c); });
    for (Setting m : {Setting::ConvexCover, Setting::DisjointCover, Setting::GeneralCoverUb, Setting::GridEnc}) {
        if (s == setting_name(m)) {
            return m;
        }
    }
    if (s == "CONVEX") return Setting::ConvexCover;
    if (s == "DISJOINT") return Setting::DisjointCover;
    if (s == "GENERAL") return Setting::GeneralCoverUb;
    if (s == "GRID") return Setting::GridEnc;
    return std::nullopt;
}

/// Smallest box side that makes rejection sampling practical. Convex
/// instances sit near a circle and need room for the turn at every vertex
/// to survive rounding to the lattice.
inline long default_bound(long n, InstanceKind kind)
{
    long floor = std::max(16L, 4 * n);
    return kind == InstanceKind::Convex ? std::max(floor, 8 * n * n) : floor;
}

inline std::string instance_label(InstanceKind kind, long n, std::uint64_t seed, long bound)
{
    return std::string(kind_name(kind)) + "-n" + std::to_string(n) + "-s" + std::to_string(seed) + "-b"
         + std::to_string(bound);
}

namespace detail {

// Rounds to the nearest integer, halves away from zero.
inline BigInt round_nearest(const Rational& r)
{
    BigInt twice = (2 * r.get_num() + (sign(r) >= 0 ? r.get_den() : -r.get_den()));
    BigInt q;
    mpz_tdiv_q(q.get_mpz_t(), twice.get_mpz_t(), BigInt(2 * r.get_den()).get_mpz_t());
    return q;
}

// q joins pts without creating a collinear triple: the directions from q to
// the existing points are pairwise non-parallel.
inline bool keeps_general_position(const std::vector<Point>& pts, const Point& q)
{
    std::vector<std::pair<BigInt, BigInt>> dirs;
    dirs.reserve(pts.size());
    for (const auto& p : pts) {
        if (p == q) {
            return false;
        }
        dirs.push_back(primitive_direction(q, p));
    }
    std::sort(dirs.begin(), dirs.end());
    return std::adjacent_find(dirs.begin(), dirs.end()) == dirs.end();
}

} // namespace detail

/// Seeded integer points in [0, bound]^2, grown one point at a time; a
/// candidate is kept only if the set stays in general (and, for convex
/// instances, convex) position.
inline Instance gen_instance(long n, std::uint64_t seed, InstanceKind kind, std::optional<long> bound = std::nullopt)
{
    if (n < 0) {
        throw Error(Errc::EmptyInput, "negative point count");
    }
    const long b = bound ? *bound : default_bound(n, kind);
    if (b < 1) {
        throw Error(Errc::BoundTooSmall, "coordinate bound must be positive");
    }
    const std::string label = instance_label(kind, n, seed, b);
    std::mt19937_64 rng(seed);
    auto uniform = [&](std::uint64_t k) { return rng() % k; };

    std::vector<Point> pts;
    const std::size_t budget = 1000 + 400 * static_cast<std::size_t>(n);
    std::size_t attempts = 0;
    // Circle through the box with integer centre, parametrised rationally:
    // ((M^2 - k^2), 2kM) / (M^2 + k^2) with an independent sign on x.
    const long radius = b / 2;
    const long resolution = 1L << 20;
    while (static_cast<long>(pts.size()) < n) {
        if (attempts++ >= budget) {
            throw Error(Errc::BoundTooSmall, "could not place " + std::to_string(n) + " points in [0," + std::to_string(b)
                                                 + "]^2 after " + std::to_string(budget) + " attempts");
        }
        Point q;
        if (kind == InstanceKind::General) {
            q = Point(static_cast<long>(uniform(b + 1)), static_cast<long>(uniform(b + 1)));
        } else {
            const long k = static_cast<long>(uniform(2 * resolution + 1)) - resolution;
            const long flip = uniform(2) == 0 ? 1 : -1;
            const Rational m2(BigInt(resolution) * resolution);
            const Rational k2(BigInt(k) * k);
            const Rational den = m2 + k2;
            const Rational cx = flip * radius * (m2 - k2) / den;
            const Rational cy = radius * Rational(2 * BigInt(k) * resolution) / den;
            q = Point(Rational(detail::round_nearest(cx) + radius), Rational(detail::round_nearest(cy) + radius));
        }
        if (!detail::keeps_general_position(pts, q)) {
            continue;
        }
        if (kind == InstanceKind::Convex && pts.size() >= 3) {
            std::vector<Point> grown = pts;
            grown.push_back(q);
            if (convex_hull(grown).size() != grown.size()) {
                continue;
            }
        }
        pts.push_back(std::move(q));
    }
    return Instance(std::move(pts), label);
}

//---------------------------------------------------------------------------//
// Bounds table
//---------------------------------------------------------------------------//

struct TableRow {
    long n;
    long convex;
    long disjoint;
    long general_ub;
    std::optional<long> grid; // K = n, defined from 2
};

inline std::vector<TableRow> run_table(long n_max)
{
    if (n_max < 0) {
        throw Error(Errc::EmptyInput, "table size must be nonnegative");
    }
    std::vector<TableRow> rows;
    for (long n = 0; n <= n_max; ++n) {
        rows.push_back({n, target_count(n, Setting::ConvexCover), target_count(n, Setting::DisjointCover),
                        target_count(n, Setting::GeneralCoverUb),
                        n >= 2 ? std::optional<long>(target_count(n, Setting::GridEnc)) : std::nullopt});
    }
    return rows;
}

inline std::string table_text(const std::vector<TableRow>& rows)
{
    std::ostringstream out;
    out << "n\tconvex\tdisjoint\tgeneralUB\tgrid(K=n)\n";
    for (const auto& r : rows) {
        out << r.n << '\t' << r.convex << '\t' << r.disjoint << '\t' << r.general_ub << '\t'
            << (r.grid ? std::to_string(*r.grid) : "-") << '\n';
    }
    return out.str();
}

inline json::Json table_json(const std::vector<TableRow>& rows)
{
    json::Json out = json::Json::array();
    for (const auto& r : rows) {
        json::Json row = {{"n", r.n}, {"convex", r.convex}, {"disjoint", r.disjoint}, {"generalUB", r.general_ub}};
        row["grid"] = r.grid ? json::Json(*r.grid) : json::Json(nullptr);
        out.push_back(std::move(row));
    }
    return out;
}

//---------------------------------------------------------------------------//
// Pipeline
//---------------------------------------------------------------------------//

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitInvalid = 2, kExitOverTarget = 3 };

struct RunConfig {
    Setting mode = Setting::DisjointCover;
    long n = 0;
    long k = 2;
    std::uint64_t seed = 0;
    std::optional<long> bound;
    std::optional<InstanceKind> kind;
    std::optional<Instance> instance; // overrides generation
    std::size_t samples = 10000;
    /// Largest instance verified exactly; above it only Monte-Carlo runs.
    std::size_t exact_limit = 30;
};

struct PipelineResult {
    int exit_code = kExitInvalid;
    std::string message;
    std::optional<Cover> cover;
    std::optional<CoverReport> exact;
    std::optional<CoverReport> sampled;
    long target = 0;
};

inline Cover build_for(Setting mode, const Instance& inst)
{
    switch (mode) {
    case Setting::ConvexCover: return build_convex_cover(inst);
    case Setting::DisjointCover: return build_disjoint_cover(inst);
    case Setting::GeneralCoverUb: return build_general_cover(inst);
    case Setting::GridEnc: break;
    }
    throw Error(Errc::ParseError, "the grid setting takes a side K, not an instance");
}

/// gen -> build -> verify. Builder preconditions and malformed input map to
/// kExitInvalid; a failed exact or sampled check to kExitFail; more regions
/// than the target to kExitOverTarget.
inline PipelineResult run_pipeline(const RunConfig& cfg)
{
    PipelineResult res;
    try {
        if (cfg.mode == Setting::GridEnc) {
            auto built = build_grid_encapsulation(cfg.k);
            res.cover = std::move(built.second);
            res.target = target_count(cfg.k, Setting::GridEnc);
        } else {
            InstanceKind kind = cfg.kind ? *cfg.kind
                                         : (cfg.mode == Setting::ConvexCover ? InstanceKind::Convex : InstanceKind::General);
            Instance inst = cfg.instance ? *cfg.instance : gen_instance(cfg.n, cfg.seed, kind, cfg.bound);
            res.cover = build_for(cfg.mode, inst);
            res.target = target_count(static_cast<long>(inst.size()), cfg.mode);
        }
    } catch (const Error& e) {
        res.exit_code = kExitInvalid;
        res.message = e.what();
        return res;
    }

    const Cover& cover = *res.cover;
    const bool exact = cover.claim.mode == CoverMode::Encapsulate || cover.instance.size() <= cfg.exact_limit;
    if (exact) {
        res.exact = verify(cover);
    }
    res.sampled = monte_carlo_check(cover, cfg.samples, cfg.seed);

    const long count = static_cast<long>(cover.regions.size());
    std::ostringstream msg;
    msg << setting_name(cfg.mode) << " '" << cover.instance.label() << "': " << count << " regions (target "
        << res.target << "), exact " << (res.exact ? (res.exact->passed() ? "PASS" : "FAIL") : "skipped")
        << ", sampled " << (res.sampled->passed() ? "PASS" : "FAIL");
    res.message = msg.str();
    if ((res.exact && !res.exact->passed()) || !res.sampled->passed()) {
        res.exit_code = kExitFail;
    } else if (count > res.target) {
        res.exit_code = kExitOverTarget;
    } else {
        res.exit_code = kExitPass;
    }
    return res;
}

} // namespace cofinite
