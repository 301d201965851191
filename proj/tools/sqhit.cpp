// Command-line surface: generation, exact solving, approximation runs with
// certified bounds, witness verification, hitter certification, adversarial
// falsification, and a bench harness. All randomness sits behind --seed;
// identical seeds produce identical output bytes.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sqhit/approx.hpp"
#include "sqhit/constructions.hpp"
#include "sqhit/exact.hpp"
#include "sqhit/geometry.hpp"
#include "sqhit/hitters.hpp"
#include "sqhit/io.hpp"
#include "sqhit/patches.hpp"

namespace {

using namespace sqhit;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& bytes) {
    if (path.empty() || path == "-") {
        std::cout << bytes;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open output file: " + path);
    out << bytes;
}

std::optional<Tolerance> env_tolerance() {
    const char* v = std::getenv("SQHIT_TOLERANCE");
    if (!v) return std::nullopt;
    try {
        return Tolerance(std::stod(v));
    } catch (...) {
        throw SchemaError("SQHIT_TOLERANCE: not a valid tolerance");
    }
}

HitterKind parse_hit_mode(const std::string& mode) {
    if (mode == "ten-point") return HitterKind::TenPoint;
    if (mode == "six-point") return HitterKind::SixPointLeftmost;
    if (mode == "ap-4") return HitterKind::AxisParallel4;
    if (mode == "ap-2") return HitterKind::AxisParallelLeftmost2;
    if (mode == "twelve-cover") return HitterKind::TwelvePointCover;
    throw CLI::ValidationError("--mode", "unknown hitter mode: " + mode);
}

std::vector<Point> hitter_for(const Square& pivot, HitterKind kind, const Tolerance& tol) {
    switch (kind) {
        case HitterKind::TenPoint: return ten_point_hitter(pivot);
        case HitterKind::SixPointLeftmost: return six_point_hitter(pivot);
        case HitterKind::AxisParallel4: return axis_parallel_hitter(pivot, false, tol);
        case HitterKind::AxisParallelLeftmost2: return axis_parallel_hitter(pivot, true, tol);
        case HitterKind::TwelvePointCover: return twelve_point_cover_hitter(pivot, tol);
    }
    return {};
}

FalsifyConstraints constraints_for(const Square& pivot, HitterKind kind) {
    FalsifyConstraints c;
    switch (kind) {
        case HitterKind::TenPoint:
            c.side_lo = pivot.side;
            c.side_hi = 3.0 * pivot.side;
            break;
        case HitterKind::SixPointLeftmost:
            c.side_lo = c.side_hi = pivot.side;
            c.centre_right_of_pivot = true;
            break;
        case HitterKind::AxisParallel4:
            c.side_lo = pivot.side;
            c.side_hi = 3.0 * pivot.side;
            c.axis_parallel = true;
            break;
        case HitterKind::AxisParallelLeftmost2:
            c.side_lo = c.side_hi = pivot.side;
            c.axis_parallel = true;
            c.centre_right_of_pivot = true;
            break;
        case HitterKind::TwelvePointCover:
            c.side_lo = c.side_hi = pivot.side;
            break;
    }
    return c;
}

int run_gen(const std::string& name, int param, double shift, bool use_random, int n,
            double side_lo, double side_hi, const std::string& angle_mode, double window,
            std::uint64_t seed, const std::string& out_path) {
    SquareFamily fam;
    if (use_random) {
        AngleMode mode;
        if (angle_mode == "axis")
            mode = AngleMode::Axis;
        else if (angle_mode == "unit-rotated")
            mode = AngleMode::UnitRotated;
        else if (angle_mode == "free")
            mode = AngleMode::Free;
        else
            throw CLI::ValidationError("--angle-mode", "expected axis|unit-rotated|free");
        fam = random_family(n, side_lo, side_hi, mode, window, seed);
    } else if (name == "nine_square_tau3" && shift > 0.0) {
        fam = nine_square_tau3(shift).family;
    } else {
        try {
            fam = construction_by_name(name, param).family;
        } catch (const ConstructionInvalid& e) {
            throw CLI::ValidationError("--name", e.what());
        }
    }
    if (auto tol = env_tolerance()) fam.tol = *tol;
    write_output(out_path, write_instance(fam));
    return kExitOk;
}

int run_solve(const std::string& param, const std::string& in_path, bool force, bool timing,
              const std::string& out_path) {
    if (param != "tau" && param != "nu" && param != "chi" && param != "omega" &&
        param != "delta")
        throw CLI::ValidationError("--param", "expected tau|nu|chi|omega|delta");
    SquareFamily fam = read_instance(read_input(in_path));
    SolveLimits limits;
    limits.override_cap = force;
    const auto t0 = std::chrono::steady_clock::now();
    ExactResult res;
    if (param == "tau")
        res = exact_tau(fam, limits);
    else if (param == "nu")
        res = exact_nu(fam, limits);
    else if (param == "chi")
        res = exact_chi(fam, limits);
    else if (param == "omega")
        res = exact_omega(fam, limits);
    else if (param == "delta")
        res = max_degree_delta(fam);
    else
        throw CLI::ValidationError("--param", "expected tau|nu|chi|omega|delta");
    const auto t1 = std::chrono::steady_clock::now();

    ResultDocument doc;
    doc.operation = param;
    doc.instance_hash = instance_hash(fam);
    doc.value = res.value;
    doc.witness_points = res.witness_points;
    doc.witness_indices = res.witness_indices;
    doc.witness_colours = res.witness_colours;
    doc.parameters["nodes_explored"] = res.nodes_explored;
    if (timing)
        doc.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    write_output(out_path, write_result(doc));
    return kExitOk;
}

int run_approx(const std::string& op, const std::string& mode, const std::string& variant,
               const std::string& in_path, const std::string& out_path,
               const std::string& svg_path) {
    SquareFamily fam = read_instance(read_input(in_path));
    ResultDocument doc;
    doc.instance_hash = instance_hash(fam);
    SvgOverlays overlays;

    if (op == "hit") {
        const HitterKind kind = parse_hit_mode(mode);
        const HittingRun run = hit_greedy(fam, kind);
        doc.operation = "hit";
        doc.value = static_cast<int>(run.points.size());
        doc.witness_points = run.points;
        doc.bound = run.per_round_bound * static_cast<int>(run.rounds.size());
        doc.parameters["mode"] = mode;
        doc.parameters["rounds"] = run.rounds.size();
        doc.parameters["per_round_bound"] = run.per_round_bound;
        nlohmann::json pivots = nlohmann::json::array();
        for (const auto& round : run.rounds) pivots.push_back(round.pivot);
        doc.parameters["pivots"] = pivots;
        for (std::size_t r = 0; r < run.rounds.size(); ++r) {
            overlays.highlight_squares.push_back(run.rounds[r].pivot);
            for (const Point& p : run.rounds[r].points_added) {
                overlays.points.push_back(p);
                overlays.point_labels.push_back(static_cast<int>(r));
            }
        }
    } else if (op == "colour") {
        ColouringRun run;
        if (variant == "unit")
            run = colour_unit_squares(fam);
        else if (variant == "general")
            run = colour_squares(fam);
        else
            throw CLI::ValidationError("--variant", "expected unit|general");
        doc.operation = "colour";
        doc.value = run.k_used;
        doc.witness_colours = run.colour_of;
        doc.bound = run.bound;
        doc.parameters["variant"] = variant;
        overlays.colour_of = run.colour_of;
    } else {
        throw CLI::ValidationError("--op", "expected hit|colour");
    }

    if (!svg_path.empty()) write_output(svg_path, render_svg(fam, overlays));
    write_output(out_path, write_result(doc));
    return kExitOk;
}

int run_verify(const std::string& instance_path, const std::string& result_path) {
    SquareFamily fam = read_instance(read_input(instance_path));
    ResultDocument doc = read_result(read_input(result_path));
    std::string reason;
    if (verify_result(fam, doc, &reason)) {
        std::cout << "accepted\n";
        return kExitOk;
    }
    std::cerr << "rejected: " << reason << "\n";
    return kExitFailure;
}

int run_certify(const std::string& what) {
    if (what == "nine-gon") {
        const NineGonConfig cfg = derive_nine_gon();
        double max_gap = 0.0;
        for (int i = 0; i < 9; ++i) {
            const double next = i == 8 ? cfg.angles[0] + 2.0 * kPi : cfg.angles[i + 1];
            max_gap = std::max(max_gap, next - cfg.angles[i]);
        }
        std::printf("nine-gon margin %.6f largest-gap %.6f\n", cfg.margin, max_gap);
        return cfg.margin >= 1e-4 && max_gap < 1.0 ? kExitOk : kExitFailure;
    }
    if (what == "twelve-cover") {
        const double a = kSqrt2 + 1.0;
        std::vector<Point> centers;
        for (const Point& p : twelve_point_cover_hitter(Square({0, 0}, 1.0, 0.0)))
            centers.push_back(p);
        const CoverCheckResult res = cover_check(centers, 0.5, a, Tolerance{}, a / 2400.0);
        std::printf("twelve-cover covered %d margin %.6f\n", res.covered ? 1 : 0, res.margin);
        return res.covered && res.margin >= 1e-6 ? kExitOk : kExitFailure;
    }
    if (what == "six-point") {
        const double t = six_point_t();
        const double lhs1 = t * t + std::pow(0.5 - std::sqrt(0.25 - t * t), 2);
        const double rhs1 = std::pow((kSqrt2 - 1.0) / 2.0, 2);
        const double lhs2 = t * t + std::pow(kSqrt2 - 1.0, 2);
        std::printf("six-point t %.12f cond1 %.3e cond2 %.3e\n", t, lhs1 - rhs1, lhs2 - 0.25);
        return lhs1 <= rhs1 + 1e-12 && lhs2 <= 0.25 + 1e-12 ? kExitOk : kExitFailure;
    }
    throw CLI::ValidationError("--what", "expected nine-gon|twelve-cover|six-point");
}

int run_falsify(const std::string& mode, std::uint64_t seed, std::uint64_t budget,
                int pivot_angles) {
    const HitterKind kind = parse_hit_mode(mode);
    std::uint64_t found = 0;
    for (int a = 0; a < pivot_angles; ++a) {
        const double rot =
            (kind == HitterKind::AxisParallel4 || kind == HitterKind::AxisParallelLeftmost2)
                ? 0.0
                : kHalfPi * a / pivot_angles;
        const Square pivot({0.0, 0.0}, 1.0, rot);
        const auto points = hitter_for(pivot, kind, Tolerance{});
        const auto cons = constraints_for(pivot, kind);
        const auto cex = falsify_hitter(pivot, points, cons, budget / pivot_angles,
                                        seed + static_cast<std::uint64_t>(a));
        if (cex) {
            ++found;
            std::printf("counterexample pivot-rot %.6f square cx %.9f cy %.9f side %.9f rot %.9f\n",
                        rot, cex->centre.x, cex->centre.y, cex->side, cex->rot);
        }
    }
    std::printf("falsify %s: %llu counterexample(s) over %d pivot angle(s)\n", mode.c_str(),
                static_cast<unsigned long long>(found), pivot_angles);
    return found == 0 ? kExitOk : kExitFailure;
}

int run_bench(int instances, int max_n, std::uint64_t seed, const std::string& mode) {
    const bool unit = mode == "unit";
    if (!unit && mode != "free")
        throw CLI::ValidationError("--mode", "expected unit|free");
    std::printf("idx n nu tau approx ratio bound chi colours\n");
    bool ok = true;
    Rng rng(seed);
    for (int i = 0; i < instances; ++i) {
        const int n = 2 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_n - 1)));
        const SquareFamily fam =
            unit ? random_family(n, 1.0, 1.0, AngleMode::UnitRotated, 6.0, seed * 1000003ULL + i)
                 : random_family(n, 0.6, 2.0, AngleMode::Free, 8.0, seed * 1000003ULL + i);
        const HittingRun run = hit_greedy(fam, unit ? HitterKind::SixPointLeftmost
                                                    : HitterKind::TenPoint);
        const ColouringRun col = unit ? colour_unit_squares(fam) : colour_squares(fam);
        SolveLimits limits;
        limits.override_cap = true;
        const int nu = exact_nu(fam, limits).value;
        const int tau = exact_tau(fam, limits).value;
        const int chi = exact_chi(fam, limits).value;
        const int approx = static_cast<int>(run.points.size());
        const int k = run.per_round_bound;
        const double ratio = static_cast<double>(approx) / nu;
        std::printf("%d %d %d %d %d %.4f %d %d %d\n", i, n, nu, tau, approx, ratio, k, chi,
                    col.k_used);
        if (tau > approx || approx > k * nu || static_cast<int>(run.rounds.size()) > nu)
            ok = false;
        if (chi > col.k_used || col.k_used > col.bound) ok = false;
    }
    return ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified hitting sets and colourings for families of rotated squares"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate an instance document");
    std::string gen_name = "nine_square_tau3";
    int gen_param = 1;
    double gen_shift = 0.0;
    bool gen_random = false;
    int gen_n = 10;
    double gen_side_lo = 0.6, gen_side_hi = 2.0, gen_window = 8.0;
    std::string gen_mode = "free", gen_out = "-";
    std::uint64_t gen_seed = 0;
    gen->add_option("--name", gen_name, "named construction");
    gen->add_option("--m,--param", gen_param, "construction parameter (replication / chain k)");
    gen->add_option("--shift", gen_shift, "shift parameter for nine_square_tau3");
    gen->add_flag("--random", gen_random, "generate a seeded random family instead");
    gen->add_option("--n", gen_n, "random: number of squares");
    gen->add_option("--side-lo", gen_side_lo, "random: minimum side");
    gen->add_option("--side-hi", gen_side_hi, "random: maximum side");
    gen->add_option("--angle-mode", gen_mode, "random: axis|unit-rotated|free");
    gen->add_option("--window", gen_window, "random: window size");
    gen->add_option("--seed", gen_seed, "random: seed");
    gen->add_option("--out", gen_out, "output path (default stdout)");

    // solve
    auto* solve = app.add_subcommand("solve", "exact tau|nu|chi|omega|delta");
    std::string solve_param = "tau", solve_in = "-", solve_out = "-";
    bool solve_force = false, solve_timing = false;
    solve->add_option("--param", solve_param, "tau|nu|chi|omega|delta")->required();
    solve->add_option("--in", solve_in, "instance path (default stdin)");
    solve->add_option("--out", solve_out, "output path (default stdout)");
    solve->add_flag("--force", solve_force, "override the instance-size soft cap");
    solve->add_flag("--timing", solve_timing, "include runtime in the result document");

    // approx
    auto* approx = app.add_subcommand("approx", "guaranteed-ratio approximations");
    std::string approx_op = "hit", approx_mode = "ten-point", approx_variant = "general";
    std::string approx_in = "-", approx_out = "-", approx_svg;
    approx->add_option("--op", approx_op, "hit|colour")->required();
    approx->add_option("--mode", approx_mode,
                       "hit mode: ten-point|six-point|ap-4|ap-2|twelve-cover");
    approx->add_option("--variant", approx_variant, "colour variant: unit|general");
    approx->add_option("--in", approx_in, "instance path (default stdin)");
    approx->add_option("--out", approx_out, "output path (default stdout)");
    approx->add_option("--svg", approx_svg, "also render the run to an SVG file");

    // verify
    auto* verify = app.add_subcommand("verify", "re-validate a result witness");
    std::string verify_instance, verify_result_path;
    verify->add_option("--instance", verify_instance, "instance path")->required();
    verify->add_option("--result", verify_result_path, "result path")->required();

    // certify
    auto* certify = app.add_subcommand("certify", "certify hitter constructions");
    std::string certify_what = "nine-gon";
    certify->add_option("--what", certify_what, "nine-gon|twelve-cover|six-point")->required();

    // falsify
    auto* falsify = app.add_subcommand("falsify", "adversarial search against a hitter");
    std::string falsify_mode = "ten-point";
    std::uint64_t falsify_seed = 0, falsify_budget = 1000000;
    int falsify_angles = 1;
    falsify->add_option("--hitter", falsify_mode,
                        "ten-point|six-point|ap-4|ap-2|twelve-cover")->required();
    falsify->add_option("--seed", falsify_seed, "search seed");
    falsify->add_option("--budget", falsify_budget, "total evaluation budget");
    falsify->add_option("--pivot-angles", falsify_angles, "number of pivot rotations to sweep");

    // bench
    auto* bench = app.add_subcommand("bench", "batch random instances; emit ratio table");
    int bench_n = 20, bench_size = 12;
    std::uint64_t bench_seed = 0;
    std::string bench_mode = "unit";
    bench->add_option("--n", bench_n, "number of instances");
    bench->add_option("--size", bench_size, "maximum squares per instance");
    bench->add_option("--seed", bench_seed, "seed");
    bench->add_option("--mode", bench_mode, "unit|free");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed())
            return run_gen(gen_name, gen_param, gen_shift, gen_random, gen_n, gen_side_lo,
                           gen_side_hi, gen_mode, gen_window, gen_seed, gen_out);
        if (solve->parsed())
            return run_solve(solve_param, solve_in, solve_force, solve_timing, solve_out);
        if (approx->parsed())
            return run_approx(approx_op, approx_mode, approx_variant, approx_in, approx_out,
                              approx_svg);
        if (verify->parsed()) return run_verify(verify_instance, verify_result_path);
        if (certify->parsed()) return run_certify(certify_what);
        if (falsify->parsed())
            return run_falsify(falsify_mode, falsify_seed, falsify_budget, falsify_angles);
        if (bench->parsed()) return run_bench(bench_n, bench_size, bench_seed, bench_mode);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
