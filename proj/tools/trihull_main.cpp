// trihull: convex hull membership via pivot iterations, with self-certifying
// output. Subcommands: solve, gen, chaos, bench.
//
// Exit codes: 0 approximate membership, 1 witness of non-membership,
// 2 iteration cap, 64 usage error, 66 input file error, 70 internal error.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trihull/bench.hpp"
#include "trihull/io.hpp"
#include "trihull/kernels.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitFile = 66;
constexpr int kExitInternal = 70;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

trihull::Variant parse_variant(const std::string& name) {
    const auto v = trihull::variant_from_string(name);
    if (!v) {
        throw UsageError("unknown variant \"" + name +
                         "\" (expected det, greedy, sierpinski, sierpinski-relaxed, "
                         "sierpinski-free)");
    }
    return *v;
}

trihull::PivotStrategy parse_pivot(const std::string& name) {
    const auto s = trihull::pivot_from_string(name);
    if (!s) throw UsageError("unknown pivot strategy \"" + name + "\" (expected first, best, strict)");
    return *s;
}

struct GenParams {
    std::string kind;
    std::size_t n = 8;
    std::size_t m = 2;
    std::uint64_t seed = 0;
    double margin = 0.5;
    double delta = 1e-3;
};

trihull::Instance make_instance(const GenParams& g) {
    if (g.kind == "interior") return trihull::gen_interior(g.n, g.m, g.seed);
    if (g.kind == "nonmember") return trihull::gen_nonmember(g.n, g.m, g.seed, g.margin);
    if (g.kind == "simplex") return trihull::gen_simplex_centroid(g.m);
    if (g.kind == "near-boundary") return trihull::gen_near_boundary(g.n, g.m, g.seed, g.delta);
    throw UsageError("unknown instance kind \"" + g.kind +
                     "\" (expected interior, nonmember, simplex, near-boundary)");
}

int cmd_solve(const std::string& instance_path, double epsilon, const std::string& variant_name,
              const std::string& pivot_name, std::uint64_t seed,
              std::optional<std::uint64_t> max_iters, bool trace, std::string out_path) {
    const trihull::io::LoadedInstance inst = trihull::io::read_instance(instance_path);

    trihull::SolverConfig cfg;
    cfg.epsilon = epsilon;
    cfg.variant = parse_variant(variant_name);
    cfg.pivot_strategy = parse_pivot(pivot_name);
    cfg.seed = seed;
    cfg.max_iters = max_iters;
    cfg.record_trace = trace;

    const trihull::RunOutcome out = trihull::solve(inst.p, inst.S, cfg);
    const double radius = trihull::radius_R(inst.p, inst.S);

    if (out_path.empty()) out_path = instance_path + ".cert.json";
    trihull::io::write_certificate(out_path, out, cfg, radius);

    std::cout << "instance: " << instance_path << " (n=" << inst.S.size()
              << ", m=" << inst.S.dim() << ")\n";
    std::cout << "variant: " << trihull::to_string(cfg.variant)
              << "  pivot: " << trihull::to_string(cfg.pivot_strategy) << "  seed: " << cfg.seed
              << "\n";
    std::cout << "epsilon: " << trihull::io::format_double(cfg.epsilon)
              << "  R: " << trihull::io::format_double(radius)
              << "  threshold: " << trihull::io::format_double(cfg.epsilon * radius) << "\n";
    std::cout << "status: " << trihull::to_string(out.status) << "\n";
    std::cout << "final_distance: " << trihull::io::format_double(out.final_distance) << "\n";
    if (out.gap_bounds) {
        std::cout << "hull distance bounds: [" << trihull::io::format_double(out.gap_bounds->lower)
                  << ", " << trihull::io::format_double(out.gap_bounds->upper) << "]\n";
    }
    std::cout << "iterations: " << out.iterations << "  pivot_scans: " << out.pivot_scans << "\n";
    std::cout << "elapsed_micros: " << out.elapsed.count() << "\n";
    std::cout << "certificate: " << out_path << "\n";
    if (!trihull::verify_outcome(inst.p, inst.S, out, cfg)) {
        std::cerr << "trihull: outcome failed self-verification\n";
        return kExitInternal;
    }

    switch (out.status) {
        case trihull::Status::Approximate: return 0;
        case trihull::Status::Witness: return 1;
        case trihull::Status::IterLimit: return 2;
    }
    return kExitInternal;
}

int cmd_gen(const GenParams& g, const std::string& out_path) {
    const trihull::Instance inst = make_instance(g);
    trihull::io::write_instance(out_path, inst);
    std::cout << "wrote " << out_path << " (kind=" << g.kind << ", n=" << inst.S.size()
              << ", m=" << inst.S.dim() << ")\n";
    return 0;
}

int cmd_chaos(std::size_t steps, std::uint64_t burn_in, std::uint64_t seed,
              const std::string& vertices_path, const std::string& out_path) {
    trihull::ChaosCloud cloud;
    if (vertices_path.empty()) {
        trihull::RngStream rng(seed, trihull::streams::chaos_vertex);
        cloud = trihull::sierpinski_cloud(steps, burn_in, rng);
    } else {
        const trihull::io::LoadedInstance inst = trihull::io::read_instance(vertices_path);
        // Seeded random interior start: normalized positive weights over S.
        trihull::RngStream seed_rng(seed, trihull::streams::chaos_seed_point);
        std::vector<double> w(inst.S.size());
        double sum = 0.0;
        for (auto& x : w) {
            x = seed_rng.next_double();
            sum += x;
        }
        std::vector<double> start(inst.S.dim(), 0.0);
        for (std::size_t i = 0; i < inst.S.size(); ++i) {
            const double lambda = sum > 0.0 ? w[i] / sum : 1.0 / static_cast<double>(w.size());
            const auto row = inst.S.row(i);
            for (std::size_t j = 0; j < row.size(); ++j) start[j] += lambda * row[j];
        }
        trihull::RngStream rng(seed, trihull::streams::chaos_vertex);
        cloud = trihull::chaos_game(inst.S, trihull::Point(std::move(start)), steps, rng);
        cloud.burn_in = burn_in;
    }
    trihull::io::write_cloud_csv(out_path, cloud);
    std::cout << "wrote " << out_path << " (" << cloud.marked_count() << " dots, "
              << cloud.dim() << " columns)\n";
    return 0;
}

int cmd_bench(const std::string& instance_path, const std::string& kind_name, GenParams g,
              const std::string& ladder_csv, const std::string& variants_csv,
              const std::string& pivot_name, const std::string& seeds_csv, unsigned jobs,
              bool no_timing, std::optional<std::uint64_t> max_iters,
              const std::string& out_path) {
    trihull::PointSet S(1, 1, {0.0});
    trihull::Point p{0.0};
    std::optional<double> rho;
    if (!instance_path.empty() && !kind_name.empty()) {
        throw UsageError("--instance and --kind are mutually exclusive");
    }
    if (!instance_path.empty()) {
        const trihull::io::LoadedInstance inst = trihull::io::read_instance(instance_path);
        S = inst.S;
        p = inst.p;
        rho = inst.rho;
    } else if (!kind_name.empty()) {
        g.kind = kind_name;
        const trihull::Instance inst = make_instance(g);
        S = inst.S;
        p = inst.p;
        rho = inst.known_rho;
    } else {
        throw UsageError("bench needs --instance or --kind");
    }

    trihull::bench::BenchOptions opt;
    for (const std::string& tok : split_list(ladder_csv)) {
        try {
            opt.ladder.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw UsageError("bad epsilon in ladder: \"" + tok + "\"");
        }
    }
    for (const std::string& tok : split_list(variants_csv)) {
        opt.variants.push_back(parse_variant(tok));
    }
    opt.pivot_strategy = parse_pivot(pivot_name);
    for (const std::string& tok : split_list(seeds_csv)) {
        try {
            opt.seeds.push_back(std::stoull(tok));
        } catch (const std::exception&) {
            throw UsageError("bad seed: \"" + tok + "\"");
        }
    }
    opt.jobs = jobs;
    opt.timing = !no_timing;
    opt.max_iters = max_iters;

    std::vector<trihull::bench::BenchRow> rows;
    try {
        rows = trihull::bench::run_bench(p, S, rho, opt);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    trihull::io::write_file(out_path, trihull::bench::to_csv(rows));
    std::cout << trihull::bench::summarize(rows);
    std::cout << "wrote " << out_path << " (" << rows.size() << " rows)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"convex hull membership via pivot iterations"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "decide membership for an instance file");
    std::string solve_instance;
    double solve_epsilon = 1e-2;
    std::string solve_variant = "det";
    std::string solve_pivot = "first";
    std::uint64_t solve_seed = 0;
    std::uint64_t solve_max_iters = 0;
    bool solve_trace = false;
    std::string solve_out;
    solve->add_option("instance", solve_instance, "instance JSON file")->required();
    solve->add_option("--epsilon", solve_epsilon, "relative tolerance in (0,1)")->required();
    solve->add_option("--variant", solve_variant,
                      "det|greedy|sierpinski|sierpinski-relaxed|sierpinski-free");
    solve->add_option("--pivot", solve_pivot, "first|best|strict");
    solve->add_option("--seed", solve_seed, "rng seed for randomized variants");
    solve->add_option("--max-iters", solve_max_iters, "iteration cap (0 = auto)");
    solve->add_flag("--trace", solve_trace, "record per-iteration trace in the certificate");
    solve->add_option("--out", solve_out, "certificate path (default: <instance>.cert.json)");

    // gen
    auto* gen = app.add_subcommand("gen", "generate an instance file with known truth");
    GenParams gp;
    std::string gen_out;
    gen->add_option("kind", gp.kind, "interior|nonmember|simplex|near-boundary")->required();
    gen->add_option("--n", gp.n, "number of points");
    gen->add_option("--m", gp.m, "dimension");
    gen->add_option("--seed", gp.seed, "generator seed");
    gen->add_option("--margin", gp.margin, "nonmember: slab distance > 0");
    gen->add_option("--delta", gp.delta, "near-boundary: interpolation toward the centroid");
    gen->add_option("--out", gen_out, "output instance path")->required();

    // chaos
    auto* chaos = app.add_subcommand("chaos", "emit a halving-iteration dot cloud as CSV");
    std::size_t chaos_steps = 100000;
    std::uint64_t chaos_burn = 12;
    std::uint64_t chaos_seed = 0;
    std::string chaos_vertices;
    std::string chaos_out;
    chaos->add_option("--steps", chaos_steps, "number of dots to generate");
    chaos->add_option("--burn-in", chaos_burn, "leading dots left unmarked");
    chaos->add_option("--seed", chaos_seed, "rng seed");
    chaos->add_option("--vertices", chaos_vertices,
                      "instance file whose S supplies the vertex set (default: unit triangle)");
    chaos->add_option("--out", chaos_out, "output CSV path")->required();

    // bench
    auto* bench = app.add_subcommand("bench", "run a variant x epsilon x seed grid");
    std::string bench_instance;
    std::string bench_kind;
    GenParams bp;
    std::string bench_ladder = "0.1,0.05,0.025,0.0125";
    std::string bench_variants = "det";
    std::string bench_pivot = "first";
    std::string bench_seeds = "1";
    unsigned bench_jobs = 1;
    bool bench_no_timing = false;
    std::uint64_t bench_max_iters = 0;
    std::string bench_out;
    bench->add_option("--instance", bench_instance, "instance JSON file");
    bench->add_option("--kind", bench_kind, "generate the instance instead of loading one");
    bench->add_option("--n", bp.n, "generated instance: number of points");
    bench->add_option("--m", bp.m, "generated instance: dimension");
    bench->add_option("--gen-seed", bp.seed, "generated instance: seed");
    bench->add_option("--margin", bp.margin, "generated nonmember: slab distance");
    bench->add_option("--delta", bp.delta, "generated near-boundary: centroid pull");
    bench->add_option("--ladder", bench_ladder, "comma-separated decreasing epsilons");
    bench->add_option("--variants", bench_variants, "comma-separated variant names");
    bench->add_option("--pivot", bench_pivot, "first|best|strict");
    bench->add_option("--seeds", bench_seeds, "comma-separated seeds");
    bench->add_option("--jobs", bench_jobs, "worker threads");
    bench->add_flag("--no-timing", bench_no_timing, "write 0 for elapsed_micros (reproducible CSV)");
    bench->add_option("--max-iters", bench_max_iters, "iteration cap per cell (0 = auto)");
    bench->add_option("--out", bench_out, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (solve->parsed()) {
            std::optional<std::uint64_t> cap;
            if (solve_max_iters > 0) cap = solve_max_iters;
            return cmd_solve(solve_instance, solve_epsilon, solve_variant, solve_pivot,
                             solve_seed, cap, solve_trace, solve_out);
        }
        if (gen->parsed()) return cmd_gen(gp, gen_out);
        if (chaos->parsed()) {
            return cmd_chaos(chaos_steps, chaos_burn, chaos_seed, chaos_vertices, chaos_out);
        }
        if (bench->parsed()) {
            std::optional<std::uint64_t> cap;
            if (bench_max_iters > 0) cap = bench_max_iters;
            return cmd_bench(bench_instance, bench_kind, bp, bench_ladder, bench_variants,
                             bench_pivot, bench_seeds, bench_jobs, bench_no_timing, cap,
                             bench_out);
        }
        std::cerr << "trihull: no subcommand\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "trihull: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "trihull: " << e.what() << "\n";
        return kExitUsage;
    } catch (const trihull::io::ParseError& e) {
        std::cerr << "trihull: " << e.what() << "\n";
        return kExitFile;
    } catch (const std::exception& e) {
        std::cerr << "trihull: internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
