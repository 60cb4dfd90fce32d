#include "trihull/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "trihull/io.hpp"

namespace trihull::bench {
namespace {

void validate(const BenchOptions& opt) {
    if (opt.ladder.empty()) throw std::invalid_argument("bench: epsilon ladder is empty");
    for (double e : opt.ladder) {
        if (!(e > 0.0 && e < 1.0)) {
            throw std::invalid_argument("bench: every epsilon must lie strictly inside (0, 1)");
        }
    }
    for (std::size_t i = 1; i < opt.ladder.size(); ++i) {
        if (!(opt.ladder[i] < opt.ladder[i - 1])) {
            throw std::invalid_argument("bench: ladder must be strictly decreasing");
        }
    }
    if (opt.variants.empty()) throw std::invalid_argument("bench: no variants selected");
    if (opt.seeds.empty()) throw std::invalid_argument("bench: no seeds given");
    if (opt.jobs == 0) throw std::invalid_argument("bench: jobs must be >= 1");
}

}  // namespace

std::vector<BenchRow> run_bench(const Point& p, const PointSet& S, std::optional<double> rho,
                                const BenchOptions& opt) {
    validate(opt);
    struct Cell {
        Variant variant;
        double epsilon;
        std::uint64_t seed;
    };
    std::vector<Cell> cells;
    for (Variant v : opt.variants) {
        for (double e : opt.ladder) {
            for (std::uint64_t s : opt.seeds) cells.push_back({v, e, s});
        }
    }

    const double radius = radius_R(p, S);
    std::vector<BenchRow> rows(cells.size());

    auto run_cell = [&](std::size_t i) {
        const Cell& c = cells[i];
        BenchRow& row = rows[i];
        row.variant = c.variant;
        row.pivot_strategy = opt.pivot_strategy;
        row.epsilon = c.epsilon;
        row.seed = c.seed;
        row.n = S.size();
        row.m = S.dim();
        row.radius = radius;
        row.rho = rho;
        try {
            SolverConfig cfg;
            cfg.epsilon = c.epsilon;
            cfg.variant = c.variant;
            cfg.pivot_strategy = opt.pivot_strategy;
            cfg.seed = c.seed;
            cfg.max_iters = opt.max_iters;
            const RunOutcome out = solve(p, S, cfg);
            row.status = to_string(out.status);
            row.iterations = out.iterations;
            row.pivot_scans = out.pivot_scans;
            row.final_distance = out.final_distance;
            row.elapsed_micros = opt.timing ? out.elapsed.count() : 0;
        } catch (const std::exception&) {
            row.status = "error";
        }
    };

    if (opt.jobs <= 1 || cells.size() <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
    } else {
        std::atomic<std::size_t> next{0};
        const unsigned workers = std::min<unsigned>(opt.jobs, cells.size());
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                while (true) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= cells.size()) return;
                    run_cell(i);
                }
            });
        }
        for (auto& t : pool) t.join();
    }
    return rows;
}

const char* const kCsvHeader =
    "variant,pivot_strategy,epsilon,seed,n,m,status,iterations,pivot_scans,"
    "final_distance,elapsed_micros,R,rho_or_empty";

std::string to_csv(const std::vector<BenchRow>& rows) {
    std::string s = kCsvHeader;
    s += '\n';
    for (const BenchRow& r : rows) {
        s += to_string(r.variant);
        s += ',';
        s += to_string(r.pivot_strategy);
        s += ',';
        s += io::format_double(r.epsilon);
        s += ',';
        s += std::to_string(r.seed);
        s += ',';
        s += std::to_string(r.n);
        s += ',';
        s += std::to_string(r.m);
        s += ',';
        s += r.status;
        s += ',';
        s += std::to_string(r.iterations);
        s += ',';
        s += std::to_string(r.pivot_scans);
        s += ',';
        s += io::format_double(r.final_distance);
        s += ',';
        s += std::to_string(r.elapsed_micros);
        s += ',';
        s += io::format_double(r.radius);
        s += ',';
        if (r.rho) s += io::format_double(*r.rho);
        s += '\n';
    }
    return s;
}

double median(std::vector<double> xs) {
    if (xs.empty()) throw std::invalid_argument("median: empty input");
    std::sort(xs.begin(), xs.end());
    const std::size_t k = xs.size() / 2;
    if (xs.size() % 2 == 1) return xs[k];
    return (xs[k - 1] + xs[k]) / 2.0;
}

LineFit least_squares_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("least_squares_line: need >= 2 matched points");
    }
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double det = n * sxx - sx * sx;
    if (det == 0.0) throw std::invalid_argument("least_squares_line: degenerate x values");
    LineFit fit;
    fit.slope = (n * sxy - sx * sy) / det;
    fit.intercept = (sy - fit.slope * sx) / n;
    double res2 = 0.0, norm2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double pred = fit.slope * x[i] + fit.intercept;
        res2 += (y[i] - pred) * (y[i] - pred);
        norm2 += y[i] * y[i];
    }
    fit.relative_residual = norm2 > 0.0 ? std::sqrt(res2 / norm2) : 0.0;
    return fit;
}

std::string summarize(const std::vector<BenchRow>& rows) {
    // Group medians by (variant, epsilon); iterate variants in first-seen
    // order, epsilons descending within each.
    std::vector<Variant> variant_order;
    std::map<std::pair<int, double>, std::vector<double>> groups;
    for (const BenchRow& r : rows) {
        if (r.status == "error") continue;
        if (std::find(variant_order.begin(), variant_order.end(), r.variant) ==
            variant_order.end()) {
            variant_order.push_back(r.variant);
        }
        groups[{static_cast<int>(r.variant), r.epsilon}].push_back(
            static_cast<double>(r.iterations));
    }
    std::ostringstream out;
    out << "bench summary\n";
    for (Variant v : variant_order) {
        out << "  variant=" << to_string(v) << "\n";
        std::vector<double> ln_inv_eps, ln_med;
        std::vector<std::pair<double, double>> eps_med;
        for (const auto& [key, iters] : groups) {
            if (key.first != static_cast<int>(v)) continue;
            eps_med.emplace_back(key.second, median(iters));
        }
        std::sort(eps_med.begin(), eps_med.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });
        for (const auto& [eps, med] : eps_med) {
            // Human-facing report: default precision, not the 17-digit
            // round-trip rendering the CSV uses.
            out << "    eps=" << eps << " median_iterations=" << med << "\n";
            if (med >= 1.0) {
                ln_inv_eps.push_back(std::log(1.0 / eps));
                ln_med.push_back(std::log(med));
            }
        }
        if (ln_inv_eps.size() >= 2) {
            const LineFit fit = least_squares_line(ln_inv_eps, ln_med);
            out << "    growth_exponent_vs_inv_eps=" << fit.slope << "\n";
        } else {
            out << "    growth_exponent_vs_inv_eps=n/a\n";
        }
    }
    return out.str();
}

}  // namespace trihull::bench
