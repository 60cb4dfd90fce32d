#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trihull/solver.hpp"

namespace trihull::bench {

// One grid cell result, mirroring the CSV columns.
struct BenchRow {
    Variant variant = Variant::Deterministic;
    PivotStrategy pivot_strategy = PivotStrategy::FirstIndex;
    double epsilon = 0.0;
    std::uint64_t seed = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    std::string status;  // approximate | witness | iterlimit | error
    std::uint64_t iterations = 0;
    std::uint64_t pivot_scans = 0;
    double final_distance = 0.0;
    std::int64_t elapsed_micros = 0;
    double radius = 0.0;
    std::optional<double> rho;
};

struct BenchOptions {
    std::vector<double> ladder;     // strictly decreasing epsilons in (0,1)
    std::vector<Variant> variants;  // at least one
    PivotStrategy pivot_strategy = PivotStrategy::FirstIndex;
    std::vector<std::uint64_t> seeds;  // at least one
    unsigned jobs = 1;
    // false zeroes elapsed_micros so two runs of the same grid produce
    // byte-identical CSV.
    bool timing = true;
    std::optional<std::uint64_t> max_iters;
};

// Run the full variant x epsilon x seed grid. Cells run concurrently when
// jobs > 1; rows always come back in grid order (variant, then ladder, then
// seed). A cell that throws is recorded as status=error and the run goes on.
std::vector<BenchRow> run_bench(const Point& p, const PointSet& S, std::optional<double> rho,
                                const BenchOptions& opt);

extern const char* const kCsvHeader;
std::string to_csv(const std::vector<BenchRow>& rows);

// Per (variant, epsilon) median iteration counts plus a fitted growth
// exponent of median iterations against 1/epsilon (log-log least squares
// over rungs with median >= 1; "n/a" with fewer than two usable rungs).
std::string summarize(const std::vector<BenchRow>& rows);

double median(std::vector<double> xs);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double relative_residual = 0.0;  // ||y - fit||_2 / ||y||_2
};
LineFit least_squares_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace trihull::bench
