#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "trihull/iterate.hpp"
#include "trihull/rng.hpp"

namespace trihull {

// Iteration schemes. All of them move an in-hull iterate p' toward p and
// stop when d(p, p') <= epsilon * R or when a witness certifies p outside.
//
//   Deterministic:     scan for a pivot every iteration, step to the nearest
//                      point of [p', pivot].
//   GreedyRandom:      same scan, but each step is a coin flip between the
//                      nearest point and the midpoint of [p', pivot].
//   Sierpinski:        draw v uniformly from S + {incumbent}; no scan unless
//                      the incumbent is drawn and fails the pivot test, in
//                      which case scan once and jump the iterate to the
//                      incumbent before stepping.
//   SierpinskiRelaxed: as Sierpinski, but after the jump the next target is
//                      a single random vertex instead of a scanned pivot.
//   SierpinskiFree:    as Sierpinski, but never jumps; a failing incumbent
//                      only triggers the witness check and a midpoint pull
//                      toward the incumbent.
enum class Variant {
    Deterministic,
    GreedyRandom,
    Sierpinski,
    SierpinskiRelaxed,
    SierpinskiFree,
};

enum class Status { Approximate, Witness, IterLimit };

struct SolverConfig {
    double epsilon = 1e-2;  // must lie strictly inside (0, 1)
    Variant variant = Variant::Deterministic;
    PivotStrategy pivot_strategy = PivotStrategy::FirstIndex;
    std::uint64_t seed = 0;
    // Absent means 10 * ceil(1/epsilon^2) * n.
    std::optional<std::uint64_t> max_iters;
    // GreedyRandom only: probability of taking the midpoint instead of the
    // nearest point. 0 reproduces Deterministic exactly, trace for trace.
    double midpoint_prob = 0.5;
    bool record_trace = false;
};

std::uint64_t default_max_iters(double epsilon, std::size_t n);

enum class StepAction : std::uint8_t { Nearest, Midpoint, JumpNearest };

// One step as recorded in a trace. chosen is an index into S, or -1 when the
// step target is the incumbent itself.
struct TraceRecord {
    StepAction action = StepAction::Nearest;
    std::int64_t chosen = -1;
    double alpha = 0.0;            // blend weight toward the target
    double dist = 0.0;             // d(p, p') after the step
    double dist_incumbent = 0.0;   // d(p, p*) after the incumbent update
    bool nonstrict_fallback = false;
};

struct RunOutcome {
    Status status = Status::IterLimit;
    ConvexIterate final;      // the certified point for the reported status
    ConvexIterate incumbent;  // best iterate seen, by distance to p
    std::uint64_t iterations = 0;
    std::uint64_t pivot_scans = 0;  // full O(mn) passes over S
    std::chrono::microseconds elapsed{0};
    double final_distance = 0.0;  // d(p, final.point)
    std::optional<GapBounds> gap_bounds;  // present iff status == Witness
    std::optional<std::vector<TraceRecord>> trace;
};

RunOutcome solve(const Point& p, const PointSet& S, const SolverConfig& cfg);

// Variant-pinned entry points; cfg.variant must agree.
RunOutcome solve_deterministic(const Point& p, const PointSet& S, const SolverConfig& cfg);
RunOutcome solve_greedy_random(const Point& p, const PointSet& S, const SolverConfig& cfg);
RunOutcome solve_sierpinski(const Point& p, const PointSet& S, const SolverConfig& cfg);

// Recheck an outcome from scratch: coefficient invariants on the certified
// iterate, the epsilon*R bound for Approximate, the all-points distance
// test for Witness. Uses nothing from the solve besides the outcome itself.
bool verify_outcome(const Point& p, const PointSet& S, const RunOutcome& outcome,
                    const SolverConfig& cfg);

const char* to_string(Variant v);
const char* to_string(Status s);
const char* to_string(PivotStrategy s);
std::optional<Variant> variant_from_string(std::string_view name);
std::optional<PivotStrategy> pivot_from_string(std::string_view name);

}  // namespace trihull
