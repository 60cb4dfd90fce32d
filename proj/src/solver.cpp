#include "trihull/solver.hpp"

#include <cmath>
#include <stdexcept>

#include "trihull/kernels.hpp"

namespace trihull {
namespace {

void validate_config(const SolverConfig& cfg, const Point& p, const PointSet& S) {
    require_same_dim(p.dim(), S.dim(), "solve");
    if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0)) {
        throw std::invalid_argument("solve: epsilon must lie strictly inside (0, 1)");
    }
    if (!(cfg.midpoint_prob >= 0.0 && cfg.midpoint_prob <= 1.0)) {
        throw std::invalid_argument("solve: midpoint_prob must lie in [0, 1]");
    }
}

// Shared state and bookkeeping for all variants. The loops below differ only
// in how they pick the step target; termination, incumbent tracking, trace
// recording, and the renormalization schedule are identical.
struct Engine {
    const Point& p;
    const PointSet& S;
    const SolverConfig& cfg;

    double threshold2 = 0.0;  // (epsilon * R)^2, compared against squared distances
    std::uint64_t max_iters = 0;

    ConvexIterate it;
    ConvexIterate inc;
    double d2_it = 0.0;
    double d2_inc = 0.0;

    PivotContext ctx;  // always matches (p, it.point)

    std::uint64_t iterations = 0;
    std::uint64_t scans = 0;
    std::uint64_t steps_since_renorm = 0;
    std::vector<TraceRecord> trace;

    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    Engine(const Point& p_, const PointSet& S_, const SolverConfig& cfg_)
        : p(p_), S(S_), cfg(cfg_) {
        validate_config(cfg, p, S);
        const double threshold = cfg.epsilon * radius_R(p, S);
        threshold2 = threshold * threshold;
        max_iters = cfg.max_iters.value_or(default_max_iters(cfg.epsilon, S.size()));
        it = init_iterate(p, S);
        inc = it;
        d2_it = squared_distance(p.span(), it.point.span());
        d2_inc = d2_it;
        ctx.reset(p.span(), it.point.span());
    }

    void refresh_after_move() {
        d2_it = squared_distance(p.span(), it.point.span());
        if (d2_it < d2_inc) {
            inc = it;
            d2_inc = d2_it;
        }
        ctx.reset(p.span(), it.point.span());
    }

    void record(StepAction action, std::int64_t chosen, double alpha, bool fallback) {
        if (!cfg.record_trace) return;
        trace.push_back(TraceRecord{action, chosen, alpha, std::sqrt(d2_it), std::sqrt(d2_inc),
                                    fallback});
    }

    void after_step(StepAction action, std::int64_t chosen, double alpha, bool fallback) {
        iterations += 1;
        refresh_after_move();
        record(action, chosen, alpha, fallback);
        steps_since_renorm += 1;
        if (steps_since_renorm == 1024) {
            steps_since_renorm = 0;
            renormalize(it, S);
            d2_it = squared_distance(p.span(), it.point.span());
            ctx.reset(p.span(), it.point.span());
            if (d2_it < d2_inc) {
                inc = it;
                d2_inc = d2_it;
            }
        }
    }

    void step_vertex_nearest(std::size_t j, bool fallback, StepAction action) {
        const double alpha = nearest_alpha(p.span(), it.point.span(), S.row(j));
        detail::step_toward_vertex(it, j, alpha, S);
        after_step(action, static_cast<std::int64_t>(j), alpha, fallback);
    }

    void step_vertex_midpoint(std::size_t j) {
        detail::step_toward_vertex(it, j, 0.5, S);
        after_step(StepAction::Midpoint, static_cast<std::int64_t>(j), 0.5, false);
    }

    void step_incumbent(const ConvexIterate& target, double alpha, StepAction action) {
        detail::step_toward_mix(it, target, alpha);
        after_step(action, -1, alpha, false);
    }

    RunOutcome finish(Status status, const ConvexIterate& final_it) {
        RunOutcome out;
        out.status = status;
        out.final = final_it;
        out.incumbent = inc;
        out.iterations = iterations;
        out.pivot_scans = scans;
        out.final_distance = std::sqrt(squared_distance(p.span(), final_it.point.span()));
        if (status == Status::Witness) {
            out.gap_bounds = witness_gap_bounds(p, final_it.point);
        }
        if (cfg.record_trace) out.trace = std::move(trace);
        out.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
            std::chrono::steady_clock::now() - t0);
        return out;
    }
};

RunOutcome run_deterministic(const Point& p, const PointSet& S, const SolverConfig& cfg) {
    Engine e(p, S, cfg);
    while (true) {
        if (e.d2_it <= e.threshold2) return e.finish(Status::Approximate, e.it);
        if (e.iterations >= e.max_iters) return e.finish(Status::IterLimit, e.inc);
        e.scans += 1;
        const ScanResult scan = scan_pivots(e.ctx, S, cfg.pivot_strategy);
        if (!scan.index) return e.finish(Status::Witness, e.it);
        e.step_vertex_nearest(*scan.index, scan.nonstrict_fallback, StepAction::Nearest);
    }
}

RunOutcome run_greedy(const Point& p, const PointSet& S, const SolverConfig& cfg) {
    Engine e(p, S, cfg);
    RngStream coin(cfg.seed, streams::step_coin);
    while (true) {
        // The guard and the reported point both use the incumbent: midpoint
        // steps may move the working iterate away from p.
        if (e.d2_inc <= e.threshold2) return e.finish(Status::Approximate, e.inc);
        if (e.iterations >= e.max_iters) return e.finish(Status::IterLimit, e.inc);
        e.scans += 1;
        const ScanResult scan = scan_pivots(e.ctx, S, cfg.pivot_strategy);
        if (!scan.index) return e.finish(Status::Witness, e.it);
        // Draw the coin every iteration so the consumed randomness does not
        // depend on midpoint_prob; with midpoint_prob == 0 the draw can
        // never select the midpoint branch and the trace matches the
        // deterministic variant exactly.
        const bool midpoint = coin.next_double() < cfg.midpoint_prob;
        if (midpoint) {
            e.step_vertex_midpoint(*scan.index);
        } else {
            e.step_vertex_nearest(*scan.index, scan.nonstrict_fallback, StepAction::Nearest);
        }
    }
}

// Witness check against the incumbent, charged as one full scan.
bool incumbent_is_witness(Engine& e) {
    e.scans += 1;
    PivotContext inc_ctx;
    inc_ctx.reset(e.p.span(), e.inc.point.span());
    return is_witness(inc_ctx, e.S);
}

RunOutcome run_sierpinski(const Point& p, const PointSet& S, const SolverConfig& cfg) {
    Engine e(p, S, cfg);
    RngStream select(cfg.seed, streams::vertex_select);
    RngStream coin(cfg.seed, streams::step_coin);
    RngStream relaxed(cfg.seed, streams::relaxed_pivot);
    const std::size_t n = S.size();

    while (true) {
        // The incumbent's distance is the min over everything seen, so it
        // alone decides approximate termination.
        if (e.d2_inc <= e.threshold2) return e.finish(Status::Approximate, e.inc);
        if (e.iterations >= e.max_iters) {
            // Cap reached with the incumbent unexamined since its last
            // improvement: one scan may still upgrade the result to Witness.
            if (incumbent_is_witness(e)) return e.finish(Status::Witness, e.inc);
            return e.finish(Status::IterLimit, e.inc);
        }

        const std::uint64_t pick = select.next_below(n + 1);
        if (pick < n) {
            const std::size_t j = static_cast<std::size_t>(pick);
            if (e.ctx.gap(S.row(j)) >= 0.0) {
                if (coin.next_double() < 0.5) {
                    e.step_vertex_midpoint(j);
                } else {
                    e.step_vertex_nearest(j, false, StepAction::Nearest);
                }
            } else {
                e.step_vertex_midpoint(j);
            }
            continue;
        }

        // Drew the incumbent as the step target.
        if (e.ctx.gap(e.inc.point.span()) >= 0.0) {
            if (coin.next_double() < 0.5) {
                e.step_incumbent(e.inc, 0.5, StepAction::Midpoint);
            } else {
                const double alpha =
                    nearest_alpha(p.span(), e.it.point.span(), e.inc.point.span());
                e.step_incumbent(e.inc, alpha, StepAction::Nearest);
            }
            continue;
        }

        // The incumbent is not a pivot for the current iterate. Only here
        // does the variant pay for a full scan.
        switch (cfg.variant) {
            case Variant::Sierpinski: {
                e.scans += 1;
                PivotContext inc_ctx;
                inc_ctx.reset(p.span(), e.inc.point.span());
                const ScanResult scan = scan_pivots(inc_ctx, S, cfg.pivot_strategy);
                if (!scan.index) return e.finish(Status::Witness, e.inc);
                // Jump: restart the iterate from the incumbent, then take
                // the nearest-point step toward the scanned pivot.
                e.it = e.inc;
                e.d2_it = e.d2_inc;
                const double alpha =
                    nearest_alpha(p.span(), e.it.point.span(), S.row(*scan.index));
                detail::step_toward_vertex(e.it, *scan.index, alpha, S);
                e.after_step(StepAction::JumpNearest, static_cast<std::int64_t>(*scan.index),
                             alpha, scan.nonstrict_fallback);
                // The jumped iterate supersedes the incumbent by design.
                e.inc = e.it;
                e.d2_inc = e.d2_it;
                break;
            }
            case Variant::SierpinskiRelaxed: {
                // No directed scan: verify the incumbent is not already a
                // witness, then jump and chase one random vertex.
                if (incumbent_is_witness(e)) return e.finish(Status::Witness, e.inc);
                e.it = e.inc;
                e.d2_it = e.d2_inc;
                e.ctx.reset(p.span(), e.it.point.span());
                const std::size_t k = static_cast<std::size_t>(relaxed.next_below(n));
                if (e.ctx.gap(S.row(k)) >= 0.0) {
                    const double alpha = nearest_alpha(p.span(), e.it.point.span(), S.row(k));
                    detail::step_toward_vertex(e.it, k, alpha, S);
                    e.after_step(StepAction::JumpNearest, static_cast<std::int64_t>(k), alpha,
                                 false);
                    e.inc = e.it;
                    e.d2_inc = e.d2_it;
                } else {
                    detail::step_toward_vertex(e.it, k, 0.5, S);
                    e.after_step(StepAction::Midpoint, static_cast<std::int64_t>(k), 0.5, false);
                }
                break;
            }
            case Variant::SierpinskiFree: {
                // No jump at all; keep mixing toward the incumbent.
                if (incumbent_is_witness(e)) return e.finish(Status::Witness, e.inc);
                e.step_incumbent(e.inc, 0.5, StepAction::Midpoint);
                break;
            }
            default:
                throw std::logic_error("run_sierpinski: unexpected variant");
        }
    }
}

}  // namespace

std::uint64_t default_max_iters(double epsilon, std::size_t n) {
    const double per_point = std::ceil(1.0 / (epsilon * epsilon));
    return 10ull * static_cast<std::uint64_t>(per_point) * static_cast<std::uint64_t>(n);
}

RunOutcome solve(const Point& p, const PointSet& S, const SolverConfig& cfg) {
    switch (cfg.variant) {
        case Variant::Deterministic:
            return run_deterministic(p, S, cfg);
        case Variant::GreedyRandom:
            return run_greedy(p, S, cfg);
        case Variant::Sierpinski:
        case Variant::SierpinskiRelaxed:
        case Variant::SierpinskiFree:
            return run_sierpinski(p, S, cfg);
    }
    throw std::invalid_argument("solve: unknown variant");
}

namespace {

RunOutcome solve_pinned(const Point& p, const PointSet& S, const SolverConfig& cfg,
                        bool variant_ok) {
    if (!variant_ok) {
        throw std::invalid_argument("solver entry point does not match cfg.variant");
    }
    return solve(p, S, cfg);
}

}  // namespace

RunOutcome solve_deterministic(const Point& p, const PointSet& S, const SolverConfig& cfg) {
    return solve_pinned(p, S, cfg, cfg.variant == Variant::Deterministic);
}

RunOutcome solve_greedy_random(const Point& p, const PointSet& S, const SolverConfig& cfg) {
    return solve_pinned(p, S, cfg, cfg.variant == Variant::GreedyRandom);
}

RunOutcome solve_sierpinski(const Point& p, const PointSet& S, const SolverConfig& cfg) {
    return solve_pinned(p, S, cfg,
                        cfg.variant == Variant::Sierpinski ||
                            cfg.variant == Variant::SierpinskiRelaxed ||
                            cfg.variant == Variant::SierpinskiFree);
}

namespace {

bool iterate_ok(const ConvexIterate& it, const Point& p, const PointSet& S) {
    if (it.coeffs.size() != S.size()) return false;
    if (it.point.dim() != S.dim() || it.point.dim() != p.dim()) return false;
    const IterateCheck chk = check_iterate(it, S);
    if (chk.min_coeff < 0.0) return false;
    if (std::fabs(chk.coeff_sum - 1.0) > 1e-9) return false;
    if (chk.max_reconstruction_err > 1e-7) return false;
    return true;
}

}  // namespace

bool verify_outcome(const Point& p, const PointSet& S, const RunOutcome& outcome,
                    const SolverConfig& cfg) {
    switch (outcome.status) {
        case Status::Approximate: {
            if (!iterate_ok(outcome.final, p, S)) return false;
            const double threshold = cfg.epsilon * radius_R(p, S);
            return squared_distance(p.span(), outcome.final.point.span()) <=
                   threshold * threshold;
        }
        case Status::Witness: {
            if (!iterate_ok(outcome.final, p, S)) return false;
            if (!outcome.gap_bounds) return false;
            return is_witness(p, outcome.final.point, S);
        }
        case Status::IterLimit:
            return iterate_ok(outcome.incumbent, p, S);
    }
    return false;
}

const char* to_string(Variant v) {
    switch (v) {
        case Variant::Deterministic: return "det";
        case Variant::GreedyRandom: return "greedy";
        case Variant::Sierpinski: return "sierpinski";
        case Variant::SierpinskiRelaxed: return "sierpinski-relaxed";
        case Variant::SierpinskiFree: return "sierpinski-free";
    }
    return "?";
}

const char* to_string(Status s) {
    switch (s) {
        case Status::Approximate: return "approximate";
        case Status::Witness: return "witness";
        case Status::IterLimit: return "iterlimit";
    }
    return "?";
}

const char* to_string(PivotStrategy s) {
    switch (s) {
        case PivotStrategy::FirstIndex: return "first";
        case PivotStrategy::BestGap: return "best";
        case PivotStrategy::StrictFirst: return "strict";
    }
    return "?";
}

std::optional<Variant> variant_from_string(std::string_view name) {
    if (name == "det") return Variant::Deterministic;
    if (name == "greedy") return Variant::GreedyRandom;
    if (name == "sierpinski") return Variant::Sierpinski;
    if (name == "sierpinski-relaxed") return Variant::SierpinskiRelaxed;
    if (name == "sierpinski-free") return Variant::SierpinskiFree;
    return std::nullopt;
}

std::optional<PivotStrategy> pivot_from_string(std::string_view name) {
    if (name == "first") return PivotStrategy::FirstIndex;
    if (name == "best") return PivotStrategy::BestGap;
    if (name == "strict") return PivotStrategy::StrictFirst;
    return std::nullopt;
}

}  // namespace trihull
