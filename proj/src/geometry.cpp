#include "trihull/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "trihull/kernels.hpp"

namespace trihull {
namespace {

// Reused scratch for difference vectors; one copy per thread keeps the
// Point-level API allocation-free after warmup and safe under concurrency.
thread_local std::vector<double> tls_u;
thread_local std::vector<double> tls_z;

void sub(std::vector<double>& dst, std::span<const double> a, std::span<const double> b) {
    dst.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) dst[i] = a[i] - b[i];
}

}  // namespace

double squared_distance(std::span<const double> a, std::span<const double> b) {
    require_same_dim(a.size(), b.size(), "squared_distance");
    return kernels::squared_distance(a.data(), b.data(), a.size());
}

double squared_distance(const Point& a, const Point& b) {
    return squared_distance(a.span(), b.span());
}

double radius_R(const Point& p, const PointSet& S) {
    require_same_dim(p.dim(), S.dim(), "radius_R");
    double best = 0.0;
    for (std::size_t i = 0; i < S.size(); ++i) {
        const double d2 = kernels::squared_distance(p.data(), S.row(i).data(), p.dim());
        if (d2 > best) best = d2;
    }
    return std::sqrt(best);
}

PivotContext::PivotContext(const Point& p, const Point& p_prime) {
    reset(p.span(), p_prime.span());
}

void PivotContext::reset(std::span<const double> p, std::span<const double> p_prime) {
    require_same_dim(p.size(), p_prime.size(), "PivotContext");
    sub(direction_, p_prime, p);
    const std::size_t m = p.size();
    norm_shift_ = kernels::dot(p_prime.data(), p_prime.data(), m) -
                  kernels::dot(p.data(), p.data(), m);
    strict_threshold_ = kernels::dot(p.data(), direction_.data(), m);
}

double PivotContext::gap(std::span<const double> v) const {
    require_same_dim(v.size(), direction_.size(), "PivotContext::gap");
    return norm_shift_ - 2.0 * kernels::dot(v.data(), direction_.data(), v.size());
}

bool PivotContext::strict(std::span<const double> v) const {
    require_same_dim(v.size(), direction_.size(), "PivotContext::strict");
    return kernels::dot(v.data(), direction_.data(), v.size()) <= strict_threshold_;
}

bool is_pivot(const Point& p, const Point& p_prime, const Point& v) {
    PivotContext ctx(p, p_prime);
    return ctx.gap(v.span()) >= 0.0;
}

bool is_strict_pivot(const Point& p, const Point& p_prime, const Point& v) {
    PivotContext ctx(p, p_prime);
    return ctx.strict(v.span());
}

std::optional<std::size_t> find_pivot(const PivotContext& ctx, const PointSet& S,
                                      PivotStrategy strategy) {
    switch (strategy) {
        case PivotStrategy::FirstIndex:
            for (std::size_t i = 0; i < S.size(); ++i) {
                if (ctx.gap(S.row(i)) >= 0.0) return i;
            }
            return std::nullopt;
        case PivotStrategy::BestGap: {
            std::optional<std::size_t> best;
            double best_gap = 0.0;
            for (std::size_t i = 0; i < S.size(); ++i) {
                const double g = ctx.gap(S.row(i));
                if (g >= 0.0 && (!best || g > best_gap)) {
                    best = i;
                    best_gap = g;
                }
            }
            return best;
        }
        case PivotStrategy::StrictFirst:
            for (std::size_t i = 0; i < S.size(); ++i) {
                if (ctx.strict(S.row(i))) return i;
            }
            return std::nullopt;
    }
    return std::nullopt;
}

std::optional<std::size_t> find_pivot(const Point& p, const Point& p_prime, const PointSet& S,
                                      PivotStrategy strategy) {
    require_same_dim(p.dim(), S.dim(), "find_pivot");
    PivotContext ctx(p, p_prime);
    return find_pivot(ctx, S, strategy);
}

bool is_witness(const PivotContext& ctx, const PointSet& S) {
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (ctx.gap(S.row(i)) >= 0.0) return false;
    }
    return true;
}

bool is_witness(const Point& p, const Point& p_prime, const PointSet& S) {
    require_same_dim(p.dim(), S.dim(), "is_witness");
    PivotContext ctx(p, p_prime);
    return is_witness(ctx, S);
}

ScanResult scan_pivots(const PivotContext& ctx, const PointSet& S, PivotStrategy strategy) {
    ScanResult out;
    if (strategy != PivotStrategy::StrictFirst) {
        out.index = find_pivot(ctx, S, strategy);
        return out;
    }
    // Single pass: one dot product per row decides both the strict and the
    // plain condition. Stops at the first strict pivot; otherwise remembers
    // the lowest plain pivot as fallback.
    std::optional<std::size_t> plain;
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (ctx.strict(S.row(i))) {
            out.index = i;
            return out;
        }
        if (!plain && ctx.gap(S.row(i)) >= 0.0) plain = i;
    }
    if (plain) {
        out.index = plain;
        out.nonstrict_fallback = true;
    }
    return out;
}

double nearest_alpha(std::span<const double> p, std::span<const double> p_prime,
                     std::span<const double> v) {
    require_same_dim(p.size(), p_prime.size(), "nearest_alpha");
    require_same_dim(p.size(), v.size(), "nearest_alpha");
    const double den = kernels::squared_distance(v.data(), p_prime.data(), v.size());
    if (den == 0.0) return 0.0;  // degenerate segment: stay at p'
    sub(tls_u, p, p_prime);
    sub(tls_z, v, p_prime);
    const double num = kernels::dot(tls_u.data(), tls_z.data(), tls_u.size());
    const double alpha = num / den;
    if (alpha <= 0.0) return 0.0;
    if (alpha >= 1.0) return 1.0;
    return alpha;
}

NearestResult nearest_on_segment(const Point& p, const Point& p_prime, const Point& v) {
    const double alpha = nearest_alpha(p.span(), p_prime.span(), v.span());
    NearestResult out;
    out.alpha = alpha;
    if (alpha == 0.0) {
        out.point = p_prime;
    } else if (alpha == 1.0) {
        out.point = v;
    } else {
        std::vector<double> coords(p.dim());
        kernels::blend(coords.data(), p_prime.data(), v.data(), 1.0 - alpha, alpha, p.dim());
        out.point = Point(std::move(coords));
    }
    return out;
}

GapBounds witness_gap_bounds(const Point& p, const Point& p_prime) {
    const double d = std::sqrt(squared_distance(p, p_prime));
    // lower is derived from upper so the factor-2 relation is exact.
    return GapBounds{d / 2.0, d};
}

}  // namespace trihull
