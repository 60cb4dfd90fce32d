#pragma once

#include <optional>
#include <span>
#include <vector>

#include "trihull/point.hpp"

namespace trihull {

// How a scan chooses among candidate pivots.
//   FirstIndex: lowest index whose distance gap is >= 0.
//   BestGap:    index maximizing the gap d^2(p',v) - d^2(p,v); lowest wins ties.
//   StrictFirst: lowest index satisfying the angle condition
//                (p'-p).(v-p) <= 0, which implies the gap condition.
enum class PivotStrategy { FirstIndex, BestGap, StrictFirst };

double squared_distance(std::span<const double> a, std::span<const double> b);
double squared_distance(const Point& a, const Point& b);

// R = max_i d(p, v_i). One square root, computed from exact comparisons of
// squared distances.
double radius_R(const Point& p, const PointSet& S);

// Shared quantities for every pivot/witness test at a fixed pair (p, p'):
//
//   gap(v) = d^2(p',v) - d^2(p,v) = (p'.p' - p.p) - 2 v.(p'-p)
//
// v is a pivot iff gap(v) >= 0; p' is a witness iff gap(v) < 0 for all v in
// S. Every caller evaluates the same expression, so "some pivot exists" and
// "is a witness" are exact complements even in floating point.
class PivotContext {
public:
    PivotContext() = default;
    PivotContext(const Point& p, const Point& p_prime);

    void reset(std::span<const double> p, std::span<const double> p_prime);

    double gap(std::span<const double> v) const;
    // (p'-p).(v-p) <= 0, evaluated as v.(p'-p) <= p.(p'-p).
    bool strict(std::span<const double> v) const;

    std::span<const double> direction() const { return {direction_.data(), direction_.size()}; }

private:
    std::vector<double> direction_;  // p' - p
    double norm_shift_ = 0.0;        // p'.p' - p.p
    double strict_threshold_ = 0.0;  // p.(p'-p)
};

bool is_pivot(const Point& p, const Point& p_prime, const Point& v);
bool is_strict_pivot(const Point& p, const Point& p_prime, const Point& v);

// Lowest/best index satisfying the strategy's own condition, or absent.
// StrictFirst here does not fall back to plain pivots; solvers layer that.
std::optional<std::size_t> find_pivot(const Point& p, const Point& p_prime, const PointSet& S,
                                      PivotStrategy strategy);
std::optional<std::size_t> find_pivot(const PivotContext& ctx, const PointSet& S,
                                      PivotStrategy strategy);

bool is_witness(const Point& p, const Point& p_prime, const PointSet& S);
bool is_witness(const PivotContext& ctx, const PointSet& S);

// One full pass over S serving the solvers: strategy choice, strict->plain
// fallback, and pivot existence, all from a single scan.
struct ScanResult {
    std::optional<std::size_t> index;  // chosen pivot (after fallback, if any)
    bool nonstrict_fallback = false;   // StrictFirst found no strict pivot, used a plain one
};
ScanResult scan_pivots(const PivotContext& ctx, const PointSet& S, PivotStrategy strategy);

// Point of segment [p', v] nearest to p, with its blend weight alpha
// (result = (1-alpha) p' + alpha v, alpha clamped to [0,1]).
struct NearestResult {
    Point point;
    double alpha = 0.0;
};
NearestResult nearest_on_segment(const Point& p, const Point& p_prime, const Point& v);

// The alpha of nearest_on_segment without forming the point.
double nearest_alpha(std::span<const double> p, std::span<const double> p_prime,
                     std::span<const double> v);

// Distance bracket certified by a witness p': the true distance from p to
// the hull lies in [d(p,p')/2, d(p,p')].
struct GapBounds {
    double lower = 0.0;
    double upper = 0.0;
};
GapBounds witness_gap_bounds(const Point& p, const Point& p_prime);

}  // namespace trihull
