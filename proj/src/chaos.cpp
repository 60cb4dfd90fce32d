#include "trihull/chaos.hpp"

#include <cmath>
#include <stdexcept>

#include "trihull/geometry.hpp"
#include "trihull/kernels.hpp"

namespace trihull {
namespace {

void halve_toward(double* dst, const double* from, const double* vertex, std::size_t m) {
    kernels::blend(dst, from, vertex, 0.5, 0.5, m);
}

}  // namespace

PointSet equilateral_triangle() {
    return PointSet(3, 2, {0.0, 0.0, 1.0, 0.0, 0.5, std::sqrt(3.0) / 2.0});
}

ChaosCloud chaos_game_forced(const PointSet& S, const Point& seed_point,
                             std::span<const std::uint32_t> choices) {
    require_same_dim(seed_point.dim(), S.dim(), "chaos_game");
    if (choices.empty()) throw std::invalid_argument("chaos_game: need at least one step");
    for (std::uint32_t c : choices) {
        if (c >= S.size()) throw std::invalid_argument("chaos_game: choice out of range");
    }
    const std::size_t m = S.dim();
    ChaosCloud cloud;
    cloud.vertices = S;
    cloud.steps = choices.size();
    cloud.seed_point = seed_point;
    cloud.choices.assign(choices.begin(), choices.end());
    cloud.dots.resize(choices.size() * m);
    const double* prev = seed_point.data();
    for (std::size_t t = 0; t < choices.size(); ++t) {
        double* dst = cloud.dots.data() + t * m;
        halve_toward(dst, prev, S.row(choices[t]).data(), m);
        prev = dst;
    }
    return cloud;
}

ChaosCloud chaos_game(const PointSet& S, const Point& seed_point, std::size_t steps,
                      RngStream& rng) {
    if (steps == 0) throw std::invalid_argument("chaos_game: need at least one step");
    std::vector<std::uint32_t> choices(steps);
    for (auto& c : choices) c = static_cast<std::uint32_t>(rng.next_below(S.size()));
    return chaos_game_forced(S, seed_point, choices);
}

ChaosCloud sierpinski_cloud(std::size_t steps, std::uint64_t burn_in, RngStream& rng) {
    const PointSet tri = equilateral_triangle();
    // Random interior start: normalized positive barycentric weights.
    double w[3];
    double sum = 0.0;
    for (double& x : w) {
        x = rng.next_double();
        sum += x;
    }
    Point seed{0.0, 0.0};
    if (sum > 0.0) {
        for (std::size_t i = 0; i < 3; ++i) {
            const double lambda = w[i] / sum;
            seed[0] += lambda * tri.row(i)[0];
            seed[1] += lambda * tri.row(i)[1];
        }
    } else {
        seed = Point{0.5, std::sqrt(3.0) / 6.0};  // centroid fallback
    }
    ChaosCloud cloud = chaos_game(tri, seed, steps, rng);
    cloud.burn_in = burn_in;
    return cloud;
}

bool cell_address_check(const ChaosCloud& cloud, std::size_t depth) {
    if (depth > cloud.steps) {
        throw std::invalid_argument("cell_address_check: depth exceeds cloud size");
    }
    if (depth == 0) return true;
    const std::size_t m = cloud.dim();
    std::vector<double> replay(m);
    for (std::size_t t = depth; t < cloud.steps; ++t) {
        // Anchor at the dot depth steps back, replay the recorded choices.
        const std::size_t start = t - depth;
        const double* cur = cloud.dots.data() + start * m;
        for (std::size_t k = start + 1; k <= t; ++k) {
            halve_toward(replay.data(), cur, cloud.vertices.row(cloud.choices[k]).data(), m);
            cur = replay.data();
        }
        const double* actual = cloud.dots.data() + t * m;
        for (std::size_t j = 0; j < m; ++j) {
            if (std::fabs(actual[j] - cur[j]) > 1e-9) return false;
        }
    }
    return true;
}

std::optional<ProbeHit> hypothesis_probe(const Point& p, const PointSet& S, std::size_t v_index,
                                         double epsilon, const ChaosCloud& cloud) {
    require_same_dim(p.dim(), S.dim(), "hypothesis_probe");
    require_same_dim(p.dim(), cloud.dim(), "hypothesis_probe");
    if (v_index >= S.size()) throw std::invalid_argument("hypothesis_probe: bad vertex index");
    if (!(epsilon > 0.0)) throw std::invalid_argument("hypothesis_probe: epsilon must be > 0");

    const auto v = S.row(v_index);
    const std::size_t m = p.dim();
    const double dpv = std::sqrt(kernels::squared_distance(p.data(), v.data(), m));
    const double target = epsilon * dpv;
    std::vector<double> nearest(m);
    PivotContext ctx;
    for (std::size_t t = 0; t < cloud.steps; ++t) {
        const auto q = cloud.dot(t);
        ctx.reset(p.span(), q);
        if (ctx.gap(v) < 0.0) continue;  // v is not a pivot for this dot
        const double alpha = nearest_alpha(p.span(), q, v);
        const double* step_point;
        if (alpha == 0.0) {
            step_point = q.data();
        } else if (alpha == 1.0) {
            step_point = v.data();
        } else {
            kernels::blend(nearest.data(), q.data(), v.data(), 1.0 - alpha, alpha, m);
            step_point = nearest.data();
        }
        const double d = std::sqrt(kernels::squared_distance(p.data(), step_point, m));
        if (d <= target) {
            const double ratio = dpv > 0.0 ? d / dpv : (d == 0.0 ? 0.0 : 1.0);
            return ProbeHit{t, ratio};
        }
    }
    return std::nullopt;
}

}  // namespace trihull
