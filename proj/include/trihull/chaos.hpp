#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "trihull/point.hpp"
#include "trihull/rng.hpp"

namespace trihull {

// Dot cloud produced by iterating x_{t+1} = (x_t + v_{c_t}) / 2 over a
// vertex set. choices[t] is the vertex index that produced dots[t]. Dots
// with index < burn_in are unmarked: still present (replay needs them) but
// excluded from exports and density statements.
struct ChaosCloud {
    PointSet vertices;
    std::size_t steps = 0;
    std::vector<double> dots;  // steps x dim(), row-major
    std::vector<std::uint32_t> choices;
    Point seed_point;
    std::uint64_t burn_in = 0;

    std::size_t dim() const { return vertices.dim(); }
    std::span<const double> dot(std::size_t t) const {
        return {dots.data() + t * dim(), dim()};
    }
    std::size_t marked_count() const {
        return steps > burn_in ? steps - static_cast<std::size_t>(burn_in) : 0;
    }
};

// The canonical unit-edge triangle {(0,0), (1,0), (1/2, sqrt(3)/2)}.
PointSet equilateral_triangle();

// Run the halving iteration with vertex choices drawn from rng.
ChaosCloud chaos_game(const PointSet& S, const Point& seed_point, std::size_t steps,
                      RngStream& rng);

// Same iteration with the choice sequence supplied by the caller; the test
// and replay entry point.
ChaosCloud chaos_game_forced(const PointSet& S, const Point& seed_point,
                             std::span<const std::uint32_t> choices);

// Triangle cloud with a seeded random interior start and the first burn_in
// dots unmarked. The rng supplies the seed point first, then the choices.
ChaosCloud sierpinski_cloud(std::size_t steps, std::uint64_t burn_in, RngStream& rng);

// Every dot must be reproducible from the dot `depth` steps earlier by
// replaying the recorded choices. Returns false on the first dot whose
// replay misses by more than 1e-9 in any coordinate. depth <= steps.
bool cell_address_check(const ChaosCloud& cloud, std::size_t depth);

// First cloud dot q that is a pivot for (p, q) and whose nearest point on
// [q, v] comes within epsilon * d(p, v) of p.
struct ProbeHit {
    std::size_t dot_index = 0;
    double achieved_ratio = 0.0;  // d(p, nearest) / d(p, v)
};
std::optional<ProbeHit> hypothesis_probe(const Point& p, const PointSet& S, std::size_t v_index,
                                         double epsilon, const ChaosCloud& cloud);

}  // namespace trihull
