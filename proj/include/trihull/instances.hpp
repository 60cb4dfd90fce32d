#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "trihull/point.hpp"

namespace trihull {

enum class Truth { MemberInterior, MemberBoundaryNear, NonMember };

// Generated problem with its ground truth attached. Member instances carry
// the convex coefficients that produced p; nonmember instances carry a unit
// direction u with u.v_i - u.p >= known_margin for every i, which lower
// bounds the distance from p to the hull.
struct Instance {
    PointSet S;
    Point p;
    Truth truth = Truth::MemberInterior;
    std::optional<double> known_margin;
    std::optional<double> known_rho;
    std::uint64_t seed = 0;
    std::vector<double> gen_coeffs;             // member certificate, empty otherwise
    std::vector<double> separating_direction;   // nonmember certificate, empty otherwise
};

// p = sum lambda_i v_i with every lambda_i >= 1/(2n); points uniform in the
// unit cube.
Instance gen_interior(std::size_t n, std::size_t m, std::uint64_t seed);

// p at the origin, S inside a randomly rotated slab with first rotated
// coordinate in [margin, 1 + margin]. margin must be > 0.
Instance gen_nonmember(std::size_t n, std::size_t m, std::uint64_t seed, double margin);

// Regular unit-edge m-simplex (n = m + 1 vertices) queried at its centroid.
// known_rho = 1 / sqrt(2 m (m+1)), the inscribed radius.
Instance gen_simplex_centroid(std::size_t m);

// Interior instance pushed toward the midpoint f of the first two points:
// p = (1 - delta) f + delta c with c the centroid. delta in (0, 1), n >= 3.
Instance gen_near_boundary(std::size_t n, std::size_t m, std::uint64_t seed, double delta);

const char* to_string(Truth t);
std::optional<Truth> truth_from_string(std::string_view name);

}  // namespace trihull
