#pragma once

#include <cstddef>
#include <vector>

#include "trihull/geometry.hpp"
#include "trihull/point.hpp"

namespace trihull {

// Iterate p' together with the convex-combination coefficients over S that
// produce it. The coefficients are the self-certifying part of every result:
// they stay >= 0, sum to 1 (within renormalization drift), and reconstruct
// the point.
struct ConvexIterate {
    Point point;
    std::vector<double> coeffs;
};

// Start at the point of S nearest to p (lowest index on ties); coefficients
// are the indicator of that point.
ConvexIterate init_iterate(const Point& p, const PointSet& S);

// Move to the point of segment [p', v] nearest to p. Coefficients blend the
// same way the point does: c <- (1-alpha) c + alpha e_v.
ConvexIterate step_nearest(const ConvexIterate& it, std::size_t v_index, const Point& p,
                           const PointSet& S);

// Move to the midpoint of [p', v]; alpha fixed at 1/2.
ConvexIterate step_midpoint(const ConvexIterate& it, std::size_t v_index, const PointSet& S);

// Rebuild the point from the coefficients and rescale their sum to 1.
// Solvers apply this every 1024 steps to keep reconstruction drift bounded.
void renormalize(ConvexIterate& it, const PointSet& S);

// Invariant probe used by verification and tests. Reconstruction error is
// per coordinate, relative to max(1, |coordinate|).
struct IterateCheck {
    double coeff_sum = 0.0;
    double min_coeff = 0.0;
    double max_reconstruction_err = 0.0;
};
IterateCheck check_iterate(const ConvexIterate& it, const PointSet& S);

namespace detail {

// In-place forms used by the solver loops. alpha must already lie in [0,1].
void step_toward_vertex(ConvexIterate& it, std::size_t v_index, double alpha, const PointSet& S);
void step_toward_mix(ConvexIterate& it, const ConvexIterate& target, double alpha);

// point <- sum_i coeffs[i] * S[i], accumulated row by row in index order.
void reconstruct(std::vector<double>& out, const std::vector<double>& coeffs, const PointSet& S);

}  // namespace detail

}  // namespace trihull
