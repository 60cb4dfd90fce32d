#include "trihull/iterate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trihull/kernels.hpp"

namespace trihull {

ConvexIterate init_iterate(const Point& p, const PointSet& S) {
    require_same_dim(p.dim(), S.dim(), "init_iterate");
    std::size_t best = 0;
    double best_d2 = kernels::squared_distance(p.data(), S.row(0).data(), p.dim());
    for (std::size_t i = 1; i < S.size(); ++i) {
        const double d2 = kernels::squared_distance(p.data(), S.row(i).data(), p.dim());
        if (d2 < best_d2) {
            best = i;
            best_d2 = d2;
        }
    }
    ConvexIterate it;
    it.point = S.point(best);
    it.coeffs.assign(S.size(), 0.0);
    it.coeffs[best] = 1.0;
    return it;
}

namespace detail {

void step_toward_vertex(ConvexIterate& it, std::size_t v_index, double alpha, const PointSet& S) {
    if (v_index >= S.size()) throw std::invalid_argument("step: vertex index out of range");
    const auto v = S.row(v_index);
    kernels::blend(it.point.data(), it.point.data(), v.data(), 1.0 - alpha, alpha, v.size());
    kernels::scale(it.coeffs.data(), 1.0 - alpha, it.coeffs.size());
    it.coeffs[v_index] += alpha;
}

void step_toward_mix(ConvexIterate& it, const ConvexIterate& target, double alpha) {
    require_same_dim(it.point.dim(), target.point.dim(), "step_toward_mix");
    kernels::blend(it.point.data(), it.point.data(), target.point.data(), 1.0 - alpha, alpha,
                   it.point.dim());
    kernels::blend(it.coeffs.data(), it.coeffs.data(), target.coeffs.data(), 1.0 - alpha, alpha,
                   it.coeffs.size());
}

void reconstruct(std::vector<double>& out, const std::vector<double>& coeffs, const PointSet& S) {
    out.assign(S.dim(), 0.0);
    for (std::size_t i = 0; i < S.size(); ++i) {
        const auto row = S.row(i);
        const double c = coeffs[i];
        for (std::size_t j = 0; j < row.size(); ++j) out[j] += c * row[j];
    }
}

}  // namespace detail

ConvexIterate step_nearest(const ConvexIterate& it, std::size_t v_index, const Point& p,
                           const PointSet& S) {
    require_same_dim(it.coeffs.size(), S.size(), "step_nearest coeffs");
    if (v_index >= S.size()) throw std::invalid_argument("step: vertex index out of range");
    const double alpha = nearest_alpha(p.span(), it.point.span(), S.row(v_index));
    ConvexIterate out = it;
    detail::step_toward_vertex(out, v_index, alpha, S);
    return out;
}

ConvexIterate step_midpoint(const ConvexIterate& it, std::size_t v_index, const PointSet& S) {
    require_same_dim(it.coeffs.size(), S.size(), "step_midpoint coeffs");
    ConvexIterate out = it;
    detail::step_toward_vertex(out, v_index, 0.5, S);
    return out;
}

void renormalize(ConvexIterate& it, const PointSet& S) {
    require_same_dim(it.coeffs.size(), S.size(), "renormalize");
    double sum = 0.0;
    for (double c : it.coeffs) sum += c;
    if (sum <= 0.0) throw std::invalid_argument("renormalize: coefficient sum must be positive");
    kernels::scale(it.coeffs.data(), 1.0 / sum, it.coeffs.size());
    // Rebuild the point from the rescaled coefficients so the pair leaves
    // here exactly coupled.
    std::vector<double> rebuilt;
    detail::reconstruct(rebuilt, it.coeffs, S);
    it.point = Point(std::move(rebuilt));
}

IterateCheck check_iterate(const ConvexIterate& it, const PointSet& S) {
    require_same_dim(it.coeffs.size(), S.size(), "check_iterate");
    require_same_dim(it.point.dim(), S.dim(), "check_iterate");
    IterateCheck out;
    out.min_coeff = it.coeffs.empty() ? 0.0 : it.coeffs.front();
    for (double c : it.coeffs) {
        out.coeff_sum += c;
        if (c < out.min_coeff) out.min_coeff = c;
    }
    std::vector<double> rebuilt;
    detail::reconstruct(rebuilt, it.coeffs, S);
    for (std::size_t j = 0; j < rebuilt.size(); ++j) {
        const double scale = std::max(1.0, std::fabs(rebuilt[j]));
        const double err = std::fabs(rebuilt[j] - it.point[j]) / scale;
        if (err > out.max_reconstruction_err) out.max_reconstruction_err = err;
    }
    return out;
}

}  // namespace trihull
