#include "trihull/instances.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trihull/kernels.hpp"
#include "trihull/rng.hpp"

namespace trihull {
namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// Platform-stable bell-shaped draw: sum of 12 uniforms minus 6. Avoids libm
// transcendentals, whose last bits differ across implementations.
double gauss_ish(RngStream& rng) {
    double s = 0.0;
    for (int i = 0; i < 12; ++i) s += rng.next_double();
    return s - 6.0;
}

// Random rotation via modified Gram-Schmidt on a random matrix, columns
// processed in order. Deterministic given the stream; no external linear
// algebra so every platform produces the same bits.
// Returns column-major m x m orthonormal Q.
std::vector<double> random_rotation(std::size_t m, RngStream& rng) {
    std::vector<double> q(m * m);
    std::vector<double> col(m);
    for (std::size_t j = 0; j < m; ++j) {
        while (true) {
            for (std::size_t i = 0; i < m; ++i) col[i] = gauss_ish(rng);
            // Remove projections onto the accepted columns.
            for (std::size_t k = 0; k < j; ++k) {
                const double* qk = q.data() + k * m;
                const double proj = kernels::dot(col.data(), qk, m);
                for (std::size_t i = 0; i < m; ++i) col[i] -= proj * qk[i];
            }
            const double norm2 = kernels::dot(col.data(), col.data(), m);
            if (norm2 > 1e-12) {
                const double inv = 1.0 / std::sqrt(norm2);
                double* qj = q.data() + j * m;
                for (std::size_t i = 0; i < m; ++i) qj[i] = col[i] * inv;
                break;
            }
            // Degenerate draw: take the next one from the stream.
        }
    }
    return q;
}

// y = Q x for column-major Q.
void rotate(std::vector<double>& y, const std::vector<double>& q, const double* x,
            std::size_t m) {
    y.assign(m, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        const double* qj = q.data() + j * m;
        const double xj = x[j];
        for (std::size_t i = 0; i < m; ++i) y[i] += xj * qj[i];
    }
}

std::vector<double> combine(const PointSet& S, const std::vector<double>& lambda) {
    std::vector<double> p(S.dim(), 0.0);
    for (std::size_t i = 0; i < S.size(); ++i) {
        const auto row = S.row(i);
        for (std::size_t j = 0; j < row.size(); ++j) p[j] += lambda[i] * row[j];
    }
    return p;
}

}  // namespace

Instance gen_interior(std::size_t n, std::size_t m, std::uint64_t seed) {
    require(n >= 1 && m >= 1, "gen_interior: need n >= 1 and m >= 1");
    RngStream points(seed, streams::instance_points);
    RngStream weights(seed, streams::instance_weights);

    std::vector<double> flat(n * m);
    for (auto& x : flat) x = points.next_double();

    // lambda_i = 1/(2n) + (u_i / sum u) / 2 keeps every weight >= 1/(2n)
    // while summing to exactly-1 up to two roundings.
    std::vector<double> u(n);
    double sum = 0.0;
    for (auto& x : u) {
        x = weights.next_double();
        sum += x;
    }
    if (sum <= 0.0) sum = 1.0;
    std::vector<double> lambda(n);
    for (std::size_t i = 0; i < n; ++i) lambda[i] = 1.0 / (2.0 * n) + (u[i] / sum) * 0.5;

    Instance inst;
    inst.S = PointSet(n, m, std::move(flat));
    inst.p = Point(combine(inst.S, lambda));
    inst.truth = Truth::MemberInterior;
    inst.seed = seed;
    inst.gen_coeffs = std::move(lambda);
    return inst;
}

Instance gen_nonmember(std::size_t n, std::size_t m, std::uint64_t seed, double margin) {
    require(n >= 1 && m >= 1, "gen_nonmember: need n >= 1 and m >= 1");
    require(margin > 0.0, "gen_nonmember: margin must be > 0");
    RngStream points(seed, streams::instance_points);
    RngStream rotation(seed, streams::instance_rotation);

    const std::vector<double> q = random_rotation(m, rotation);

    std::vector<double> flat(n * m);
    std::vector<double> x(m);
    std::vector<double> y;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) x[j] = points.next_double();
        x[0] += margin;  // slab offset along the first pre-rotation axis
        rotate(y, q, x.data(), m);
        for (std::size_t j = 0; j < m; ++j) flat[i * m + j] = y[j];
    }

    Instance inst;
    inst.S = PointSet(n, m, std::move(flat));
    inst.p = Point(std::vector<double>(m, 0.0));
    inst.truth = Truth::NonMember;
    inst.seed = seed;
    // u = Q e_0; u.v_i recovers the pre-rotation first coordinate.
    inst.separating_direction.assign(q.begin(), q.begin() + m);
    // Certify what the generated doubles actually satisfy, not the exact
    // value: the rotation and the dot below each round.
    double worst = margin + 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double a =
            kernels::dot(inst.separating_direction.data(), inst.S.row(i).data(), m);
        if (a < worst) worst = a;
    }
    const double slack = 1e-12 * (1.0 + margin) * static_cast<double>(m);
    inst.known_margin = std::min(margin, worst) - slack;
    return inst;
}

Instance gen_simplex_centroid(std::size_t m) {
    require(m >= 1, "gen_simplex_centroid: need m >= 1");
    const std::size_t n = m + 1;
    // Unit-edge regular simplex, vertex 0 at the origin: vertex j has
    // coordinates beta_1..beta_{j-1}, gamma_j, 0... with
    // beta_i = 1/sqrt(2 i (i+1)) and gamma_j = sqrt((j+1)/(2j)).
    std::vector<double> flat(n * m, 0.0);
    std::vector<double> beta(m + 1, 0.0);
    for (std::size_t i = 1; i <= m; ++i) {
        beta[i] = 1.0 / std::sqrt(2.0 * static_cast<double>(i) * (static_cast<double>(i) + 1.0));
    }
    for (std::size_t j = 1; j <= m; ++j) {
        double* row = flat.data() + j * m;
        for (std::size_t i = 1; i < j; ++i) row[i - 1] = beta[i];
        row[j - 1] = std::sqrt((static_cast<double>(j) + 1.0) / (2.0 * static_cast<double>(j)));
    }

    Instance inst;
    inst.S = PointSet(n, m, std::move(flat));
    std::vector<double> centroid(m, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = inst.S.row(i);
        for (std::size_t j = 0; j < m; ++j) centroid[j] += row[j];
    }
    for (double& c : centroid) c /= static_cast<double>(n);
    inst.p = Point(std::move(centroid));
    inst.truth = Truth::MemberInterior;
    inst.known_rho = 1.0 / std::sqrt(2.0 * static_cast<double>(m) * (static_cast<double>(m) + 1.0));
    inst.seed = 0;
    inst.gen_coeffs.assign(n, 1.0 / static_cast<double>(n));
    return inst;
}

Instance gen_near_boundary(std::size_t n, std::size_t m, std::uint64_t seed, double delta) {
    require(n >= 3, "gen_near_boundary: need n >= 3");
    require(delta > 0.0 && delta < 1.0, "gen_near_boundary: delta must lie in (0, 1)");
    Instance inst = gen_interior(n, m, seed);

    std::vector<double> f(m), c(m, 0.0);
    const auto v0 = inst.S.row(0);
    const auto v1 = inst.S.row(1);
    for (std::size_t j = 0; j < m; ++j) f[j] = (v0[j] + v1[j]) / 2.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = inst.S.row(i);
        for (std::size_t j = 0; j < m; ++j) c[j] += row[j];
    }
    for (double& x : c) x /= static_cast<double>(n);

    std::vector<double> p(m);
    kernels::blend(p.data(), f.data(), c.data(), 1.0 - delta, delta, m);
    inst.p = Point(std::move(p));
    inst.truth = Truth::MemberBoundaryNear;

    std::vector<double> lambda(n, delta / static_cast<double>(n));
    lambda[0] = (1.0 - delta) / 2.0 + delta / static_cast<double>(n);
    lambda[1] = lambda[0];
    inst.gen_coeffs = std::move(lambda);
    inst.seed = seed;
    return inst;
}

const char* to_string(Truth t) {
    switch (t) {
        case Truth::MemberInterior: return "member_interior";
        case Truth::MemberBoundaryNear: return "member_boundary_near";
        case Truth::NonMember: return "nonmember";
    }
    return "?";
}

std::optional<Truth> truth_from_string(std::string_view name) {
    if (name == "member_interior") return Truth::MemberInterior;
    if (name == "member_boundary_near") return Truth::MemberBoundaryNear;
    if (name == "nonmember") return Truth::NonMember;
    return std::nullopt;
}

}  // namespace trihull
