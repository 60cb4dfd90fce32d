// Chaos-game clouds. The forced-choice constructor gives an exact oracle:
// the halving recurrence is plain fp arithmetic a test can restate verbatim.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "trihull/chaos.hpp"
#include "trihull/geometry.hpp"

using namespace trihull;

namespace {

// Barycentric coordinates of q in the triangle rows of S (2-d, 3 vertices).
std::array<double, 3> barycentric(const PointSet& S, std::span<const double> q) {
    const auto a = S.row(0);
    const auto b = S.row(1);
    const auto c = S.row(2);
    const double det = (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]);
    const double l1 = ((q[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (q[1] - a[1])) / det;
    const double l2 = ((b[0] - a[0]) * (q[1] - a[1]) - (q[0] - a[0]) * (b[1] - a[1])) / det;
    return {1.0 - l1 - l2, l1, l2};
}

double dist2(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) s += (a[j] - b[j]) * (a[j] - b[j]);
    return s;
}

}  // namespace

TEST_CASE("repeating one vertex halves the distance to it each step") {
    const PointSet tri = equilateral_triangle();
    const Point seed{1.0, 0.0};  // vertex 1; distance 1 from vertex 0
    const std::vector<std::uint32_t> choices{0, 0, 0, 0, 0, 0};
    const ChaosCloud cloud = chaos_game_forced(tri, seed, choices);
    REQUIRE(cloud.steps == 6);
    for (std::size_t t = 0; t < cloud.steps; ++t) {
        const double d = std::sqrt(dist2(cloud.dot(t), tri.row(0)));
        CHECK(d == std::ldexp(1.0, -static_cast<int>(t) - 1));
    }
}

TEST_CASE("single-vertex set contracts the seed by exact powers of two") {
    const PointSet S = PointSet::from_rows({{0.0, 0.0, 0.0}});
    const Point seed{8.0, -4.0, 2.0};
    const std::vector<std::uint32_t> choices(5, 0);
    const ChaosCloud cloud = chaos_game_forced(S, seed, choices);
    for (std::size_t t = 0; t < 5; ++t) {
        const auto q = cloud.dot(t);
        const double scale = std::ldexp(1.0, -static_cast<int>(t) - 1);
        CHECK(q[0] == 8.0 * scale);
        CHECK(q[1] == -4.0 * scale);
        CHECK(q[2] == 2.0 * scale);
    }
}

TEST_CASE("forced cloud matches a literal restatement of the recurrence") {
    const PointSet S = PointSet::from_rows({{0, 0}, {4, 0}, {2, 3}, {-1, 1}});
    const Point seed{1.25, 0.75};
    std::vector<std::uint32_t> choices;
    for (int rep = 0; rep < 40; ++rep) choices.push_back(static_cast<std::uint32_t>(rep % 4));
    const ChaosCloud cloud = chaos_game_forced(S, seed, choices);

    std::vector<double> x = seed.coords();
    for (std::size_t t = 0; t < choices.size(); ++t) {
        const auto v = S.row(choices[t]);
        for (std::size_t j = 0; j < 2; ++j) x[j] = 0.5 * x[j] + 0.5 * v[j];
        const auto q = cloud.dot(t);
        CHECK(q[0] == x[0]);
        CHECK(q[1] == x[1]);
    }
}

TEST_CASE("chaos_game validates its inputs") {
    const PointSet tri = equilateral_triangle();
    CHECK_THROWS_AS(chaos_game_forced(tri, Point{0.0, 0.0, 0.0}, std::vector<std::uint32_t>{0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(chaos_game_forced(tri, Point{0.0, 0.0}, std::vector<std::uint32_t>{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(chaos_game_forced(tri, Point{0.0, 0.0}, std::vector<std::uint32_t>{3}),
                    std::invalid_argument);
    RngStream rng(1, streams::chaos_vertex);
    CHECK_THROWS_AS(chaos_game(tri, Point{0.0, 0.0}, 0, rng), std::invalid_argument);
}

TEST_CASE("square clouds stay inside the square") {
    const PointSet sq = PointSet::from_rows({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    RngStream rng(99, streams::chaos_vertex);
    const ChaosCloud cloud = chaos_game(sq, Point{0.5, 0.5}, 10000, rng);
    for (std::size_t t = 0; t < cloud.steps; ++t) {
        const auto q = cloud.dot(t);
        CHECK(q[0] >= 0.0);
        CHECK(q[0] <= 1.0);
        CHECK(q[1] >= 0.0);
        CHECK(q[1] <= 1.0);
    }
}

TEST_CASE("triangle clouds have nonnegative barycentric coordinates") {
    RngStream rng(7, streams::chaos_vertex);
    const ChaosCloud cloud = sierpinski_cloud(5000, 12, rng);
    for (std::size_t t = 0; t < cloud.steps; ++t) {
        const auto bc = barycentric(cloud.vertices, cloud.dot(t));
        for (const double l : bc) {
            CHECK(l >= -1e-9);
            CHECK(l <= 1.0 + 1e-9);
        }
    }
}

TEST_CASE("marked dots avoid the open middle quarter triangle after burn-in") {
    const std::uint64_t burn = 12;
    // Euclidean slack from seed attenuation: 2^-burn_in times the diameter.
    const double tol = std::ldexp(1.0, -static_cast<int>(burn));
    for (std::uint64_t s = 0; s < 5; ++s) {
        RngStream rng(1000 + s, streams::chaos_vertex);
        const ChaosCloud cloud = sierpinski_cloud(20000, burn, rng);
        CHECK(cloud.marked_count() == 20000 - burn);
        for (std::size_t t = burn; t < cloud.steps; ++t) {
            const auto bc = barycentric(cloud.vertices, cloud.dot(t));
            // Inside the middle triangle means every coordinate below 1/2;
            // penetration converts the margin to Euclidean distance.
            double pen = 1.0;
            for (const double l : bc) pen = std::min(pen, 0.5 - l);
            if (pen > 0.0) CHECK(pen * (std::sqrt(3.0) / 2.0) <= tol);
        }
    }
}

TEST_CASE("burn_in of steps minus one leaves a single marked dot") {
    RngStream rng(5, streams::chaos_vertex);
    const ChaosCloud cloud = sierpinski_cloud(64, 63, rng);
    CHECK(cloud.marked_count() == 1);
}

TEST_CASE("cell address check accepts faithful clouds") {
    RngStream rng(21, streams::chaos_vertex);
    const ChaosCloud cloud = sierpinski_cloud(3000, 12, rng);
    CHECK(cell_address_check(cloud, 1));
    CHECK(cell_address_check(cloud, 5));
    CHECK(cell_address_check(cloud, 20));
    CHECK(cell_address_check(cloud, 0));
    CHECK_THROWS_AS(cell_address_check(cloud, cloud.steps + 1), std::invalid_argument);
}

TEST_CASE("cell address check rejects a perturbed dot") {
    RngStream rng(22, streams::chaos_vertex);
    ChaosCloud cloud = sierpinski_cloud(500, 12, rng);
    SUBCASE("visible perturbation fails") {
        cloud.dots[2 * 250] += 0.1;
        CHECK_FALSE(cell_address_check(cloud, 5));
    }
    SUBCASE("perturbation below tolerance passes") {
        cloud.dots[2 * 250] += 1e-12;
        CHECK(cell_address_check(cloud, 5));
    }
}

TEST_CASE("address check holds across dimensions and vertex counts") {
    for (std::size_t n = 2; n <= 6; ++n) {
        for (std::size_t m = 1; m <= 6; m += 2) {
            RngStream gen(n * 100 + m, streams::chaos_vertex);
            std::vector<std::vector<double>> rows(n);
            for (auto& r : rows) {
                r.resize(m);
                for (auto& x : r) x = gen.next_double() * 6 - 3;
            }
            std::vector<double> seed(m, 0.25);
            const ChaosCloud cloud =
                chaos_game(PointSet::from_rows(rows), Point(std::move(seed)), 2000, gen);
            CHECK(cell_address_check(cloud, 1));
            CHECK(cell_address_check(cloud, 20));
        }
    }
}

TEST_CASE("two seeds with shared choices contract together exponentially") {
    const PointSet tri = equilateral_triangle();
    std::vector<std::uint32_t> choices;
    RngStream rng(3, streams::chaos_vertex);
    for (int i = 0; i < 64; ++i) choices.push_back(static_cast<std::uint32_t>(rng.next_below(3)));
    const Point seed_a{0.1, 0.2};
    const Point seed_b{0.9, 0.05};
    const ChaosCloud a = chaos_game_forced(tri, seed_a, choices);
    const ChaosCloud b = chaos_game_forced(tri, seed_b, choices);
    const double d0 = std::sqrt(squared_distance(seed_a, seed_b));
    for (std::size_t t = 0; t < 64; ++t) {
        const double dt = std::sqrt(dist2(a.dot(t), b.dot(t)));
        const double bound = std::ldexp(d0, -static_cast<int>(t) - 1);
        // Each step rounds once per trajectory, so allow absolute noise on
        // top of the exact halving.
        CHECK(dt <= bound + 1e-13);
    }
    // Past 24 halvings the seed's influence is below a millionth of d0.
    CHECK(std::sqrt(dist2(a.dot(30), b.dot(30))) <= d0 * 1e-6);
}

TEST_CASE("hypothesis probe finds a trivial hit at ratio one") {
    RngStream rng(11, streams::chaos_vertex);
    const ChaosCloud cloud = sierpinski_cloud(2000, 12, rng);
    const PointSet tri = equilateral_triangle();
    const Point p{0.5, std::sqrt(3.0) / 6.0};  // centroid
    const auto hit = hypothesis_probe(p, tri, 0, 1.0, cloud);
    REQUIRE(hit.has_value());
    CHECK(hit->achieved_ratio <= 1.0);
}

TEST_CASE("hypothesis probe reports ratio zero when a dot equals p") {
    const PointSet S = PointSet::from_rows({{2, 0}});
    const Point p{1, 0};
    // One halving from seed (2p - v) lands exactly on p.
    const ChaosCloud cloud = chaos_game_forced(S, Point{0, 0}, std::vector<std::uint32_t>{0});
    REQUIRE(cloud.steps == 1);
    CHECK(cloud.dot(0)[0] == 1.0);
    const auto hit = hypothesis_probe(p, S, 0, 0.5, cloud);
    REQUIRE(hit.has_value());
    CHECK(hit->dot_index == 0);
    CHECK(hit->achieved_ratio == 0.0);
}

TEST_CASE("hypothesis probe returns nothing when no dot pivots close enough") {
    // All dots collapse toward (0,0); for p far on the other side of v they
    // never pivot within the requested ratio.
    const PointSet S = PointSet::from_rows({{0.0, 0.0}});
    const ChaosCloud cloud = chaos_game_forced(S, Point{1, 1}, std::vector<std::uint32_t>(4, 0));
    const PointSet target = PointSet::from_rows({{10.0, 10.0}});
    const Point p{-5, -5};
    const auto hit = hypothesis_probe(p, target, 0, 1e-6, cloud);
    CHECK_FALSE(hit.has_value());
    CHECK_THROWS_AS(hypothesis_probe(p, target, 1, 0.5, cloud), std::invalid_argument);
    CHECK_THROWS_AS(hypothesis_probe(p, target, 0, 0.0, cloud), std::invalid_argument);
}

TEST_CASE("sierpinski cloud is reproducible from its stream") {
    RngStream r1(77, streams::chaos_vertex);
    RngStream r2(77, streams::chaos_vertex);
    const ChaosCloud a = sierpinski_cloud(300, 12, r1);
    const ChaosCloud b = sierpinski_cloud(300, 12, r2);
    CHECK(a.dots == b.dots);
    CHECK(a.choices == b.choices);
    CHECK(a.seed_point == b.seed_point);
}
