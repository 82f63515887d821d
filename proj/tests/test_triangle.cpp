#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "poncelet/triangle.hpp"

using namespace poncelet;

namespace {

const double kSqrt3 = std::sqrt(3.0);

Triangle right345() { return {{0, 0}, {3, 0}, {0, 4}}; }

Triangle equilateral(double side) {
    return {{0, 0}, {side, 0}, {side / 2, side * kSqrt3 / 2}};
}

std::mt19937_64 rng(7);

Triangle random_triangle(double minAngle = 0.15) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        Triangle t{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
        if (std::abs(t.signed_area()) < 0.05) continue;
        TriangleMetrics m = metrics(t);
        if (std::min({m.theta1, m.theta2, m.theta3}) > minAngle) return t;
    }
}

/// Angle at vertex v between rays v->p and v->q.
double angle_at(const Point2& v, const Point2& p, const Point2& q) {
    Point2 a = p - v, b = q - v;
    return std::atan2(std::abs(cross(a, b)), dot(a, b));
}

}  // namespace

TEST_CASE("metrics: equilateral and 3-4-5") {
    TriangleMetrics e = metrics(equilateral(2));
    CHECK(e.s == doctest::Approx(3).epsilon(1e-14));
    CHECK(e.area == doctest::Approx(kSqrt3).epsilon(1e-14));
    CHECK(e.r == doctest::Approx(1 / kSqrt3).epsilon(1e-14));
    CHECK(e.R == doctest::Approx(2 / kSqrt3).epsilon(1e-14));
    CHECK(e.theta1 == doctest::Approx(M_PI / 3).epsilon(1e-14));

    TriangleMetrics m = metrics(right345());
    CHECK(m.l1 == doctest::Approx(5).epsilon(1e-15));  // |BC|, opposite A
    CHECK(m.l2 == doctest::Approx(4).epsilon(1e-15));
    CHECK(m.l3 == doctest::Approx(3).epsilon(1e-15));
    CHECK(m.area == doctest::Approx(6).epsilon(1e-14));
    CHECK(m.r == doctest::Approx(1).epsilon(1e-14));
    CHECK(m.R == doctest::Approx(2.5).epsilon(1e-14));
    CHECK(m.theta1 == doctest::Approx(M_PI / 2).epsilon(1e-13));

    CHECK_THROWS_AS(metrics(Triangle{{0, 0}, {1, 1}, {2, 2}}), DegenerateTriangle);
    CHECK_THROWS_AS(metrics(Triangle{{1, 1}, {1, 1}, {0, 3}}), DegenerateTriangle);
}

TEST_CASE("center: classical positions on the 3-4-5 triangle") {
    Triangle t = right345();
    CHECK(dist(center(t, CenterId::X(1)), {1, 1}) < 1e-13);
    CHECK(dist(center(t, CenterId::X(2)), {1, 4.0 / 3}) < 1e-13);
    CHECK(dist(center(t, CenterId::X(3)), {1.5, 2}) < 1e-13);     // midpoint of hypotenuse
    CHECK(dist(center(t, CenterId::X(4)), {0, 0}) < 1e-13);       // right-angle vertex
    CHECK(dist(center(t, CenterId::X(20)), {3, 4}) < 1e-13);      // 2 X3 - X4
    CHECK_THROWS_AS(center(t, CenterId::X(11)), UnsupportedCenter);
    CHECK(center_supported(354));
    CHECK_FALSE(center_supported(9));
}

TEST_CASE("center: everything coincides on the equilateral triangle") {
    Triangle t = equilateral(2);
    Point2 g{1, 1 / kSqrt3};
    for (int k : {1, 2, 3, 4, 5, 6, 7, 8, 10, 20, 354})
        CHECK(dist(center(t, CenterId::X(k)), g) < 1e-12);
}

TEST_CASE("barycentric_point and barycentrics_of round trip") {
    Triangle t = right345();
    CHECK(dist(barycentric_point(t, {1, 0, 0}), t.A) < 1e-15);
    CHECK(dist(barycentric_point(t, {0, 2, 0}), t.B) < 1e-15);
    CHECK(dist(barycentric_point(t, {1, 1, 1}), {1, 4.0 / 3}) < 1e-14);
    CHECK_THROWS_AS(barycentric_point(t, {1, -1, 0}), PointAtInfinity);

    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 50; ++i) {
        Triangle tr = random_triangle();
        Point2 p{u(rng), u(rng)};
        CHECK(dist(barycentric_point(tr, barycentrics_of(tr, p)), p) < 1e-11);
    }
}

TEST_CASE("isogonal_conjugate: fixed points, swaps, involution") {
    for (int i = 0; i < 20; ++i) {
        Triangle t = random_triangle();
        Point2 x1 = center(t, CenterId::X(1));
        CHECK(dist(isogonal_conjugate(t, x1), x1) < 1e-10);
        Point2 x3 = center(t, CenterId::X(3));
        Point2 x4 = center(t, CenterId::X(4));
        CHECK(dist(isogonal_conjugate(t, x3), x4) < 1e-9);
        CHECK(dist(isogonal_conjugate(t, x4), x3) < 1e-9);
        Point2 x2 = center(t, CenterId::X(2));
        CHECK(dist(isogonal_conjugate(t, x2), center(t, CenterId::X(6))) < 1e-10);
        // involution on a generic interior point
        Point2 p = barycentric_point(t, {0.2, 0.3, 0.5});
        CHECK(dist(isogonal_conjugate(t, isogonal_conjugate(t, p)), p) < 1e-9);
    }
    Triangle t = right345();
    CHECK_THROWS_AS(isogonal_conjugate(t, Point2{1.5, 0}), OnSideline);
}

TEST_CASE("intouch_triangle: contact points and incircle") {
    Triangle t = right345();
    Triangle it = intouch_triangle(t);
    // tangent length from A is s - l1 = 1, so contacts on the legs are (1,0), (0,1)
    CHECK(dist(it.C, {1, 0}) < 1e-13);
    CHECK(dist(it.B, {0, 1}) < 1e-13);

    // equilateral: contact points are the side midpoints
    Triangle eq = equilateral(2);
    Triangle ieq = intouch_triangle(eq);
    CHECK(dist(ieq.A, {1.5, kSqrt3 / 2}) < 1e-13);
    CHECK(dist(ieq.C, {1, 0}) < 1e-13);

    // incircle of t == circumcircle of the intouch triangle
    for (int i = 0; i < 20; ++i) {
        Triangle tr = random_triangle();
        Triangle itr = intouch_triangle(tr);
        CHECK(metrics(itr).R == doctest::Approx(metrics(tr).r).epsilon(1e-10));
        CHECK(dist(center(itr, CenterId::X(3)), center(tr, CenterId::X(1))) < 1e-10);
    }
}

TEST_CASE("X354 is the centroid of the intouch triangle") {
    Triangle t = random_triangle();
    CHECK(dist(center(t, CenterId::X(354)), center(intouch_triangle(t), CenterId::X(2))) <
          1e-12);
}

TEST_CASE("polar_triangle: equilateral tangential triangle and involution") {
    // equilateral inscribed in the unit circle: the polar (tangential) triangle
    // has circumradius R / cos(60 deg) = 2
    Triangle t{{1, 0},
               {std::cos(2 * M_PI / 3), std::sin(2 * M_PI / 3)},
               {std::cos(4 * M_PI / 3), std::sin(4 * M_PI / 3)}};
    ConicMatrix circ = matrix_of(AxisEllipse({0, 0}, 1, 1));
    Triangle pt = polar_triangle(t, circ);
    for (const Point2& v : pt.vertices()) CHECK(v.norm() == doctest::Approx(2).epsilon(1e-12));

    // duality is an involution
    ConicMatrix ell = matrix_of(AxisEllipse({0.1, -0.2}, 1.5, 0.8));
    for (int i = 0; i < 20; ++i) {
        Triangle tr = random_triangle();
        Triangle back;
        try {
            back = polar_triangle(polar_triangle(tr, ell), ell);
        } catch (const PoleAtInfinity&) {
            continue;  // a sideline through the conic center has no affine pole
        }
        CHECK(dist(back.A, tr.A) < 1e-8);
        CHECK(dist(back.B, tr.B) < 1e-8);
        CHECK(dist(back.C, tr.C) < 1e-8);
    }
}

TEST_CASE("polar_circle_sq: right triangle gives 0, equilateral side 1 gives -1/6") {
    CHECK(std::abs(polar_circle_sq(metrics(right345()))) < 1e-12);
    CHECK(polar_circle_sq(metrics(equilateral(1))) == doctest::Approx(-1.0 / 6).epsilon(1e-13));
}

TEST_CASE("adams_radius: equilateral value and construction oracle") {
    // side 2: r = 1/sqrt3, rho = 12, s^2 = 9 -> r sqrt(12)/3 = 2/3
    CHECK(adams_radius(metrics(equilateral(2))) == doctest::Approx(2.0 / 3).epsilon(1e-13));

    // oracle: the Adams circle passes through the six intersections of the
    // parallels through the Gergonne point to the contact-triangle sides with
    // the triangle sides; all six lie at adams_radius from the incenter.
    for (const Triangle& t : {right345(), random_triangle(), random_triangle()}) {
        Point2 x1 = center(t, CenterId::X(1));
        Point2 x7 = center(t, CenterId::X(7));
        Triangle it = intouch_triangle(t);
        double expect = adams_radius(metrics(t));
        std::array<std::pair<Point2, Point2>, 3> contactSides = {
            std::pair{it.A, it.B}, {it.B, it.C}, {it.C, it.A}};
        std::array<std::pair<Point2, Point2>, 3> sides = {
            std::pair{t.A, t.B}, {t.B, t.C}, {t.C, t.A}};
        int found = 0;
        for (const auto& [p, q] : contactSides) {
            Point2 dir = q - p;
            for (const auto& [a, b] : sides) {
                Point2 e = b - a;
                double den = cross(dir, e);
                if (std::abs(den) < 1e-12) continue;
                // x7 + s*dir == a + u*e
                double u = cross(dir, x7 - a) / den;
                if (u < -1e-9 || u > 1.0 + 1e-9) continue;
                Point2 hit = a + u * e;
                // keep only points between the two contact points on that side
                CHECK(dist(hit, x1) == doctest::Approx(expect).epsilon(1e-9));
                ++found;
            }
        }
        CHECK(found == 6);
    }

    CHECK_THROWS_AS(adams_radius(metrics(equilateral(0.0))), DegenerateTriangle);
}

TEST_CASE("distance formulas match coordinate oracles (100 random triangles)") {
    for (int i = 0; i < 100; ++i) {
        Triangle t = random_triangle();
        TriangleMetrics m = metrics(t);
        Point2 x1 = center(t, CenterId::X(1));
        double d12 = dist(x1, center(t, CenterId::X(2)));
        double d14 = dist(x1, center(t, CenterId::X(4)));
        double d17 = dist(x1, center(t, CenterId::X(7)));
        CHECK(dist_sq_x1_x2(m) == doctest::Approx(d12 * d12).epsilon(1e-9));
        CHECK(dist_sq_x1_x4(m) == doctest::Approx(d14 * d14).epsilon(1e-9));
        CHECK(dist_sq_x1_x7(m) == doctest::Approx(d17 * d17).epsilon(1e-9));
    }
    // frozen value: |X1 X2|^2 = 1/9 on the 3-4-5 triangle
    CHECK(dist_sq_x1_x2(metrics(right345())) == doctest::Approx(1.0 / 9).epsilon(1e-13));
}

TEST_CASE("triangle identity suite (100 random triangles, 1e-10)") {
    for (int i = 0; i < 100; ++i) {
        Triangle t = random_triangle();
        TriangleMetrics m = metrics(t);
        AngleSums a = angle_sums(m);
        double sumSq = m.l1 * m.l1 + m.l2 * m.l2 + m.l3 * m.l3;

        CHECK(m.area == doctest::Approx(m.r * m.s).epsilon(1e-10));
        CHECK(m.l1 * m.l2 * m.l3 == doctest::Approx(4 * m.R * m.area).epsilon(1e-10));

        Point2 x1 = center(t, CenterId::X(1)), x2 = center(t, CenterId::X(2));
        Point2 x3 = center(t, CenterId::X(3)), x4 = center(t, CenterId::X(4));
        Point2 x5 = center(t, CenterId::X(5)), x8 = center(t, CenterId::X(8));
        Point2 x10 = center(t, CenterId::X(10)), x20 = center(t, CenterId::X(20));

        CHECK(dist(x1, x8) == doctest::Approx(3 * dist(x1, x2)).epsilon(1e-9));
        CHECK(dist(x3, x2) == doctest::Approx(dist(x3, x4) / 3).epsilon(1e-9));
        CHECK(dist(x10, 0.5 * (x1 + x8)) < 1e-10);
        CHECK(dist(x20, 2 * x3 - x4) < 1e-10);
        CHECK(dist(x5, 0.5 * (x3 + x4)) < 1e-10);

        double oh = dist(x3, x4);
        CHECK(sumSq == doctest::Approx(9 * m.R * m.R - oh * oh).epsilon(1e-9));
        CHECK(a.cosProd == doctest::Approx(sumSq / (8 * m.R * m.R) - 1).epsilon(1e-8));
        CHECK(a.cos2Sum == doctest::Approx(-1 - 4 * a.cosProd).epsilon(1e-8));
    }
}

TEST_CASE("angle_sums on the equilateral triangle") {
    AngleSums a = angle_sums(metrics(equilateral(1)));
    CHECK(a.sinHalfSum == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(a.tanHalfSum == doctest::Approx(kSqrt3).epsilon(1e-14));
    CHECK(a.cos2Sum == doctest::Approx(-1.5).epsilon(1e-14));
    CHECK(a.cosSum == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(a.cosProd == doctest::Approx(0.125).epsilon(1e-14));
}

TEST_CASE("ngon_centroids: regular polygon, triangle specializations, bad input") {
    // regular pentagon about (0.3, -0.2): all three centroids at the center
    std::vector<Point2> pent;
    for (int i = 0; i < 5; ++i)
        pent.push_back({0.3 + std::cos(2 * M_PI * i / 5), -0.2 + std::sin(2 * M_PI * i / 5)});
    NgonCentroids c = ngon_centroids(pent);
    CHECK(dist(c.C0, {0.3, -0.2}) < 1e-14);
    CHECK(dist(c.C1, {0.3, -0.2}) < 1e-14);
    CHECK(dist(c.C2, {0.3, -0.2}) < 1e-14);

    // triangle: C0 = C2 = X2 and C1 = Spieker point X10
    for (int i = 0; i < 20; ++i) {
        Triangle t = random_triangle();
        NgonCentroids tc = ngon_centroids({t.A, t.B, t.C});
        CHECK(dist(tc.C0, center(t, CenterId::X(2))) < 1e-12);
        CHECK(dist(tc.C2, center(t, CenterId::X(2))) < 1e-12);
        CHECK(dist(tc.C1, center(t, CenterId::X(10))) < 1e-12);
    }

    CHECK_THROWS_AS(ngon_centroids({{0, 0}, {1, 1}, {1, 0}, {0, 1}}), SelfIntersecting);
    CHECK_THROWS_AS(ngon_centroids({{0, 0}, {1, 0}}), SelfIntersecting);
}

TEST_CASE("brocard_points: equilateral, angle definition, isogonal pairing") {
    Triangle eq = equilateral(2);
    auto [b1, b2] = brocard_points(eq);
    CHECK(dist(b1, {1, 1 / kSqrt3}) < 1e-13);
    CHECK(dist(b2, {1, 1 / kSqrt3}) < 1e-13);

    for (int i = 0; i < 20; ++i) {
        Triangle t = random_triangle();
        TriangleMetrics m = metrics(t);
        auto [p1, p2] = brocard_points(t);
        // cot(omega) = (l1^2 + l2^2 + l3^2) / (4 area)
        double sumSq = m.l1 * m.l1 + m.l2 * m.l2 + m.l3 * m.l3;
        double omega = std::atan2(4 * m.area, sumSq);
        // first Brocard point: angle(Omega A B) = angle(Omega B C) = angle(Omega C A)
        CHECK(angle_at(t.A, p1, t.B) == doctest::Approx(omega).epsilon(1e-9));
        CHECK(angle_at(t.B, p1, t.C) == doctest::Approx(omega).epsilon(1e-9));
        CHECK(angle_at(t.C, p1, t.A) == doctest::Approx(omega).epsilon(1e-9));
        // second point is the reflection of the defining property
        CHECK(angle_at(t.B, p2, t.A) == doctest::Approx(omega).epsilon(1e-9));
        CHECK(dist(isogonal_conjugate(t, p1), p2) < 1e-9);
    }
}

TEST_CASE("affine behavior of centers: X2 equivariant under shear, X1/X3/X4 not") {
    Mat2 shear{{1.0, 0.7}, {0.0, 1.0}};
    auto map = [&](const Point2& p) { return Point2(Vec2(shear * p.vec())); };
    for (int i = 0; i < 10; ++i) {
        Triangle t = random_triangle();
        Triangle ts{map(t.A), map(t.B), map(t.C)};
        CHECK(dist(center(ts, CenterId::X(2)), map(center(t, CenterId::X(2)))) < 1e-12);
    }
    Triangle t = right345();
    Triangle ts{map(t.A), map(t.B), map(t.C)};
    for (int k : {1, 3, 4})
        CHECK(dist(center(ts, CenterId::X(k)), map(center(t, CenterId::X(k)))) > 1e-3);
}
