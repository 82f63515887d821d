#include "poncelet/triangle.hpp"

#include <algorithm>
#include <cmath>

namespace poncelet {

namespace {
double clamp_cos(double x) { return std::clamp(x, -1.0, 1.0); }
}  // namespace

TriangleMetrics metrics(const Triangle& t) {
    TriangleMetrics m{};
    m.l1 = dist(t.B, t.C);
    m.l2 = dist(t.C, t.A);
    m.l3 = dist(t.A, t.B);
    m.s = 0.5 * (m.l1 + m.l2 + m.l3);
    double area2 = cross(t.B - t.A, t.C - t.A);
    m.area = 0.5 * std::abs(area2);
    double scale = m.s * m.s;
    if (m.area < 1e-14 * scale || m.s <= 0.0)
        throw DegenerateTriangle("metrics: collinear or coincident vertices");
    m.R = m.l1 * m.l2 * m.l3 / (4.0 * m.area);
    m.r = m.area / m.s;
    // angles from side lengths (cosine law)
    m.theta1 = std::acos(clamp_cos((m.l2 * m.l2 + m.l3 * m.l3 - m.l1 * m.l1) / (2 * m.l2 * m.l3)));
    m.theta2 = std::acos(clamp_cos((m.l3 * m.l3 + m.l1 * m.l1 - m.l2 * m.l2) / (2 * m.l3 * m.l1)));
    m.theta3 = std::acos(clamp_cos((m.l1 * m.l1 + m.l2 * m.l2 - m.l3 * m.l3) / (2 * m.l1 * m.l2)));
    return m;
}

bool center_supported(int k) {
    switch (k) {
        case 1:
        case 2:
        case 3:
        case 4:
        case 5:
        case 6:
        case 7:
        case 8:
        case 10:
        case 20:
        case 354:
            return true;
        default:
            return false;
    }
}

Point2 barycentric_point(const Triangle& t, const BarycentricTriple& z) {
    double sum = z.z1 + z.z2 + z.z3;
    double mag = std::abs(z.z1) + std::abs(z.z2) + std::abs(z.z3);
    if (std::abs(sum) < 1e-15 * mag) throw PointAtInfinity("barycentric_point");
    return (z.z1 * t.A + z.z2 * t.B + z.z3 * t.C) * (1.0 / sum);
}

BarycentricTriple barycentrics_of(const Triangle& t, const Point2& p) {
    double full = cross(t.B - t.A, t.C - t.A);
    if (std::abs(full) < 1e-300) throw DegenerateTriangle("barycentrics_of");
    double z1 = cross(t.B - p, t.C - p) / full;
    double z2 = cross(t.C - p, t.A - p) / full;
    double z3 = cross(t.A - p, t.B - p) / full;
    return {z1, z2, z3};
}

Point2 center(const Triangle& t, const CenterId& id) {
    if (id.is_ngon_centroid()) {
        auto c = ngon_centroids({t.A, t.B, t.C});
        if (id == CenterId::C0()) return c.C0;
        if (id == CenterId::C1()) return c.C1;
        return c.C2;
    }
    const TriangleMetrics m = metrics(t);
    const double a = m.l1, b = m.l2, c = m.l3;
    const double a2 = a * a, b2 = b * b, c2 = c * c;
    switch (id.k) {
        case 1:
            return barycentric_point(t, {a, b, c});
        case 2:
            return barycentric_point(t, {1, 1, 1});
        case 3:
            return barycentric_point(t, {a2 * (b2 + c2 - a2), b2 * (c2 + a2 - b2),
                                         c2 * (a2 + b2 - c2)});
        case 4:
            return barycentric_point(t, {(a2 + b2 - c2) * (c2 + a2 - b2),
                                         (b2 + c2 - a2) * (a2 + b2 - c2),
                                         (c2 + a2 - b2) * (b2 + c2 - a2)});
        case 5:
            return barycentric_point(t, {a2 * (b2 + c2) - (b2 - c2) * (b2 - c2),
                                         b2 * (c2 + a2) - (c2 - a2) * (c2 - a2),
                                         c2 * (a2 + b2) - (a2 - b2) * (a2 - b2)});
        case 6:
            return barycentric_point(t, {a2, b2, c2});
        case 7:
            return barycentric_point(t, {(m.s - b) * (m.s - c), (m.s - c) * (m.s - a),
                                         (m.s - a) * (m.s - b)});
        case 8:
            return barycentric_point(t, {m.s - a, m.s - b, m.s - c});
        case 10:
            return barycentric_point(t, {b + c, c + a, a + b});
        case 20: {
            // de Longchamps: reflection of the orthocenter on the circumcenter
            Point2 x3 = center(t, CenterId::X(3));
            Point2 x4 = center(t, CenterId::X(4));
            return 2.0 * x3 - x4;
        }
        case 354:
            // Weill point: barycenter of the intouch triangle
            return center(intouch_triangle(t), CenterId::X(2));
        default:
            throw UnsupportedCenter("center: unsupported Kimberling index " +
                                    std::to_string(id.k));
    }
}

Point2 isogonal_conjugate(const Triangle& t, const Point2& p) {
    const TriangleMetrics m = metrics(t);
    BarycentricTriple z = barycentrics_of(t, p);
    double mag = std::abs(z.z1) + std::abs(z.z2) + std::abs(z.z3);
    if (std::abs(z.z1) < 1e-13 * mag || std::abs(z.z2) < 1e-13 * mag ||
        std::abs(z.z3) < 1e-13 * mag)
        throw OnSideline("isogonal_conjugate: point on a sideline");
    return barycentric_point(
        t, {m.l1 * m.l1 / z.z1, m.l2 * m.l2 / z.z2, m.l3 * m.l3 / z.z3});
}

Triangle intouch_triangle(const Triangle& t) {
    const TriangleMetrics m = metrics(t);
    Point2 incenter = barycentric_point(t, {m.l1, m.l2, m.l3});
    auto foot = [&](const Point2& p, const Point2& q) {
        Point2 d = q - p;
        double len2 = dot(d, d);
        double u = dot(incenter - p, d) / len2;
        return p + u * d;
    };
    return Triangle(foot(t.B, t.C), foot(t.C, t.A), foot(t.A, t.B));
}

Triangle polar_triangle(const Triangle& t, const ConicMatrix& c) {
    auto pole_of = [&](const Point2& p, const Point2& q) {
        Mat3 mn = c.normalized().m;
        if (std::abs(mn.determinant()) < 1e-30) throw SingularConic("polar_triangle");
        Vec3 x = ConicMatrix(mn).adjugate() * line_through(p, q).vec();
        if (std::abs(x.z()) < 1e-13 * x.norm())
            throw PoleAtInfinity("polar_triangle: sideline through the conic center");
        return Point2{x.x() / x.z(), x.y() / x.z()};
    };
    return Triangle(pole_of(t.B, t.C), pole_of(t.C, t.A), pole_of(t.A, t.B));
}

double polar_circle_sq(const TriangleMetrics& m) {
    return 4.0 * m.R * m.R - 0.5 * (m.l1 * m.l1 + m.l2 * m.l2 + m.l3 * m.l3);
}

double adams_radius(const TriangleMetrics& m) {
    double rho = m.l1 * m.l2 + m.l2 * m.l3 + m.l3 * m.l1;
    double s2 = m.s * m.s;
    double denom = rho - s2;
    double scale = rho * rho;
    if (std::abs(denom) < 1e-14 * std::sqrt(scale)) throw DegenerateAdams("adams_radius: rho == s^2");
    double radicand = rho * rho - m.l1 * m.l2 * m.l3 * m.s - rho * s2;
    if (radicand < 0.0) {
        if (radicand < -1e-12 * scale) throw DegenerateAdams("adams_radius: negative radicand");
        radicand = 0.0;
    }
    return m.r * std::sqrt(radicand) / denom;
}

double dist_sq_x1_x2(const TriangleMetrics& m) {
    const double a = m.l1, b = m.l2, c = m.l3;
    double cubes = a * a * a + b * b * b + c * c * c;
    double prod = a * b * c;
    double mixed = b * a * a + c * a * a + b * b * a + c * c * a + b * c * c + b * b * c;
    return -(cubes + 9.0 * prod - 2.0 * mixed) / (9.0 * (a + b + c));
}

double dist_sq_x1_x4(const TriangleMetrics& m) {
    return 2.0 * m.r * m.r + polar_circle_sq(m);
}

double dist_sq_x1_x7(const TriangleMetrics& m) {
    double d = m.r + 4.0 * m.R;
    return m.r * m.r * (1.0 - 3.0 * m.s * m.s / (d * d));
}

AngleSums angle_sums(const TriangleMetrics& m) {
    AngleSums a{};
    for (double th : {m.theta1, m.theta2, m.theta3}) {
        a.sinHalfSum += std::sin(0.5 * th);
        a.tanHalfSum += std::tan(0.5 * th);
        a.cos2Sum += std::cos(2.0 * th);
        a.cosSum += std::cos(th);
    }
    a.cosProd = std::cos(m.theta1) * std::cos(m.theta2) * std::cos(m.theta3);
    return a;
}

NgonCentroids ngon_centroids(const std::vector<Point2>& v) {
    const size_t n = v.size();
    if (n < 3) throw SelfIntersecting("ngon_centroids: need at least 3 vertices");

    // reject self-intersecting polygons (proper crossings of non-adjacent edges)
    auto proper_cross = [](const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
        double d1 = cross(b - a, c - a), d2 = cross(b - a, d - a);
        double d3 = cross(d - c, a - c), d4 = cross(d - c, b - c);
        return (d1 * d2 < 0.0) && (d3 * d4 < 0.0);
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            if (j == i + 1 || (i == 0 && j == n - 1)) continue;
            if (proper_cross(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]))
                throw SelfIntersecting("ngon_centroids: self-intersecting polygon");
        }

    NgonCentroids c{};
    double perim = 0.0, area2 = 0.0;
    Point2 c0{0, 0}, c1{0, 0}, c2{0, 0};
    for (size_t i = 0; i < n; ++i) {
        const Point2& p = v[i];
        const Point2& q = v[(i + 1) % n];
        c0 = c0 + p;
        double len = dist(p, q);
        perim += len;
        c1 = c1 + len * 0.5 * (p + q);
        double cr = cross(p, q);
        area2 += cr;
        c2 = c2 + cr * (p + q);
    }
    if (std::abs(area2) < 1e-300 || perim <= 0.0)
        throw SelfIntersecting("ngon_centroids: zero area polygon");
    c.C0 = c0 * (1.0 / double(n));
    c.C1 = c1 * (1.0 / perim);
    c.C2 = c2 * (1.0 / (3.0 * area2));
    return c;
}

std::pair<Point2, Point2> brocard_points(const Triangle& t) {
    const TriangleMetrics m = metrics(t);
    const double a = m.l1, b = m.l2, c = m.l3;
    Point2 first = barycentric_point(t, {a * c / b, b * a / c, c * b / a});
    Point2 second = barycentric_point(t, {a * b / c, b * c / a, c * a / b});
    return {first, second};
}

}  // namespace poncelet
