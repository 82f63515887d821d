#pragma once

#include <array>
#include <vector>

#include "poncelet/conic.hpp"

namespace poncelet {

struct TriangleError : GeometryError {
    using GeometryError::GeometryError;
};
struct DegenerateTriangle : TriangleError {
    using TriangleError::TriangleError;
};
struct UnsupportedCenter : TriangleError {
    using TriangleError::TriangleError;
};
struct OnSideline : TriangleError {
    using TriangleError::TriangleError;
};
struct PointAtInfinity : TriangleError {
    using TriangleError::TriangleError;
};
struct PoleAtInfinity : TriangleError {
    using TriangleError::TriangleError;
};
struct DegenerateAdams : TriangleError {
    using TriangleError::TriangleError;
};
struct SelfIntersecting : TriangleError {
    using TriangleError::TriangleError;
};

struct Triangle {
    Point2 A, B, C;

    Triangle() = default;
    Triangle(const Point2& a, const Point2& b, const Point2& c) : A(a), B(b), C(c) {}

    std::array<Point2, 3> vertices() const { return {A, B, C}; }
    double signed_area() const { return 0.5 * cross(B - A, C - A); }
};

/// Side lengths l1=|BC|, l2=|CA|, l3=|AB|; angles opposite to them.
struct TriangleMetrics {
    double l1, l2, l3;
    double s;     // semiperimeter
    double area;  // positive
    double R;     // circumradius
    double r;     // inradius
    double theta1, theta2, theta3;
};

TriangleMetrics metrics(const Triangle& t);

/// Kimberling index, plus n-gon centroid pseudo-ids.
struct CenterId {
    int k;  // Kimberling index; -1/-2/-3 encode C0/C1/C2
    static CenterId X(int k) { return {k}; }
    static CenterId C0() { return {-1}; }
    static CenterId C1() { return {-2}; }
    static CenterId C2() { return {-3}; }
    bool is_ngon_centroid() const { return k < 0; }
    bool operator==(const CenterId&) const = default;
};

bool center_supported(int k);

struct BarycentricTriple {
    double z1, z2, z3;
};

Point2 barycentric_point(const Triangle& t, const BarycentricTriple& z);
BarycentricTriple barycentrics_of(const Triangle& t, const Point2& p);

Point2 center(const Triangle& t, const CenterId& id);

Point2 isogonal_conjugate(const Triangle& t, const Point2& p);

Triangle intouch_triangle(const Triangle& t);

/// Vertices are the poles of t's sidelines with respect to c.
Triangle polar_triangle(const Triangle& t, const ConicMatrix& c);

/// Signed squared polar-circle radius: 4R^2 - sum(l_i^2)/2. Negative for acute triangles.
double polar_circle_sq(const TriangleMetrics& m);

double adams_radius(const TriangleMetrics& m);

double dist_sq_x1_x2(const TriangleMetrics& m);
double dist_sq_x1_x4(const TriangleMetrics& m);
double dist_sq_x1_x7(const TriangleMetrics& m);

struct AngleSums {
    double sinHalfSum;
    double tanHalfSum;
    double cos2Sum;
    double cosSum;
    double cosProd;
};

AngleSums angle_sums(const TriangleMetrics& m);

struct NgonCentroids {
    Point2 C0;  // vertex centroid
    Point2 C1;  // perimeter centroid
    Point2 C2;  // area centroid
};

NgonCentroids ngon_centroids(const std::vector<Point2>& vertices);

/// First and second Brocard points (the second is the isogonal conjugate of the first).
std::pair<Point2, Point2> brocard_points(const Triangle& t);

}  // namespace poncelet
