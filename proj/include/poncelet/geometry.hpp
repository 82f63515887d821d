#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>

namespace poncelet {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Cartesian point.
struct Point2 {
    double x = 0.0;
    double y = 0.0;

    Point2() = default;
    Point2(double px, double py) : x(px), y(py) {}
    explicit Point2(const Vec2& v) : x(v.x()), y(v.y()) {}

    Vec2 vec() const { return {x, y}; }
    Vec3 homogeneous() const { return {x, y, 1.0}; }

    Point2 operator+(const Point2& o) const { return {x + o.x, y + o.y}; }
    Point2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }
    Point2 operator*(double s) const { return {x * s, y * s}; }
    friend Point2 operator*(double s, const Point2& p) { return p * s; }

    double norm() const { return std::hypot(x, y); }
};

inline double dist(const Point2& a, const Point2& b) { return (a - b).norm(); }
inline double cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
inline double dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }

/// Homogeneous coordinates of a point or a line, scale-equivalent.
struct HCoord {
    double u = 0.0;
    double v = 0.0;
    double w = 0.0;

    HCoord() = default;
    HCoord(double a, double b, double c) : u(a), v(b), w(c) {}
    explicit HCoord(const Vec3& h) : u(h.x()), v(h.y()), w(h.z()) {}

    Vec3 vec() const { return {u, v, w}; }

    bool at_infinity(double tol = 1e-14) const {
        double n = vec().norm();
        return n == 0.0 || std::hypot(u, v) < tol * n;
    }

    /// Dehomogenize a point coordinate.
    Point2 point() const {
        if (std::abs(w) == 0.0) throw GeometryError("HCoord: point at infinity");
        return {u / w, v / w};
    }
};

inline HCoord line_through(const Point2& a, const Point2& b) {
    Vec3 l = a.homogeneous().cross(b.homogeneous());
    return HCoord(l);
}

/// Angular distance between two lines in normalized line space (sign-insensitive).
inline double line_distance(const HCoord& a, const HCoord& b) {
    Vec3 na = a.vec().normalized();
    Vec3 nb = b.vec().normalized();
    return std::min((na - nb).norm(), (na + nb).norm());
}

/// Invertible affine map p -> L p + t.
struct AffineMap {
    Mat2 linear = Mat2::Identity();
    Point2 translation{0.0, 0.0};

    AffineMap() = default;
    AffineMap(const Mat2& l, const Point2& t) : linear(l), translation(t) {
        if (std::abs(linear.determinant()) < 1e-300)
            throw GeometryError("AffineMap: singular linear part");
    }

    static AffineMap scaling(double sx, double sy) {
        Mat2 l = Mat2::Zero();
        l(0, 0) = sx;
        l(1, 1) = sy;
        return AffineMap(l, Point2{0, 0});
    }

    Point2 operator()(const Point2& p) const {
        Vec2 q = linear * p.vec() + translation.vec();
        return Point2(q);
    }

    AffineMap inverse() const {
        Mat2 li = linear.inverse();
        Vec2 ti = -(li * translation.vec());
        return AffineMap(li, Point2(ti));
    }

    /// Full 3x3 homogeneous matrix.
    Mat3 homogeneous() const {
        Mat3 h = Mat3::Identity();
        h.topLeftCorner<2, 2>() = linear;
        h(0, 2) = translation.x;
        h(1, 2) = translation.y;
        return h;
    }
};

constexpr double kRootTol = 1e-12;
constexpr double kGeomTol = 1e-10;

}  // namespace poncelet
