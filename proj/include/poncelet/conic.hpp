#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "poncelet/geometry.hpp"

namespace poncelet {

struct ConicError : GeometryError {
    using GeometryError::GeometryError;
};
struct NotAnEllipse : ConicError {
    using ConicError::ConicError;
};
struct PointOnConic : ConicError {
    using ConicError::ConicError;
};
struct PointInside : ConicError {
    using ConicError::ConicError;
};
struct LineAtInfinity : ConicError {
    using ConicError::ConicError;
};
struct SingularConic : ConicError {
    using ConicError::ConicError;
};
struct DegenerateFit : ConicError {
    using ConicError::ConicError;
};
struct SingularMap : ConicError {
    using ConicError::ConicError;
};

/// Symmetric 3x3 matrix of a projective conic, scale-equivalent.
struct ConicMatrix {
    Mat3 m = Mat3::Zero();

    ConicMatrix() = default;
    explicit ConicMatrix(const Mat3& mat) : m(0.5 * (mat + mat.transpose())) {}

    double eval(const Point2& p) const {
        Vec3 h = p.homogeneous();
        return h.dot(m * h);
    }

    /// Adjugate matrix (the dual conic for rank-3 input).
    Mat3 adjugate() const;

    ConicMatrix normalized() const {
        double s = m.cwiseAbs().maxCoeff();
        if (s == 0.0) throw SingularConic("ConicMatrix: zero matrix");
        return ConicMatrix(Mat3(m / s));
    }
};

/// Axis-aligned ellipse: (x-cx)^2/a^2 + (y-cy)^2/b^2 = 1.
struct AxisEllipse {
    Point2 center{0.0, 0.0};
    double a = 1.0;  // semi-axis along x
    double b = 1.0;  // semi-axis along y

    AxisEllipse() = default;
    AxisEllipse(const Point2& c, double sa, double sb) : center(c), a(sa), b(sb) {
        if (!(a > 0.0) || !(b > 0.0)) throw ConicError("AxisEllipse: semi-axes must be positive");
    }

    Point2 point_at(double t) const {
        return {center.x + a * std::cos(t), center.y + b * std::sin(t)};
    }
    /// Parameter of the nearest boundary point in the (a cos t, b sin t) chart.
    double param_of(const Point2& p) const {
        return std::atan2((p.y - center.y) / b, (p.x - center.x) / a);
    }
    double scale() const { return std::max(a, b); }
};

/// Ellipse in general position.
struct GeneralEllipse {
    Point2 center{0.0, 0.0};
    double semiMajor = 1.0;
    double semiMinor = 1.0;
    double rotation = 0.0;  // major-axis direction, in [0, pi)

    double focalHalfDistance() const {
        return std::sqrt(std::max(0.0, semiMajor * semiMajor - semiMinor * semiMinor));
    }
};

ConicMatrix matrix_of(const AxisEllipse& e);
ConicMatrix matrix_of(const GeneralEllipse& e);

/// Recover center/axes/rotation of a real ellipse. Throws NotAnEllipse otherwise.
GeneralEllipse classify(const ConicMatrix& c);

std::pair<Point2, Point2> foci_of(const GeneralEllipse& e);

/// Both tangent lines from an exterior point.
std::pair<HCoord, HCoord> tangents_from(const Point2& p, const ConicMatrix& c);

/// Real intersections of a line with a proper conic; a tangent yields one point.
std::vector<Point2> intersect_line_conic(const HCoord& l, const ConicMatrix& c,
                                         double rootTol = kRootTol);

HCoord polar_line(const Point2& p, const ConicMatrix& c);
Point2 pole(const HCoord& l, const ConicMatrix& c);

/// Tangency residual of line vs conic, |l^T adj(C) l| under unit normalizations.
double tangency_residual(const HCoord& l, const ConicMatrix& c);

struct ConicFit {
    ConicMatrix conic;
    double residual = 0.0;
};

/// Least-squares algebraic conic fit (normalized design matrix).
ConicFit fit_conic(const std::vector<Point2>& points);

Point2 apply_affine(const AffineMap& m, const Point2& p);
ConicMatrix apply_affine(const AffineMap& m, const ConicMatrix& c);

/// Ellipse with given foci tangent to the given line (unique in the confocal pencil).
GeneralEllipse inconic_with_foci(const Point2& f1, const Point2& f2, const HCoord& tangent);

}  // namespace poncelet
