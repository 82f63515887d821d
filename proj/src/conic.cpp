#include "poncelet/conic.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace poncelet {

namespace {

Mat3 adjugate_of(const Mat3& m) {
    Mat3 a;
    a(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    a(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
    a(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
    a(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
    a(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
    a(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
    a(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
    a(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
    a(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    return a;
}

Mat3 skew(const Vec3& p) {
    Mat3 s;
    s << 0, p.z(), -p.y(), -p.z(), 0, p.x(), p.y(), -p.x(), 0;
    return s;
}

double wrap_rotation(double theta) {
    const double pi = M_PI;
    theta = std::fmod(theta, pi);
    if (theta < 0) theta += pi;
    if (theta >= pi) theta -= pi;
    return theta;
}

}  // namespace

Mat3 ConicMatrix::adjugate() const { return adjugate_of(m); }

ConicMatrix matrix_of(const AxisEllipse& e) {
    Mat3 d = Mat3::Zero();
    d(0, 0) = 1.0 / (e.a * e.a);
    d(1, 1) = 1.0 / (e.b * e.b);
    d(2, 2) = -1.0;
    Mat3 t = Mat3::Identity();
    t(0, 2) = -e.center.x;
    t(1, 2) = -e.center.y;
    return ConicMatrix(Mat3(t.transpose() * d * t));
}

ConicMatrix matrix_of(const GeneralEllipse& e) {
    Mat3 d = Mat3::Zero();
    d(0, 0) = 1.0 / (e.semiMajor * e.semiMajor);
    d(1, 1) = 1.0 / (e.semiMinor * e.semiMinor);
    d(2, 2) = -1.0;
    double c = std::cos(e.rotation), s = std::sin(e.rotation);
    Mat3 t = Mat3::Identity();  // world -> ellipse frame
    t(0, 0) = c;
    t(0, 1) = s;
    t(1, 0) = -s;
    t(1, 1) = c;
    t(0, 2) = -(c * e.center.x + s * e.center.y);
    t(1, 2) = -(-s * e.center.x + c * e.center.y);
    return ConicMatrix(Mat3(t.transpose() * d * t));
}

GeneralEllipse classify(const ConicMatrix& cin) {
    Mat3 m = cin.normalized().m;
    Mat2 q = m.topLeftCorner<2, 2>();
    double det2 = q.determinant();
    double det3 = m.determinant();
    if (det2 <= 0.0) throw NotAnEllipse("classify: leading 2x2 block not definite");
    if (std::abs(det3) < 1e-300) throw NotAnEllipse("classify: degenerate conic");
    // real ellipse requires det3 * trace(q) < 0
    if (det3 * (q(0, 0) + q(1, 1)) >= 0.0) throw NotAnEllipse("classify: imaginary ellipse");

    Vec2 rhs(-m(0, 2), -m(1, 2));
    Vec2 center = q.ldlt().solve(rhs);
    Point2 cp(center);
    double fc = ConicMatrix(m).eval(cp);  // value at center, opposite sign of q

    Eigen::SelfAdjointEigenSolver<Mat2> es(Mat2(q / (-fc)));
    Vec2 ev = es.eigenvalues();  // ascending
    if (!(ev(0) > 0.0 && ev(1) > 0.0)) throw NotAnEllipse("classify: non-positive axis form");

    GeneralEllipse e;
    e.center = cp;
    e.semiMajor = 1.0 / std::sqrt(ev(0));
    e.semiMinor = 1.0 / std::sqrt(ev(1));
    Vec2 major = es.eigenvectors().col(0);
    e.rotation = wrap_rotation(std::atan2(major.y(), major.x()));
    if (std::abs(e.semiMajor - e.semiMinor) < 1e-14 * e.semiMajor) e.rotation = 0.0;
    return e;
}

std::pair<Point2, Point2> foci_of(const GeneralEllipse& e) {
    double c = e.focalHalfDistance();
    Point2 d(c * std::cos(e.rotation), c * std::sin(e.rotation));
    return {e.center + d, e.center - d};
}

std::pair<HCoord, HCoord> tangents_from(const Point2& p, const ConicMatrix& cin) {
    Mat3 c = cin.normalized().m;
    Vec3 h = p.homogeneous();
    double w = h.dot(c * h);
    Vec3 cp = c * h;
    Mat3 d = w * c - cp * cp.transpose();  // degenerate conic = pair of tangent lines

    Mat3 b = adjugate_of(d);
    double dnorm = d.cwiseAbs().maxCoeff();
    if (b.cwiseAbs().maxCoeff() < 1e-24 * dnorm * dnorm + 1e-300)
        throw PointOnConic("tangents_from: point on conic, tangents coincide");

    int i = 0;
    for (int k = 1; k < 3; ++k)
        if (std::abs(b(k, k)) > std::abs(b(i, i))) i = k;
    if (b(i, i) > 0.0) throw PointInside("tangents_from: point inside conic, no real tangents");

    double beta = std::sqrt(-b(i, i));
    Vec3 q = b.col(i) / beta;  // intersection point of the two lines (== p up to scale)
    Mat3 cc = d + skew(q);
    int r = 0, s = 0;
    double best = -1.0;
    for (int a = 0; a < 3; ++a)
        for (int bb = 0; bb < 3; ++bb)
            if (std::abs(cc(a, bb)) > best) {
                best = std::abs(cc(a, bb));
                r = a;
                s = bb;
            }
    HCoord g(Vec3(cc.row(r)));
    HCoord hline(Vec3(cc.col(s)));
    return {g, hline};
}

std::vector<Point2> intersect_line_conic(const HCoord& lin, const ConicMatrix& cin,
                                         double rootTol) {
    Vec3 l = lin.vec();
    double dnorm = std::hypot(l.x(), l.y());
    if (dnorm == 0.0 || !std::isfinite(dnorm)) throw LineAtInfinity("intersect_line_conic");
    double lnorm = l.norm();
    if (dnorm < 1e-14 * lnorm) throw LineAtInfinity("intersect_line_conic");
    l /= dnorm;

    Mat3 c = cin.normalized().m;
    // base point = foot of the perpendicular from origin; direction unit length
    Vec3 p0(-l.x() * l.z(), -l.y() * l.z(), 1.0);
    Vec3 dir(l.y(), -l.x(), 0.0);

    double qa = dir.dot(c * dir);
    double qb = 2.0 * p0.dot(c * dir);
    double qc = p0.dot(c * p0);

    std::vector<Point2> out;
    auto emit = [&](double t) { out.emplace_back(p0.x() + t * dir.x(), p0.y() + t * dir.y()); };

    if (std::abs(qa) < 1e-14 * (std::abs(qb) + std::abs(qc))) {
        if (std::abs(qb) > 0.0) emit(-qc / qb);
        return out;
    }

    double disc = qb * qb - 4.0 * qa * qc;
    double scaleSq = std::max({qb * qb, std::abs(4.0 * qa * qc), 1e-300});
    if (disc < 0.0) {
        if (disc > -1e-10 * scaleSq) emit(-qb / (2.0 * qa));
        return out;
    }
    double sq = std::sqrt(disc);
    double rootSpread = sq / std::abs(qa);
    double tmid = -qb / (2.0 * qa);
    // double-root collapse: tangent chase must not emit two nearly equal vertices
    if (disc < 1e-10 * scaleSq || rootSpread < rootTol * (1.0 + std::abs(tmid))) {
        emit(tmid);
        return out;
    }
    double qq = -0.5 * (qb + (qb >= 0 ? sq : -sq));
    double t1 = qq / qa;
    double t2 = (qq != 0.0) ? qc / qq : tmid;
    emit(t1);
    emit(t2);
    return out;
}

HCoord polar_line(const Point2& p, const ConicMatrix& c) {
    if (std::abs(c.normalized().m.determinant()) < 1e-30)
        throw SingularConic("polar_line: singular conic");
    return HCoord(Vec3(c.m * p.homogeneous()));
}

Point2 pole(const HCoord& l, const ConicMatrix& c) {
    Mat3 mn = c.normalized().m;
    if (std::abs(mn.determinant()) < 1e-30) throw SingularConic("pole: singular conic");
    Vec3 x = adjugate_of(mn) * l.vec();
    HCoord h(x);
    return h.point();
}

double tangency_residual(const HCoord& lin, const ConicMatrix& c) {
    Mat3 adj = c.normalized().adjugate();
    Vec3 l = lin.vec().normalized();
    return std::abs(l.dot(adj * l)) / adj.cwiseAbs().maxCoeff();
}

ConicFit fit_conic(const std::vector<Point2>& points) {
    const size_t n = points.size();
    if (n < 5) throw DegenerateFit("fit_conic: need at least 5 points");

    double mx = 0, my = 0;
    for (const auto& p : points) {
        mx += p.x;
        my += p.y;
    }
    mx /= double(n);
    my /= double(n);
    double rms = 0;
    for (const auto& p : points) {
        double dx = p.x - mx, dy = p.y - my;
        rms += dx * dx + dy * dy;
    }
    rms = std::sqrt(rms / double(n));
    if (rms < 1e-300) throw DegenerateFit("fit_conic: coincident points");

    Eigen::MatrixXd design(n, 6);
    for (size_t i = 0; i < n; ++i) {
        double x = (points[i].x - mx) / rms;
        double y = (points[i].y - my) / rms;
        design.row(long(i)) << x * x, x * y, y * y, x, y, 1.0;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (sv(4) < 1e-10 * sv(0))
        throw DegenerateFit("fit_conic: rank deficiency beyond one null direction");
    Eigen::VectorXd v = svd.matrixV().col(5);

    Mat3 q;
    q << v(0), v(1) / 2, v(3) / 2, v(1) / 2, v(2), v(4) / 2, v(3) / 2, v(4) / 2, v(5);
    Mat3 t = Mat3::Identity();
    t(0, 0) = 1.0 / rms;
    t(1, 1) = 1.0 / rms;
    t(0, 2) = -mx / rms;
    t(1, 2) = -my / rms;
    ConicFit fit;
    fit.conic = ConicMatrix(Mat3(t.transpose() * q * t)).normalized();
    fit.residual = sv(5) / std::sqrt(double(n));
    return fit;
}

Point2 apply_affine(const AffineMap& m, const Point2& p) { return m(p); }

ConicMatrix apply_affine(const AffineMap& m, const ConicMatrix& c) {
    if (std::abs(m.linear.determinant()) < 1e-300) throw SingularMap("apply_affine");
    Mat3 hi = m.inverse().homogeneous();
    return ConicMatrix(Mat3(hi.transpose() * c.m * hi));
}

GeneralEllipse inconic_with_foci(const Point2& f1, const Point2& f2, const HCoord& tangent) {
    Point2 center = 0.5 * (f1 + f2);
    Point2 d = f2 - f1;
    double c = 0.5 * d.norm();
    double theta = (c > 0) ? std::atan2(d.y, d.x) : 0.0;
    double ct = std::cos(theta), st = std::sin(theta);

    // line components in the focal frame
    double u = tangent.u, v = tangent.v, w = tangent.w;
    double uf = ct * u + st * v;
    double vf = -st * u + ct * v;
    double wf = center.x * u + center.y * v + w;

    double denom = uf * uf + vf * vf;
    if (denom < 1e-300) throw ConicError("inconic_with_foci: line at infinity");
    double m2 = (wf * wf + c * c * vf * vf) / denom;
    double n2 = m2 - c * c;
    if (n2 <= 0.0) throw ConicError("inconic_with_foci: line passes between the foci");

    GeneralEllipse e;
    e.center = center;
    e.semiMajor = std::sqrt(m2);
    e.semiMinor = std::sqrt(n2);
    e.rotation = wrap_rotation(theta);
    return e;
}

}  // namespace poncelet
