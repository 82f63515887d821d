#include "poncelet/families.hpp"

#include <cmath>

namespace poncelet {

namespace {

using Name = InvariantId::Name;

Prediction scalar_pred(Name n, double value, const std::string& label, double tol = 1e-8) {
    return {InvariantId::scalar(n), value, std::nullopt, tol, label};
}

Prediction conserved_pred(Name n, const std::string& label, double tol = 1e-8) {
    return {InvariantId::scalar(n), std::nullopt, std::nullopt, tol, label};
}

Prediction stationary_pred(int k, const Point2& at, const std::string& label,
                           double tol = 1e-8) {
    return {InvariantId::center_drift(k), std::nullopt, at, tol, label};
}

void require_shape(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0) || !(a > b))
        throw InvalidShape("family: requires a > b > 0");
}

ConicPair circle_caustic_pair(double a, double b, const Point2& center, double radius) {
    ConicPair pair;
    pair.outer = AxisEllipse(Point2{0, 0}, a, b);
    pair.caustic = matrix_of(AxisEllipse(center, radius, radius));
    pair.causticMeta = CausticMeta{center, std::pair{center, center}};
    return pair;
}

}  // namespace

std::string kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::FocalX1: return "focal-x1";
        case FamilyKind::IsoX2: return "iso-x2";
        case FamilyKind::FocalX4: return "focal-x4";
        case FamilyKind::IsoX7: return "iso-x7";
        case FamilyKind::MacBeath: return "macbeath";
        case FamilyKind::Dual: return "dual";
        case FamilyKind::Chapple: return "chapple";
        case FamilyKind::Brocard: return "brocard";
        case FamilyKind::AffineMacBeath: return "affine-macbeath";
        case FamilyKind::MacBeathNgon: return "macbeath-ngon";
    }
    return "?";
}

double caustic_radius_general(double a, double b, double xc, double yc) {
    require_shape(a, b);
    double c2 = a * a - b * b;
    if (c2 <= 0.0) throw CircularOuter("caustic_radius_general: circular outer conic");
    double ra = a * a * a * a - c2 * xc * xc;
    if (ra < 0.0) throw NoValidCaustic("caustic_radius_general: center outside valid region");
    double r = (b * std::sqrt(ra) - a * std::sqrt(b * b * b * b + c2 * yc * yc)) / c2;
    if (!(r > 0.0)) throw NoValidCaustic("caustic_radius_general: nonpositive radius");
    return r;
}

FamilySpec focal_x1(double a, double b) {
    require_shape(a, b);
    double c = std::sqrt(a * a - b * b);
    if (c == 0.0) throw CircularOuter("focal_x1");
    double c2 = c * c;
    double r1 = b * b / c2 * (std::sqrt(a * a + c2) - a);

    FamilySpec f;
    f.kind = FamilyKind::FocalX1;
    f.pair = circle_caustic_pair(a, b, {c, 0}, r1);
    f.predictions = {
        scalar_pred(Name::Inradius, r1, "inradius = r1"),
        scalar_pred(Name::SinHalfSum, (c2 - a * a + a * std::sqrt(a * a + c2)) / c2,
                    "sum of half-angle sines"),
        stationary_pred(1, {c, 0}, "incenter stationary at focus"),
    };
    return f;
}

FamilySpec iso_x2(double a, double b) {
    require_shape(a, b);
    double c = std::sqrt(a * a - b * b);
    double cy = c * b / (2 * a);

    FamilySpec f;
    f.kind = FamilyKind::IsoX2;
    f.pair = circle_caustic_pair(a, b, {0, cy}, b / 2);
    double d12 = c * b / (6 * a);
    f.predictions = {
        stationary_pred(2, {0, c * b / (3 * a)}, "barycenter stationary"),
        stationary_pred(8, {0, 0}, "Nagel point stationary at center"),
        stationary_pred(10, {0, c * b / (4 * a)}, "Spieker center on minor axis"),
        scalar_pred(Name::DistSqX1X2, d12 * d12, "|X1X2|^2"),
        scalar_pred(Name::Inradius, b / 2, "inradius = b/2"),
    };
    return f;
}

FamilySpec focal_x4(double a, double b) {
    require_shape(a, b);
    double a2 = a * a, b2 = b * b;
    double c = std::sqrt(a2 - b2);
    double denom = a2 + b2;  // == 2a^2 - c^2
    double r4 = a * b2 / denom;
    double rpol = -b2 * b2 / denom;

    FamilySpec f;
    f.kind = FamilyKind::FocalX4;
    f.pair = circle_caustic_pair(a, b, {a2 * c / denom, 0}, r4);
    f.predictions = {
        stationary_pred(4, {c, 0}, "orthocenter stationary at focus"),
        scalar_pred(Name::PolarCircleSq, rpol, "polar circle squared radius"),
        scalar_pred(Name::DistSqX1X4, 2 * r4 * r4 + rpol, "|X1X4|^2"),
        scalar_pred(Name::Inradius, r4, "inradius = r4"),
    };
    return f;
}

FamilySpec iso_x7(double a, double b) {
    require_shape(a, b);
    double a2 = a * a, b2 = b * b;
    double k7sq = 4 * a2 * a2 - 5 * a2 * b2 + b2 * b2;
    if (k7sq <= 0.0) throw NoValidCaustic("iso_x7: k7 not real");
    double k7 = std::sqrt(k7sq);
    double c2 = a2 - b2;
    double q = 4 * a2 - b2;

    FamilySpec f;
    f.kind = FamilyKind::IsoX7;
    f.pair = circle_caustic_pair(a, b, {k7 / (2 * a), 0}, b2 / (2 * a));
    f.predictions = {
        stationary_pred(7, {2 * a * k7 / q, 0}, "Gergonne point stationary"),
        scalar_pred(Name::TanHalfSum, std::sqrt(q) / a, "sum of half-angle tangents"),
        scalar_pred(Name::DistSqX1X7, b2 * b2 * c2 / (4 * a2 * q), "|X1X7|^2"),
        scalar_pred(Name::AdamsRadius, b2 / (2 * a) * std::sqrt((5 * a2 - b2) / q),
                    "Adams circle radius"),
        scalar_pred(Name::Inradius, b2 / (2 * a), "inradius = r7"),
    };
    return f;
}

FamilySpec macbeath(double a, double b) {
    require_shape(a, b);
    double a2 = a * a, b2 = b * b;
    double cp = std::sqrt(a2 - b2);
    Point2 x3{-cp, 0};
    Point2 x4{cp, 0};

    FamilySpec f;
    f.kind = FamilyKind::MacBeath;
    f.pair.outer = AxisEllipse(x3, 2 * a, 2 * a);  // circumcircle, R = 2a
    f.pair.caustic = matrix_of(AxisEllipse(Point2{0, 0}, a, b));
    f.pair.causticMeta = CausticMeta{{0, 0}, std::pair{x3, x4}};
    f.predictions = {
        scalar_pred(Name::SumSqSides, 32 * a2 + 4 * b2, "sum of squared sidelengths"),
        scalar_pred(Name::Cos2Sum, (cp * cp - 3 * a2) / (2 * a2), "sum of double-angle cosines"),
        scalar_pred(Name::CosProd, b2 / (8 * a2), "product of cosines"),
        scalar_pred(Name::PolarCircleSq, -2 * b2, "polar circle squared radius"),
        scalar_pred(Name::Circumradius, 2 * a, "circumradius = 2a"),
        stationary_pred(2, x3 + (x4 - x3) * (1.0 / 3.0), "barycenter on inconic axis"),
        stationary_pred(3, x3, "circumcenter at left focus"),
        stationary_pred(4, x4, "orthocenter at right focus"),
    };
    return f;
}

FamilySpec dual(double a, double b) {
    require_shape(a, b);
    double a2 = a * a, b2 = b * b;
    double denom = a2 + b2;
    // homothet of the 90-degree rotated outer with factor ab/(a^2+b^2);
    // satisfies the concentric-aligned closure relation ac/a + bc/b = 1
    double ac = a * b2 / denom;
    double bc = a2 * b / denom;

    FamilySpec f;
    f.kind = FamilyKind::Dual;
    f.pair.outer = AxisEllipse(Point2{0, 0}, a, b);
    f.pair.caustic = matrix_of(AxisEllipse(Point2{0, 0}, ac, bc));
    f.pair.causticMeta = CausticMeta{{0, 0}, std::nullopt};
    f.predictions = {
        stationary_pred(4, {0, 0}, "orthocenter stationary at common center"),
        scalar_pred(Name::PolarCircleSq, -a2 * b2 / denom, "polar circle squared radius"),
    };
    return f;
}

FamilySpec chapple(double R, double r) {
    if (!(r > 0.0) || !(R >= 2 * r)) throw EulerViolation("chapple: requires R >= 2r > 0");
    double d = std::sqrt(R * (R - 2 * r));

    FamilySpec f;
    f.kind = FamilyKind::Chapple;
    f.pair.outer = AxisEllipse(Point2{0, 0}, R, R);
    f.pair.caustic = matrix_of(AxisEllipse(Point2{d, 0}, r, r));
    f.pair.causticMeta = CausticMeta{{d, 0}, std::pair{Point2{d, 0}, Point2{d, 0}}};
    f.predictions = {
        conserved_pred(Name::CosSum, "sum of cosines conserved"),
        scalar_pred(Name::Inradius, r, "inradius"),
        scalar_pred(Name::Circumradius, R, "circumradius"),
        stationary_pred(1, {d, 0}, "incenter stationary"),
    };
    return f;
}

FamilySpec brocard(const Triangle& seed) {
    TriangleMetrics m = metrics(seed);
    Point2 x3 = center(seed, CenterId::X(3));
    auto [f1, f2] = brocard_points(seed);

    // Brocard inellipse: confocal through the Brocard points, tangent to side AB
    GeneralEllipse inc = inconic_with_foci(f1, f2, line_through(seed.A, seed.B));
    ConicMatrix caustic = matrix_of(inc);
    // an inconic is determined by its foci; tangency to one side implies the rest
    for (auto [p, q] : {std::pair{seed.B, seed.C}, std::pair{seed.C, seed.A}}) {
        if (tangency_residual(line_through(p, q), caustic) > 1e-8)
            throw DegenerateTriangle("brocard: inconic not tangent to all sides");
    }

    FamilySpec f;
    f.kind = FamilyKind::Brocard;
    f.pair.outer = AxisEllipse(x3, m.R, m.R);
    f.pair.caustic = caustic;
    f.pair.causticMeta = CausticMeta{inc.center, std::pair{f1, f2}};
    f.predictions = {
        stationary_pred(6, center(seed, CenterId::X(6)), "symmedian point stationary"),
    };
    return f;
}

FamilySpec affine_macbeath(double a, double b, const Point2& oc) {
    require_shape(a, b);
    double hx = oc.x / (a / 2), hy = oc.y / (b / 2);
    if (!(hx * hx + hy * hy < 1.0))
        throw OutsideHalfEllipse("affine_macbeath: Oc outside the half-size ellipse");

    // map sending the outer ellipse to a circle of radius b
    AffineMap toCircle = AffineMap::scaling(b / a, 1.0);
    Point2 ocp = toCircle(oc);

    // MacBeath inconic in the circle frame: foci at the circle center and its
    // reflection about Oc', semi-major = b/2
    Point2 focus1{0, 0};
    Point2 focus2 = 2.0 * ocp;
    double cf = ocp.norm();
    GeneralEllipse inc;
    inc.center = ocp;
    inc.semiMajor = b / 2;
    inc.semiMinor = std::sqrt(b * b / 4 - cf * cf);
    inc.rotation = (cf > 0) ? std::atan2(ocp.y, ocp.x) : 0.0;
    if (inc.rotation < 0) inc.rotation += M_PI;

    AffineMap back = toCircle.inverse();
    FamilySpec f;
    f.kind = FamilyKind::AffineMacBeath;
    f.pair.outer = AxisEllipse(Point2{0, 0}, a, b);
    f.pair.caustic = apply_affine(back, matrix_of(inc));
    f.pair.causticMeta = CausticMeta{oc, std::pair{back(focus1), back(focus2)}};
    f.predictions = {
        stationary_pred(2, oc * (2.0 / 3.0), "barycenter on the line O-Oc"),
    };
    return f;
}

FamilySpec macbeath_ngon(double Rcircle, const Point2& c, int n) {
    if (!(Rcircle > 0.0) || !(c.norm() < Rcircle))
        throw InvalidShape("macbeath_ngon: center must be interior to the circle");
    if (n < 4) throw InvalidShape("macbeath_ngon: n must be >= 4");

    AxisEllipse outer(Point2{0, 0}, Rcircle, Rcircle);
    ClosureConstraint constraint;
    constraint.center = c;
    constraint.focusAt = Point2{0, 0};
    ClosureSearchResult found = search_caustic_ngon(outer, constraint, n, 1e-9);

    FamilySpec f;
    f.kind = FamilyKind::MacBeathNgon;
    f.n = n;
    f.pair.outer = outer;
    f.pair.caustic = found.caustic;
    auto foci = foci_of(found.causticShape);
    f.pair.causticMeta = CausticMeta{found.causticShape.center, foci};
    f.predictions = {
        {InvariantId::centroid_drift(CenterId::C0()), std::nullopt,
         (n == 4) ? std::optional<Point2>(c) : std::nullopt, 1e-6, "vertex centroid stationary"},
        {InvariantId::centroid_drift(CenterId::C2()), std::nullopt, std::nullopt, 1e-6,
         "area centroid stationary"},
    };
    return f;
}

}  // namespace poncelet
