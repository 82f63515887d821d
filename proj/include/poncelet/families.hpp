#pragma once

#include <optional>
#include <string>
#include <vector>

#include "poncelet/chase.hpp"
#include "poncelet/invariant_id.hpp"

namespace poncelet {

struct FamilyError : GeometryError {
    using GeometryError::GeometryError;
};
struct InvalidShape : FamilyError {
    using FamilyError::FamilyError;
};
struct NoValidCaustic : FamilyError {
    using FamilyError::FamilyError;
};
struct CircularOuter : FamilyError {
    using FamilyError::FamilyError;
};
struct EulerViolation : FamilyError {
    using FamilyError::FamilyError;
};
struct OutsideHalfEllipse : FamilyError {
    using FamilyError::FamilyError;
};

enum class FamilyKind {
    FocalX1,
    IsoX2,
    FocalX4,
    IsoX7,
    MacBeath,
    Dual,
    Chapple,
    Brocard,
    AffineMacBeath,
    MacBeathNgon,
};

std::string kind_name(FamilyKind k);

/// A closed-form claim to verify: either a stationary point or an invariant value.
/// A prediction with neither value nor point asserts conservation only.
struct Prediction {
    InvariantId target;
    std::optional<double> value;
    std::optional<Point2> point;  // expected stationary location
    double tolerance = 1e-8;
    std::string label;
};

struct FamilySpec {
    FamilyKind kind = FamilyKind::FocalX1;
    ConicPair pair;
    int n = 3;
    std::vector<Prediction> predictions;
};

/// Radius of the circular caustic (of Poncelet triangles about the incircle)
/// centered at (xc, yc) inside the ellipse with semi-axes a > b.
double caustic_radius_general(double a, double b, double xc, double yc);

FamilySpec focal_x1(double a, double b);
FamilySpec iso_x2(double a, double b);
FamilySpec focal_x4(double a, double b);
FamilySpec iso_x7(double a, double b);
/// a, b are the semi-axes of the MacBeath inconic; the circumcircle has R = 2a.
FamilySpec macbeath(double a, double b);
FamilySpec dual(double a, double b);
FamilySpec chapple(double R, double r);
FamilySpec brocard(const Triangle& seed);
FamilySpec affine_macbeath(double a, double b, const Point2& oc);
FamilySpec macbeath_ngon(double Rcircle, const Point2& center, int n);

}  // namespace poncelet
