#pragma once

#include <optional>

#include "poncelet/invariants.hpp"

namespace poncelet {

struct NotHomothetic : GeometryError {
    using GeometryError::GeometryError;
};

struct LocusResult {
    CenterId centerId{0};
    std::vector<Point2> points;
    std::optional<GeneralEllipse> fitted;  // absent for point loci
    double algebraicResidual = 0.0;
    bool degeneratePoint = false;
};

/// Sample a center over the family and fit/classify its locus.
LocusResult locus(const FamilySpec& spec, const CenterId& id, int count = 64);

struct HomothetyCheck {
    double factor = 0.0;
    double residual = 0.0;
};

/// Semi-axis ratio agreement of a fitted locus against a reference ellipse.
HomothetyCheck homothety_check(const LocusResult& l, const AxisEllipse& reference);

}  // namespace poncelet
