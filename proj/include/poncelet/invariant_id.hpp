#pragma once

#include <string>

#include "poncelet/triangle.hpp"

namespace poncelet {

/// Identifier of a measurable quantity over a Poncelet family.
struct InvariantId {
    enum class Name {
        Inradius,
        Circumradius,
        SinHalfSum,
        TanHalfSum,
        Cos2Sum,
        CosSum,
        CosProd,
        SumSqSides,
        PolarCircleSq,
        AdamsRadius,
        DistSqX1X2,
        DistSqX1X4,
        DistSqX1X7,
        CenterDrift,
        CentroidDrift,
    };

    Name name = Name::Inradius;
    CenterId center{0};  // payload for CenterDrift / CentroidDrift

    static InvariantId scalar(Name n) { return {n, CenterId{0}}; }
    static InvariantId center_drift(int k) { return {Name::CenterDrift, CenterId::X(k)}; }
    static InvariantId centroid_drift(CenterId c) { return {Name::CentroidDrift, c}; }

    bool is_drift() const { return name == Name::CenterDrift || name == Name::CentroidDrift; }
    std::string str() const;
};

InvariantId parse_invariant(const std::string& s);

}  // namespace poncelet
