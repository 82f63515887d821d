#pragma once

#include <optional>
#include <string>
#include <vector>

#include "poncelet/families.hpp"

namespace poncelet {

struct UnsupportedForFamily : GeometryError {
    using GeometryError::GeometryError;
};

struct InvariantReport {
    std::string id;
    int samples = 0;
    double mean = 0.0;             // drift ids: mean distance from the sample-mean point
    double maxAbsDeviation = 0.0;  // drift ids: max distance from the sample-mean point
    std::optional<double> predicted;
    std::optional<Point2> meanPoint;       // drift ids only
    std::optional<Point2> predictedPoint;  // drift ids only
    double tolerance = 1e-8;
    bool pass = false;
};

/// Evaluate one quantity over `count` uniform family samples.
InvariantReport measure(const FamilySpec& spec, const InvariantId& id, int count,
                        double tol = 1e-8);

struct VerifyResult {
    double porismDefect = 0.0;
    bool porismPass = false;
    std::vector<InvariantReport> reports;

    bool all_pass() const {
        if (!porismPass) return false;
        for (const auto& r : reports)
            if (!r.pass) return false;
        return true;
    }
};

/// Porism gate, then every prediction in the spec plus per-family identity checks.
VerifyResult verify(const FamilySpec& spec, int count = 64, double tol = 1e-8);

}  // namespace poncelet
