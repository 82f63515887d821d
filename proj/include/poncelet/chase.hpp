#pragma once

#include <optional>
#include <vector>

#include "poncelet/conic.hpp"

namespace poncelet {

struct ChaseError : GeometryError {
    using GeometryError::GeometryError;
};
struct VertexOnCaustic : ChaseError {
    using ChaseError::ChaseError;
};
struct NotAPorism : ChaseError {
    using ChaseError::ChaseError;
};
struct NoSignChange : ChaseError {
    using ChaseError::ChaseError;
};
struct MaxIterations : ChaseError {
    using ChaseError::ChaseError;
};
struct CausticNotInterior : ChaseError {
    using ChaseError::ChaseError;
};

struct CausticMeta {
    Point2 center{0, 0};
    std::optional<std::pair<Point2, Point2>> knownFoci;
};

/// Outer conic + caustic, the Poncelet configuration.
struct ConicPair {
    AxisEllipse outer;
    ConicMatrix caustic;
    std::optional<CausticMeta> causticMeta;

    double scale() const { return outer.scale(); }
};

/// Throws CausticNotInterior unless the caustic boundary lies strictly inside the outer conic.
void check_caustic_interior(const ConicPair& pair, int samples = 64);

struct PolygonSample {
    std::vector<Point2> vertices;
    double t = 0.0;  // outer-conic parameter of vertex 0
};

struct StepResult {
    Point2 vertex;
    HCoord edge;
    bool tangentContact = false;  // no second intersection; vertex == input point
};

/// One Poncelet step: tangent line from p to the caustic (excluding the incoming
/// edge), and its second intersection with the outer conic.
StepResult next_vertex(const Point2& p, const ConicPair& pair,
                       const std::optional<HCoord>& incomingEdge = std::nullopt);

/// n successive steps starting at outer point P(t); closure is not assumed.
PolygonSample chase(const ConicPair& pair, double t, int n);

/// Distance between P(t) and the vertex reached after n steps.
double closure_defect(const ConicPair& pair, double t, int n);

/// Max closure defect over a probe grid of starting parameters.
double porism_defect(const ConicPair& pair, int n, int probes = 16);

/// Uniform-t family samples; throws NotAPorism unless the pair certifies closure.
std::vector<PolygonSample> sample_family(const ConicPair& pair, int n, int count,
                                         double tol = 1e-9);

struct ClosureConstraint {
    Point2 center{0, 0};
    std::optional<Point2> focusAt;
    double aspect = 0.5;  // fixed b/a when no focus is pinned
};

struct ClosureSearchResult {
    ConicMatrix caustic;
    GeneralEllipse causticShape;
    double parameter = 0.0;  // semi-major axis of the caustic found
    double maxDefect = 0.0;
};

/// Bisection on the signed angular closure defect over a one-parameter caustic
/// family with the given center (focus optionally pinned).
ClosureSearchResult search_caustic_ngon(const AxisEllipse& outer,
                                        const ClosureConstraint& constraint, int n,
                                        double tol = 1e-9);

}  // namespace poncelet
