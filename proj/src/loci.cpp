#include "poncelet/loci.hpp"

#include <algorithm>
#include <cmath>

namespace poncelet {

LocusResult locus(const FamilySpec& spec, const CenterId& id, int count) {
    if (count < 12) throw GeometryError("locus: count must be >= 12");
    auto samples = sample_family(spec.pair, spec.n, count);

    LocusResult res;
    res.centerId = id;
    res.points.reserve(samples.size());
    for (const auto& s : samples) {
        if (id.is_ngon_centroid()) {
            auto c = ngon_centroids(s.vertices);
            if (id == CenterId::C0()) res.points.push_back(c.C0);
            else if (id == CenterId::C1()) res.points.push_back(c.C1);
            else res.points.push_back(c.C2);
        } else {
            res.points.push_back(
                center(Triangle(s.vertices[0], s.vertices[1], s.vertices[2]), id));
        }
    }

    // point-locus detection precedes conic fitting
    double minx = res.points[0].x, maxx = minx, miny = res.points[0].y, maxy = miny;
    for (const auto& p : res.points) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    double diam = std::hypot(maxx - minx, maxy - miny);
    if (diam < 1e-7 * spec.pair.scale()) {
        res.degeneratePoint = true;
        return res;
    }

    try {
        ConicFit fit = fit_conic(res.points);
        res.algebraicResidual = fit.residual;
        res.fitted = classify(fit.conic);
    } catch (const ConicError&) {
        res.fitted = std::nullopt;  // segment-like or otherwise non-elliptic locus
    }
    return res;
}

HomothetyCheck homothety_check(const LocusResult& l, const AxisEllipse& reference) {
    if (!l.fitted) throw NotHomothetic("homothety_check: no fitted ellipse");
    const GeneralEllipse& f = *l.fitted;

    double refMajor = std::max(reference.a, reference.b);
    double refMinor = std::min(reference.a, reference.b);
    double refRot = (reference.a >= reference.b) ? 0.0 : M_PI / 2;

    double r1 = f.semiMajor / refMajor;
    double r2 = f.semiMinor / refMinor;
    double drot = std::abs(std::remainder(f.rotation - refRot, M_PI));
    // a circle-like fit has arbitrary rotation
    if (f.semiMajor - f.semiMinor < 1e-9 * f.semiMajor) drot = 0.0;

    HomothetyCheck c;
    c.factor = 0.5 * (r1 + r2);
    c.residual = std::abs(r1 - r2) + drot;
    if (c.residual > 1e-4) throw NotHomothetic("homothety_check: residual above 1e-4");
    return c;
}

}  // namespace poncelet
