#include "poncelet/chase.hpp"

#include <cmath>
#include <random>

namespace poncelet {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

Point2 caustic_center(const ConicPair& pair) {
    if (pair.causticMeta) return pair.causticMeta->center;
    return classify(pair.caustic).center;
}

double outer_value(const AxisEllipse& e, const Point2& p) {
    double dx = (p.x - e.center.x) / e.a;
    double dy = (p.y - e.center.y) / e.b;
    return dx * dx + dy * dy - 1.0;
}

/// Approximate distance from p to the caustic boundary (value / gradient norm).
double caustic_distance(const ConicMatrix& c, const Point2& p) {
    Mat3 m = c.normalized().m;
    Vec3 h = p.homogeneous();
    double val = h.dot(m * h);
    Vec3 g = 2.0 * (m * h);
    double gn = std::hypot(g.x(), g.y());
    if (gn < 1e-300) return std::abs(val);
    return std::abs(val) / gn;
}

}  // namespace

void check_caustic_interior(const ConicPair& pair, int samples) {
    GeneralEllipse k = classify(pair.caustic);
    double ct = std::cos(k.rotation), st = std::sin(k.rotation);
    for (int i = 0; i < samples; ++i) {
        double t = kTwoPi * i / samples;
        double x = k.semiMajor * std::cos(t), y = k.semiMinor * std::sin(t);
        Point2 p{k.center.x + ct * x - st * y, k.center.y + st * x + ct * y};
        if (outer_value(pair.outer, p) >= 0.0)
            throw CausticNotInterior("caustic boundary not strictly inside the outer conic");
    }
}

StepResult next_vertex(const Point2& p, const ConicPair& pair,
                       const std::optional<HCoord>& incomingEdge) {
    const double scale = pair.scale();
    std::pair<HCoord, HCoord> lines;
    try {
        lines = tangents_from(p, pair.caustic);
    } catch (const PointOnConic&) {
        throw VertexOnCaustic("next_vertex: vertex on the caustic");
    } catch (const PointInside&) {
        throw VertexOnCaustic("next_vertex: vertex inside the caustic");
    }

    HCoord edge;
    if (incomingEdge) {
        // exclusion rule: take the tangent that is not the incoming edge
        double d1 = line_distance(lines.first, *incomingEdge);
        double d2 = line_distance(lines.second, *incomingEdge);
        edge = (d1 > d2) ? lines.first : lines.second;
    } else {
        // orientation rule seeds the first step: tangency point CCW of p
        Point2 kc = caustic_center(pair);
        auto ccw = [&](const HCoord& l) {
            Point2 tp = pole(l, pair.caustic);
            return cross(p - kc, tp - kc) > 0.0;
        };
        edge = ccw(lines.first) ? lines.first : lines.second;
    }

    auto hits = intersect_line_conic(edge, matrix_of(pair.outer));
    Point2 best = p;
    double bestDist = -1.0;
    for (const auto& q : hits) {
        double d = dist(q, p);
        if (d > bestDist) {
            bestDist = d;
            best = q;
        }
    }
    StepResult res;
    res.edge = edge;
    if (bestDist < 1e-8 * scale) {
        res.vertex = p;
        res.tangentContact = true;
        return res;
    }
    // snap back onto the outer conic parameterization
    res.vertex = pair.outer.point_at(pair.outer.param_of(best));
    return res;
}

namespace {

struct ChaseRun {
    std::vector<Point2> vertices;  // the n visited polygon vertices (start included)
    Point2 final;                  // vertex reached after n steps
};

ChaseRun run_chase(const ConicPair& pair, double t, int n) {
    if (n < 3) throw ChaseError("chase: n must be >= 3");
    ChaseRun run;
    Point2 p = pair.outer.point_at(t);
    std::optional<HCoord> incoming;
    run.vertices.push_back(p);
    for (int i = 0; i < n; ++i) {
        StepResult s = next_vertex(p, pair, incoming);
        p = s.vertex;
        incoming = s.edge;
        if (i + 1 < n) run.vertices.push_back(p);
    }
    run.final = p;
    return run;
}

double skip_degenerate_start(const ConicPair& pair, double t) {
    for (int tries = 0; tries < 16; ++tries) {
        Point2 p = pair.outer.point_at(t);
        if (caustic_distance(pair.caustic, p) > 1e-8 * pair.scale()) return t;
        t += 1e-3;
    }
    return t;
}

}  // namespace

PolygonSample chase(const ConicPair& pair, double t, int n) {
    PolygonSample s;
    s.t = t;
    s.vertices = run_chase(pair, t, n).vertices;
    return s;
}

double closure_defect(const ConicPair& pair, double t, int n) {
    ChaseRun run = run_chase(pair, t, n);
    return dist(pair.outer.point_at(t), run.final);
}

double porism_defect(const ConicPair& pair, int n, int probes) {
    double worst = 0.0;
    for (int i = 0; i < probes; ++i) {
        double t = skip_degenerate_start(pair, kTwoPi * i / probes + 0.0375);
        worst = std::max(worst, closure_defect(pair, t, n));
    }
    return worst;
}

std::vector<PolygonSample> sample_family(const ConicPair& pair, int n, int count, double tol) {
    if (porism_defect(pair, n, 16) > tol * pair.scale())
        throw NotAPorism("sample_family: closure defect above tolerance");
    std::vector<PolygonSample> out;
    out.reserve(size_t(count));
    for (int i = 0; i < count; ++i) {
        double t = skip_degenerate_start(pair, kTwoPi * i / count);
        out.push_back(chase(pair, t, n));
    }
    return out;
}

namespace {

/// Candidate caustic of the one-parameter search family, by semi-major axis m.
GeneralEllipse candidate_caustic(const ClosureConstraint& c, double m) {
    GeneralEllipse e;
    e.center = c.center;
    if (c.focusAt) {
        Point2 d = c.center - *c.focusAt;
        double cf = d.norm();
        if (cf < 1e-14) {
            e.semiMajor = e.semiMinor = m;
            e.rotation = 0.0;
        } else {
            if (m <= cf) throw ConicError("candidate_caustic: semi-major below focal distance");
            e.semiMajor = m;
            e.semiMinor = std::sqrt(m * m - cf * cf);
            e.rotation = std::fmod(std::atan2(d.y, d.x) + M_PI, M_PI);
        }
    } else {
        e.semiMajor = m;
        e.semiMinor = c.aspect * m;
    }
    return e;
}

bool contained(const AxisEllipse& outer, const GeneralEllipse& k, double margin) {
    double ct = std::cos(k.rotation), st = std::sin(k.rotation);
    for (int i = 0; i < 64; ++i) {
        double t = kTwoPi * i / 64;
        double x = k.semiMajor * std::cos(t), y = k.semiMinor * std::sin(t);
        Point2 p{k.center.x + ct * x - st * y, k.center.y + st * x + ct * y};
        if (outer_value(outer, p) >= -margin) return false;
    }
    return true;
}

}  // namespace

ClosureSearchResult search_caustic_ngon(const AxisEllipse& outer,
                                        const ClosureConstraint& constraint, int n,
                                        double tol) {
    if (n < 3) throw ChaseError("search_caustic_ngon: n must be >= 3");
    if (outer_value(outer, constraint.center) >= 0.0)
        throw ChaseError("search_caustic_ngon: constraint center not interior");

    const double scale = outer.scale();
    double lo = 0.0;
    if (constraint.focusAt) lo = (constraint.center - *constraint.focusAt).norm();

    // signed angular defect of the first return, averaged over 8 probe starts
    auto angular_defect = [&](double m) -> double {
        GeneralEllipse k = candidate_caustic(constraint, m);
        if (!contained(outer, k, 1e-12)) return std::nan("");
        ConicPair pair{outer, matrix_of(k), CausticMeta{k.center, std::nullopt}};
        double acc = 0.0;
        for (int j = 0; j < 8; ++j) {
            double t0 = kTwoPi * j / 8 + 0.0412;
            ChaseRun run;
            try {
                run = run_chase(pair, t0, n);
            } catch (const GeometryError&) {
                return std::nan("");
            }
            double total = 0.0;
            double prev = t0;
            auto step_to = [&](const Point2& p) {
                double th = outer.param_of(p);
                double d = std::fmod(th - prev, kTwoPi);
                if (d < 0) d += kTwoPi;
                total += d;
                prev = th;
            };
            for (size_t i = 1; i < run.vertices.size(); ++i) step_to(run.vertices[i]);
            step_to(run.final);
            acc += total - kTwoPi;
        }
        return acc / 8.0;
    };

    // coarse scan for a sign change
    const int kScan = 128;
    double mMin = lo + 1e-9 * scale;
    double mMax = scale;
    double prevM = std::nan(""), prevD = std::nan("");
    double bracketLo = 0, bracketHi = 0, dLo = 0;
    bool found = false;
    for (int i = 1; i <= kScan && !found; ++i) {
        double m = mMin + (mMax - mMin) * i / (kScan + 1.0);
        double d = angular_defect(m);
        if (std::isnan(d)) continue;
        if (!std::isnan(prevD) && prevD * d <= 0.0) {
            bracketLo = prevM;
            bracketHi = m;
            dLo = prevD;
            found = true;
        }
        prevM = m;
        prevD = d;
    }
    if (!found) throw NoSignChange("search_caustic_ngon: no porism bracket found");

    for (int it = 0; it < 200 && bracketHi - bracketLo > 1e-17 * scale; ++it) {
        double mid = 0.5 * (bracketLo + bracketHi);
        double d = angular_defect(mid);
        if (std::isnan(d)) throw MaxIterations("search_caustic_ngon: invalid midpoint");
        if (dLo * d <= 0.0)
            bracketHi = mid;
        else {
            bracketLo = mid;
            dLo = d;
        }
    }

    double m = 0.5 * (bracketLo + bracketHi);
    GeneralEllipse k = candidate_caustic(constraint, m);
    ClosureSearchResult res;
    res.causticShape = k;
    res.caustic = matrix_of(k);
    res.parameter = m;

    // certify closure at 32 additional random starts
    ConicPair pair{outer, res.caustic, CausticMeta{k.center, std::nullopt}};
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    std::uniform_real_distribution<double> uni(0.0, kTwoPi);
    double worst = 0.0;
    for (int i = 0; i < 32; ++i) {
        double t = skip_degenerate_start(pair, uni(rng));
        worst = std::max(worst, closure_defect(pair, t, n));
    }
    res.maxDefect = worst;
    if (worst > tol * scale)
        throw MaxIterations("search_caustic_ngon: closure certification failed");
    return res;
}

}  // namespace poncelet
