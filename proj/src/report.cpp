#include "poncelet/report.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

namespace poncelet {

using nlohmann::json;

namespace {

json point_json(const Point2& p) { return json::array({p.x, p.y}); }

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.8g", v);
    return buf;
}

}  // namespace

json to_json(const GeneralEllipse& e) {
    return json{{"center", point_json(e.center)},
                {"semiMajor", e.semiMajor},
                {"semiMinor", e.semiMinor},
                {"rotation", e.rotation}};
}

json to_json(const InvariantReport& r) {
    json j{{"id", r.id},
           {"samples", r.samples},
           {"mean", r.mean},
           {"maxAbsDeviation", r.maxAbsDeviation},
           {"tolerance", r.tolerance},
           {"verdict", r.pass ? "pass" : "fail"}};
    if (r.predicted) j["predicted"] = *r.predicted;
    if (r.meanPoint) j["meanPoint"] = point_json(*r.meanPoint);
    if (r.predictedPoint) j["predictedPoint"] = point_json(*r.predictedPoint);
    return j;
}

json to_json(const VerifyResult& r) {
    json reports = json::array();
    for (const auto& rep : r.reports) reports.push_back(to_json(rep));
    return json{{"porismCertification",
                 json{{"maxDefect", r.porismDefect}, {"verdict", r.porismPass ? "pass" : "fail"}}},
                {"reports", reports},
                {"allPass", r.all_pass()}};
}

json to_json(const LocusResult& r) {
    json pts = json::array();
    for (const auto& p : r.points) pts.push_back(point_json(p));
    json j{{"center", r.centerId.k},
           {"points", pts},
           {"algebraicResidual", r.algebraicResidual},
           {"degeneratePoint", r.degeneratePoint}};
    if (r.fitted) {
        j["fitted"] = to_json(*r.fitted);
        auto [f1, f2] = foci_of(*r.fitted);
        j["fittedFoci"] = json::array({point_json(f1), point_json(f2)});
    }
    return j;
}

std::string to_csv(const std::vector<InvariantReport>& reports) {
    std::ostringstream os;
    os << "id,samples,mean,maxAbsDeviation,predicted,tolerance,verdict\n";
    os.precision(17);
    for (const auto& r : reports) {
        os << '"' << r.id << "\"," << r.samples << ',' << r.mean << ',' << r.maxAbsDeviation
           << ',';
        if (r.predicted) os << *r.predicted;
        os << ',' << r.tolerance << ',' << (r.pass ? "pass" : "fail") << '\n';
    }
    return os.str();
}

std::string render_svg(const FamilySpec& spec, const std::vector<PolygonSample>& samples,
                       const LocusResult* locusOverlay, const std::vector<Point2>& markers) {
    const AxisEllipse& o = spec.pair.outer;
    double padX = 0.1 * 2 * o.a, padY = 0.1 * 2 * o.b;
    double x0 = o.center.x - o.a - padX, y0 = o.center.y - o.b - padY;
    double w = 2 * (o.a + padX), h = 2 * (o.b + padY);

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(x0) << ' ' << fmt(-y0 - h)
        << ' ' << fmt(w) << ' ' << fmt(h) << "\">\n";
    svg << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"" << fmt(0.004 * w)
        << "\">\n";
    svg << "<ellipse cx=\"" << fmt(o.center.x) << "\" cy=\"" << fmt(o.center.y) << "\" rx=\""
        << fmt(o.a) << "\" ry=\"" << fmt(o.b) << "\" stroke=\"black\"/>\n";

    GeneralEllipse k = classify(spec.pair.caustic);
    svg << "<ellipse cx=\"" << fmt(k.center.x) << "\" cy=\"" << fmt(k.center.y) << "\" rx=\""
        << fmt(k.semiMajor) << "\" ry=\"" << fmt(k.semiMinor) << "\" transform=\"rotate("
        << fmt(k.rotation * 180.0 / M_PI) << ' ' << fmt(k.center.x) << ' ' << fmt(k.center.y)
        << ")\" stroke=\"brown\"/>\n";

    size_t stride = samples.size() > 8 ? samples.size() / 8 : 1;
    for (size_t i = 0; i < samples.size(); i += stride) {
        svg << "<polygon points=\"";
        for (const auto& v : samples[i].vertices) svg << fmt(v.x) << ',' << fmt(v.y) << ' ';
        svg << "\" stroke=\"steelblue\"/>\n";
    }

    if (locusOverlay) {
        for (const auto& p : locusOverlay->points)
            svg << "<circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y) << "\" r=\""
                << fmt(0.004 * w) << "\" fill=\"green\"/>\n";
        if (locusOverlay->fitted) {
            const auto& f = *locusOverlay->fitted;
            svg << "<ellipse cx=\"" << fmt(f.center.x) << "\" cy=\"" << fmt(f.center.y)
                << "\" rx=\"" << fmt(f.semiMajor) << "\" ry=\"" << fmt(f.semiMinor)
                << "\" transform=\"rotate(" << fmt(f.rotation * 180.0 / M_PI) << ' '
                << fmt(f.center.x) << ' ' << fmt(f.center.y) << ")\" stroke=\"green\"/>\n";
        }
    }
    for (const auto& p : markers)
        svg << "<circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y) << "\" r=\""
            << fmt(0.008 * w) << "\" fill=\"red\"/>\n";
    svg << "</g>\n</svg>\n";
    return svg.str();
}

json probe_x4_stationary(int trials, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);

    int tested = 0, stationary = 0, known = 0;
    json counterexamples = json::array();

    for (int trial = 0; trial < trials; ++trial) {
        double a = 1.0 + 2.0 * uni(rng);
        double b = a * (0.35 + 0.55 * uni(rng));
        double xc = (2 * uni(rng) - 1) * 0.8 * a;
        double yc = (2 * uni(rng) - 1) * 0.8 * b;
        double r;
        try {
            r = caustic_radius_general(a, b, xc, yc);
        } catch (const FamilyError&) {
            continue;
        }
        ConicPair pair;
        pair.outer = AxisEllipse(Point2{0, 0}, a, b);
        pair.caustic = matrix_of(AxisEllipse(Point2{xc, yc}, r, r));
        pair.causticMeta = CausticMeta{{xc, yc}, std::nullopt};
        try {
            check_caustic_interior(pair);
            if (porism_defect(pair, 3, 16) > 1e-9 * pair.scale()) continue;
            ++tested;
            FamilySpec spec;
            spec.kind = FamilyKind::FocalX4;  // placeholder kind; only pair/n are used
            spec.pair = pair;
            auto rep = measure(spec, InvariantId::center_drift(4), 32, 1e-6);
            if (rep.maxAbsDeviation >= 1e-6 * pair.scale()) continue;
            ++stationary;
            double c = std::sqrt(a * a - b * b);
            double c4 = a * a * c / (a * a + b * b);
            bool matches = std::hypot(std::abs(xc) - c4, yc) < 1e-6 * pair.scale();
            if (matches)
                ++known;
            else
                counterexamples.push_back(json{{"a", a}, {"b", b}, {"xc", xc}, {"yc", yc},
                                               {"r", r},
                                               {"x4Drift", rep.maxAbsDeviation}});
        } catch (const GeometryError&) {
            continue;
        }
    }
    return json{{"probe", "x4-stationary-scan"},
                {"trials", trials},
                {"porismsTested", tested},
                {"stationaryX4Found", stationary},
                {"matchingKnownConfigurations", known},
                {"counterexamples", counterexamples}};
}

json probe_polar_half_angle_sums(const ConicPair& pair, int n, int count) {
    auto samples = sample_family(pair, n, count);
    ConicMatrix outer = matrix_of(pair.outer);

    auto polygon_sums = [](const std::vector<Point2>& v) {
        double tanSum = 0.0, sinSum = 0.0;
        const size_t m = v.size();
        for (size_t i = 0; i < m; ++i) {
            Point2 prev = v[(i + m - 1) % m] - v[i];
            Point2 next = v[(i + 1) % m] - v[i];
            double cosA = dot(prev, next) / (prev.norm() * next.norm());
            double theta = std::acos(std::clamp(cosA, -1.0, 1.0));
            tanSum += std::tan(0.5 * theta);
            sinSum += std::sin(0.5 * theta);
        }
        return std::pair{tanSum, sinSum};
    };

    std::vector<double> tans, sins;
    for (const auto& s : samples) {
        std::vector<Point2> image;
        image.reserve(s.vertices.size());
        for (size_t i = 0; i < s.vertices.size(); ++i) {
            HCoord edge = line_through(s.vertices[i], s.vertices[(i + 1) % s.vertices.size()]);
            image.push_back(pole(edge, outer));
        }
        auto [t, si] = polygon_sums(image);
        tans.push_back(t);
        sins.push_back(si);
    }
    auto stats = [](const std::vector<double>& v) {
        double mean = 0;
        for (double x : v) mean += x;
        mean /= double(v.size());
        double maxd = 0;
        for (double x : v) maxd = std::max(maxd, std::abs(x - mean));
        return json{{"mean", mean}, {"maxAbsDeviation", maxd}};
    };
    return json{{"probe", "polar-tan-half-sum"},
                {"n", n},
                {"samples", int(samples.size())},
                {"tanHalfSum", stats(tans)},
                {"sinHalfSum", stats(sins)}};
}

std::pair<ConicPair, int> parse_conic_pair(const json& j) {
    auto coeff_matrix = [](const json& c) {
        Mat3 m;
        double A = c.at(0), B = c.at(1), C = c.at(2), D = c.at(3), E = c.at(4), F = c.at(5);
        m << A, B / 2, D / 2, B / 2, C, E / 2, D / 2, E / 2, F;
        return ConicMatrix(m);
    };

    const json& jo = j.at("outer");
    AxisEllipse outer;
    if (jo.contains("coeffs")) {
        GeneralEllipse g = classify(coeff_matrix(jo["coeffs"]));
        double rot = std::abs(std::remainder(g.rotation, M_PI));
        if (rot < 1e-9)
            outer = AxisEllipse(g.center, g.semiMajor, g.semiMinor);
        else if (std::abs(rot - M_PI / 2) < 1e-9)
            outer = AxisEllipse(g.center, g.semiMinor, g.semiMajor);
        else
            throw GeometryError("conic pair file: outer conic must be axis-aligned");
    } else {
        Point2 c{0, 0};
        if (jo.contains("center")) c = Point2{jo["center"].at(0), jo["center"].at(1)};
        outer = AxisEllipse(c, jo.at("a"), jo.at("b"));
    }

    const json& jc = j.at("caustic");
    ConicPair pair;
    pair.outer = outer;
    if (jc.contains("coeffs")) {
        pair.caustic = coeff_matrix(jc["coeffs"]);
    } else {
        Point2 c{0, 0};
        if (jc.contains("center")) c = Point2{jc["center"].at(0), jc["center"].at(1)};
        pair.caustic = matrix_of(AxisEllipse(c, jc.at("a"), jc.at("b")));
    }
    pair.causticMeta = CausticMeta{classify(pair.caustic).center, std::nullopt};
    check_caustic_interior(pair);
    int n = j.value("n", 3);
    return {pair, n};
}

}  // namespace poncelet
