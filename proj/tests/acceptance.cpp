// Acceptance gate: one line of output per criterion, nonzero exit on failure.
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "poncelet/report.hpp"

using namespace poncelet;
using nlohmann::json;

namespace {

const double kSqrt3 = std::sqrt(3.0);
const double kSqrt7 = std::sqrt(7.0);

struct Ctx {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
    void require_close(double got, double want, double tol, const std::string& what) {
        if (!(std::abs(got - want) <= tol)) {
            ok = false;
            char buf[160];
            std::snprintf(buf, sizeof buf, "%s: got %.12g, want %.12g (tol %g)", what.c_str(),
                          got, want, tol);
            notes.push_back(buf);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

const InvariantReport* find_report(const VerifyResult& v, const std::string& needle) {
    for (const auto& r : v.reports)
        if (r.id.find(needle) != std::string::npos) return &r;
    return nullptr;
}

void check_drift(Ctx& c, const VerifyResult& v, const std::string& id, const Point2& at,
                 double tol, const std::string& what) {
    const InvariantReport* r = find_report(v, id);
    if (!r || !r->meanPoint) {
        c.require(false, what + ": report missing");
        return;
    }
    c.require(r->maxAbsDeviation < tol, what + ": drift above tolerance");
    c.require(dist(*r->meanPoint, at) < tol, what + ": stationary point off target");
}

void check_value(Ctx& c, const VerifyResult& v, const std::string& id, double want, double tol,
                 const std::string& what) {
    const InvariantReport* r = find_report(v, id);
    if (!r) {
        c.require(false, what + ": report missing");
        return;
    }
    c.require(r->maxAbsDeviation < tol, what + ": not conserved");
    c.require_close(r->mean, want, tol, what);
}

// ---------------------------------------------------------------------------

void criterion1(Ctx& c) {
    struct Item {
        const char* name;
        FamilySpec spec;
    };
    std::vector<Item> fams;
    fams.push_back({"focal-x1", focal_x1(2, 1)});
    fams.push_back({"iso-x2", iso_x2(2, 1)});
    fams.push_back({"focal-x4", focal_x4(2, 1)});
    fams.push_back({"iso-x7", iso_x7(2, 1)});
    fams.push_back({"macbeath", macbeath(1, 0.5)});
    fams.push_back({"dual", dual(2, 1)});
    fams.push_back({"chapple", chapple(2, 0.9)});
    fams.push_back({"brocard", brocard(Triangle{{0, 0}, {3, 0}, {0, 4}})});
    fams.push_back({"affine-macbeath", affine_macbeath(2, 1, {0.3, 0.2})});
    for (const auto& [name, f] : fams) {
        double d = porism_defect(f.pair, f.n, 64);
        c.require(d < 1e-9 * f.pair.scale(),
                  std::string(name) + ": porism defect " + std::to_string(d));
    }
}

void criterion2(Ctx& c) {
    VerifyResult v = verify(focal_x1(2, 1), 64);
    check_value(c, v, "inradius", (kSqrt7 - 2) / 3, 1e-8, "focal-x1 inradius");
    check_value(c, v, "sin-half-sum", (2 * kSqrt7 - 1) / 3, 1e-8, "focal-x1 sin half sum");
}

void criterion3(Ctx& c) {
    VerifyResult v = verify(iso_x2(2, 1), 64);
    check_drift(c, v, "center-drift-x2", {0, kSqrt3 / 6}, 1e-8, "iso-x2 X2");
    check_drift(c, v, "center-drift-x8", {0, 0}, 1e-8, "iso-x2 X8");
    check_drift(c, v, "center-drift-x10", {0, 0.2165063509461097}, 1e-7, "iso-x2 X10");
    check_value(c, v, "dist-sq-x1-x2", 1.0 / 48, 1e-8, "iso-x2 |X1X2|^2");
}

void criterion4(Ctx& c) {
    FamilySpec f = focal_x4(2, 1);
    VerifyResult v = verify(f, 64);
    check_drift(c, v, "center-drift-x4", {kSqrt3, 0}, 1e-8, "focal-x4 X4");
    check_value(c, v, "polar-circle-sq", -0.2, 1e-8, "focal-x4 polar circle");
    check_value(c, v, "dist-sq-x1-x4", 0.12, 1e-8, "focal-x4 |X1X4|^2");

    LocusResult l3 = locus(f, CenterId::X(3), 64);
    LocusResult l20 = locus(f, CenterId::X(20), 64);
    c.require(l3.fitted && l20.fitted, "focal-x4 X3/X20 locus fits missing");
    if (l3.fitted && l20.fitted) {
        auto [a1, a2] = foci_of(*l3.fitted);
        c.require(std::min(a1.norm(), a2.norm()) < 1e-6, "X3 locus focus not at origin");
        c.require_close(l20.fitted->semiMajor, 2 * l3.fitted->semiMajor, 1e-6,
                        "X20 locus semi-major vs 2x X3");
        c.require_close(l20.fitted->semiMinor, 2 * l3.fitted->semiMinor, 1e-6,
                        "X20 locus semi-minor vs 2x X3");
        auto [b1, b2] = foci_of(*l20.fitted);
        c.require(std::min(dist(b1, {-kSqrt3, 0}), dist(b2, {-kSqrt3, 0})) < 1e-6,
                  "X20 locus focus not at (-sqrt3, 0)");
    }
}

void criterion5(Ctx& c) {
    VerifyResult v = verify(iso_x7(2, 1), 64);
    check_drift(c, v, "center-drift-x7", {4 / std::sqrt(5.0), 0}, 1e-8, "iso-x7 X7");
    check_value(c, v, "tan-half-sum", std::sqrt(15.0) / 2, 1e-8, "iso-x7 tan half sum");
    check_value(c, v, "dist-sq-x1-x7", 0.0125, 1e-8, "iso-x7 |X1X7|^2");
    check_value(c, v, "adams-radius", 0.25 * std::sqrt(19.0 / 15.0), 1e-8, "iso-x7 Adams");
}

void criterion6(Ctx& c) {
    VerifyResult v = verify(macbeath(1, 0.5), 64);
    check_value(c, v, "sum-sq-sides", 33, 1e-7, "macbeath sum of squared sides");
    check_value(c, v, "cos2-sum", -1.125, 1e-8, "macbeath cos2 sum");
    check_value(c, v, "cos-prod", 0.03125, 1e-8, "macbeath cos product");
    check_value(c, v, "polar-circle-sq", -0.5, 1e-8, "macbeath polar circle");
    // X2 stationary on the inconic major axis (the x-axis), at X3 + (X4-X3)/3
    check_drift(c, v, "center-drift-x2", {-std::sqrt(0.75) / 3, 0}, 1e-8, "macbeath X2");
    const InvariantReport* x2 = find_report(v, "center-drift-x2");
    if (x2 && x2->meanPoint) c.require(std::abs(x2->meanPoint->y) < 1e-8, "X2 off major axis");
}

void criterion7(Ctx& c) {
    FamilySpec f = dual(2, 1);
    VerifyResult v = verify(f, 64);
    check_value(c, v, "polar-circle-sq", -0.8, 1e-8, "dual polar circle");
    GeneralEllipse g = classify(f.pair.caustic);
    c.require_close(std::min(g.semiMajor, g.semiMinor), 0.4, 1e-12, "dual caustic minor");
    c.require_close(std::max(g.semiMajor, g.semiMinor), 0.8, 1e-12, "dual caustic major");
    c.require(porism_defect(f.pair, 3, 64) < 1e-9 * f.pair.scale(), "dual porism gate");
    LocusResult l3 = locus(f, CenterId::X(3), 64);
    try {
        HomothetyCheck h = homothety_check(l3, f.pair.outer);
        c.require_close(h.factor, 0.3, 1e-6, "dual X3 homothety factor");
    } catch (const NotHomothetic&) {
        c.require(false, "dual X3 locus not homothetic to outer");
    }
}

void criterion8(Ctx& c) {
    // Chapple polar image: incenter of the tangential triangle at the source
    // circumcenter (the origin)
    FamilySpec ch = chapple(2, 0.9);
    ConicMatrix chOuter = matrix_of(ch.pair.outer);
    double worst = 0.0;
    for (const auto& s : sample_family(ch.pair, 3, 64)) {
        Triangle t{s.vertices[0], s.vertices[1], s.vertices[2]};
        worst = std::max(worst, center(polar_triangle(t, chOuter), CenterId::X(1)).norm());
    }
    c.require(worst < 1e-9, "chapple polar-image X1 drift " + std::to_string(worst));

    // Brocard polar image: X7 pinned at the porism's stationary X6
    Triangle seed{{0, 0}, {3, 0}, {0, 4}};
    FamilySpec br = brocard(seed);
    ConicMatrix brOuter = matrix_of(br.pair.outer);
    Point2 x6 = center(seed, CenterId::X(6));
    double worst7 = 0.0;
    int acute = 0, obtuse = 0;
    for (const auto& s : sample_family(br.pair, 3, 64)) {
        Triangle t{s.vertices[0], s.vertices[1], s.vertices[2]};
        c.require(dist(center(t, CenterId::X(6)), x6) < 1e-7, "brocard X6 not stationary");
        // the identity X7(tangential) = X6(source) requires internal tangency:
        // for an obtuse member the circumcircle is an excircle of its
        // tangential triangle, so the Gergonne point does not correspond
        TriangleMetrics m = metrics(t);
        if (std::max({m.theta1, m.theta2, m.theta3}) >= M_PI / 2 - 1e-6) {
            ++obtuse;
            continue;
        }
        ++acute;
        Point2 x7 = center(polar_triangle(t, brOuter), CenterId::X(7));
        worst7 = std::max(worst7, dist(x7, x6));
    }
    c.require(acute >= 16, "too few acute brocard members sampled");
    c.require(worst7 < 1e-7, "brocard polar-image X7 drift " + std::to_string(worst7));
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "brocard polar X7: drift %.3g over %d acute members (%d obtuse members "
                  "excluded: circumcircle is an excircle of their tangential triangle)",
                  worst7, acute, obtuse);
    c.note(buf);
}

void criterion9(Ctx& c) {
    FamilySpec f = affine_macbeath(2, 1, {0.3, 0.2});
    c.require(porism_defect(f.pair, 3, 64) < 1e-9 * f.pair.scale(), "affine-macbeath closure");
    VerifyResult v = verify(f, 64);
    check_drift(c, v, "center-drift-x2", {0.2, 2.0 / 15}, 1e-8, "affine-macbeath X2");
    const InvariantReport* col = find_report(v, "x2-collinear-with-o-oc");
    c.require(col && col->maxAbsDeviation < 1e-9, "X2-O-Oc collinearity above 1e-9");
}

void criterion10(Ctx& c) {
    for (int n : {4, 5}) {
        FamilySpec f = macbeath_ngon(1, {0.2, 0}, n);
        VerifyResult v = verify(f, 64);
        std::string tag = "macbeath-ngon n=" + std::to_string(n);
        const InvariantReport* c0 = find_report(v, "centroid-drift-c0");
        const InvariantReport* c2 = find_report(v, "centroid-drift-c2");
        c.require(c0 && c0->maxAbsDeviation < 1e-6, tag + " C0 drift");
        c.require(c2 && c2->maxAbsDeviation < 1e-6, tag + " C2 drift");
        const InvariantReport* ax0 = find_report(v, "c0-on-caustic-axis");
        const InvariantReport* ax2 = find_report(v, "c2-on-caustic-axis");
        c.require(ax0 && ax0->pass, tag + " C0 not on caustic axis");
        c.require(ax2 && ax2->pass, tag + " C2 not on caustic axis");
        if (n == 4 && c0 && c0->meanPoint)
            c.require(dist(*c0->meanPoint, {0.2, 0}) < 1e-6, "n=4 C0 not at caustic center");

        // experimental sub-claim (reported, never gating): C1 locus is a conic
        LocusResult l1 = locus(f, CenterId::C1(), 64);
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "%s C1 ellipse-fit residual %.3g (experimental sub-claim < 1e-6: %s)",
                      tag.c_str(), l1.algebraicResidual,
                      l1.algebraicResidual < 1e-6 ? "holds" : "fails, reported");
        c.note(buf);
    }
}

void criterion11(Ctx& c) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto rand_tri = [&] {
        for (;;) {
            Triangle t{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
            if (std::abs(t.signed_area()) < 0.05) continue;
            TriangleMetrics m = metrics(t);
            if (std::min({m.theta1, m.theta2, m.theta3}) > 0.15) return t;
        }
    };
    ConicMatrix ell = matrix_of(AxisEllipse({0.2, -0.1}, 1.6, 0.9));
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
        Triangle t = rand_tri();
        TriangleMetrics m = metrics(t);
        Point2 x1 = center(t, CenterId::X(1)), x2 = center(t, CenterId::X(2));
        Point2 x3 = center(t, CenterId::X(3)), x4 = center(t, CenterId::X(4));
        Point2 x8 = center(t, CenterId::X(8)), x10 = center(t, CenterId::X(10));
        Point2 x20 = center(t, CenterId::X(20));
        double sumSq = m.l1 * m.l1 + m.l2 * m.l2 + m.l3 * m.l3;
        double oh = dist(x3, x4);
        bool pass = std::abs(m.area - m.r * m.s) < 1e-10 * m.area &&
                    std::abs(m.l1 * m.l2 * m.l3 - 4 * m.R * m.area) < 1e-10 * m.l1 * m.l2 * m.l3 &&
                    std::abs(dist(x1, x8) - 3 * dist(x1, x2)) < 1e-9 &&
                    std::abs(dist(x3, x2) - dist(x3, x4) / 3) < 1e-9 &&
                    dist(x10, 0.5 * (x1 + x8)) < 1e-10 && dist(x20, 2 * x3 - x4) < 1e-10 &&
                    std::abs(sumSq - (9 * m.R * m.R - oh * oh)) < 1e-8 * sumSq;

        // pole-polar round trip and isogonal involution
        Point2 p{u(rng), u(rng)};
        pass = pass && dist(pole(polar_line(p, ell), ell), p) < 1e-10;
        Point2 q = barycentric_point(t, {0.25, 0.35, 0.4});
        pass = pass && dist(isogonal_conjugate(t, isogonal_conjugate(t, q)), q) < 1e-9 &&
               dist(isogonal_conjugate(t, x3), x4) < 1e-9;
        if (!pass) ++bad;
    }
    c.require(bad == 0, std::to_string(bad) + "/100 random triangles failed the identity suite");

    // negative control: perturbed caustics must fail the porism gate
    for (double eps : {1e-3, 1e-5}) {
        FamilySpec f = focal_x1(2, 1);
        GeneralEllipse g = classify(f.pair.caustic);
        g.semiMajor *= 1.0 + eps;
        g.semiMinor *= 1.0 + eps;
        f.pair.caustic = matrix_of(g);
        VerifyResult v = verify(f, 16);
        c.require(!v.porismPass, "perturbed caustic (eps=" + std::to_string(eps) +
                                     ") passed the porism gate");
    }
}

void criterion12(Ctx& c) {
    json scan = probe_x4_stationary(30, 2024);
    c.require(scan.contains("porismsTested") && scan.contains("counterexamples"),
              "x4 scan findings incomplete");
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "x4 scan: %d/%d porisms tested, %d stationary, %d matching known, %zu counterexamples",
                  int(scan["porismsTested"]), int(scan["trials"]),
                  int(scan["stationaryX4Found"]), int(scan["matchingKnownConfigurations"]),
                  scan["counterexamples"].size());
    c.note(buf);

    json polar = probe_polar_half_angle_sums(chapple(2, 0.9).pair, 3, 64);
    c.require(polar.contains("tanHalfSum") && polar.contains("sinHalfSum"),
              "polar probe findings incomplete");
    std::snprintf(buf, sizeof buf,
                  "polar probe on chapple(2,0.9): sin-half-sum mean %.8f (maxdev %.2g), "
                  "tan-half-sum maxdev %.2g",
                  double(polar["sinHalfSum"]["mean"]),
                  double(polar["sinHalfSum"]["maxAbsDeviation"]),
                  double(polar["tanHalfSum"]["maxAbsDeviation"]));
    c.note(buf);
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<void(Ctx&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "porism gate for all nine family constructors", criterion1},
        {2, "focal-x1 conserved values", criterion2},
        {3, "iso-x2 stationary centers and |X1X2|^2", criterion3},
        {4, "focal-x4 values and X3/X20 loci", criterion4},
        {5, "iso-x7 values", criterion5},
        {6, "macbeath values and X2 on the inconic axis", criterion6},
        {7, "dual values and X3 homothety", criterion7},
        {8, "polar-image identities (chapple X1, brocard X7)", criterion8},
        {9, "affine-macbeath closure and X2 pin", criterion9},
        {10, "macbeath n-gon centroids (n=4,5)", criterion10},
        {11, "property suites and negative controls", criterion11},
        {12, "conjecture probes run to completion", criterion12},
    };

    int failures = 0;
    for (const auto& cr : criteria) {
        Ctx ctx;
        try {
            cr.run(ctx);
        } catch (const std::exception& e) {
            ctx.ok = false;
            ctx.notes.push_back(std::string("exception: ") + e.what());
        }
        std::printf("[criterion %2d] %s: %s\n", cr.id, ctx.ok ? "pass" : "FAIL", cr.title);
        for (const auto& n : ctx.notes) std::printf("               - %s\n", n.c_str());
        if (!ctx.ok) ++failures;
    }
    if (failures) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    else std::printf("all %zu criteria passed\n", criteria.size());
    return failures == 0 ? 0 : 1;
}
