#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

#include "poncelet/report.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace poncelet;

namespace {

struct FamilyOptions {
    std::string family;
    double a = 2.0, b = 1.0;
    double R = 2.0, r = 0.9;
    double ocx = 0.0, ocy = 0.0;
    int n = 3;
    double perturb = 0.0;
    std::vector<double> seedTriangle;  // ax ay bx by cx cy
};

void add_family_flags(CLI::App* cmd, FamilyOptions& opt) {
    cmd->add_option("--family", opt.family,
                    "family kind: focal-x1, iso-x2, focal-x4, iso-x7, macbeath, dual, "
                    "chapple, brocard, affine-macbeath, macbeath-ngon")
        ->required();
    cmd->add_option("--a", opt.a, "outer (or inconic) semi-axis a");
    cmd->add_option("--b", opt.b, "outer (or inconic) semi-axis b");
    cmd->add_option("--R", opt.R, "circumcircle radius (chapple, macbeath-ngon)");
    cmd->add_option("--r", opt.r, "incircle radius (chapple)");
    cmd->add_option("--oc-x", opt.ocx, "caustic-center x (affine-macbeath, macbeath-ngon)");
    cmd->add_option("--oc-y", opt.ocy, "caustic-center y (affine-macbeath, macbeath-ngon)");
    cmd->add_option("--n", opt.n, "polygon order (macbeath-ngon)");
    cmd->add_option("--perturb", opt.perturb, "relative caustic perturbation (negative control)");
    cmd->add_option("--seed-triangle", opt.seedTriangle,
                    "brocard seed triangle: ax ay bx by cx cy")
        ->expected(6);
}

FamilySpec build_family(const FamilyOptions& opt) {
    FamilySpec spec;
    if (opt.family == "focal-x1") spec = focal_x1(opt.a, opt.b);
    else if (opt.family == "iso-x2") spec = iso_x2(opt.a, opt.b);
    else if (opt.family == "focal-x4") spec = focal_x4(opt.a, opt.b);
    else if (opt.family == "iso-x7") spec = iso_x7(opt.a, opt.b);
    else if (opt.family == "macbeath") spec = macbeath(opt.a, opt.b);
    else if (opt.family == "dual") spec = dual(opt.a, opt.b);
    else if (opt.family == "chapple") spec = chapple(opt.R, opt.r);
    else if (opt.family == "affine-macbeath")
        spec = affine_macbeath(opt.a, opt.b, Point2{opt.ocx, opt.ocy});
    else if (opt.family == "macbeath-ngon")
        spec = macbeath_ngon(opt.R, Point2{opt.ocx, opt.ocy}, opt.n);
    else if (opt.family == "brocard") {
        Triangle seed{{0, 0}, {3, 0}, {0, 4}};
        if (opt.seedTriangle.size() == 6)
            seed = Triangle{{opt.seedTriangle[0], opt.seedTriangle[1]},
                            {opt.seedTriangle[2], opt.seedTriangle[3]},
                            {opt.seedTriangle[4], opt.seedTriangle[5]}};
        spec = brocard(seed);
    } else
        throw InvalidShape("unknown family '" + opt.family + "'");

    if (opt.perturb != 0.0) {
        GeneralEllipse k = classify(spec.pair.caustic);
        k.semiMajor *= 1.0 + opt.perturb;
        k.semiMinor *= 1.0 + opt.perturb;
        spec.pair.caustic = matrix_of(k);
    }
    return spec;
}

json config_json(const FamilyOptions& opt, int samples, double tol) {
    return json{{"family", opt.family}, {"a", opt.a},     {"b", opt.b},
                {"R", opt.R},           {"r", opt.r},     {"ocX", opt.ocx},
                {"ocY", opt.ocy},       {"n", opt.n},     {"perturb", opt.perturb},
                {"samples", samples},   {"tolerance", tol}};
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    f << content;
    if (!f) throw std::runtime_error("cannot write " + path.string());
    std::cout << "wrote " << path.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Poncelet families: numeric verification of stationary centers, "
                 "conserved quantities, and center loci"};
    app.require_subcommand(1);

    FamilyOptions opt;
    int samples = 64;
    double tolerance = 1e-8;
    std::string outDir = ".";
    std::vector<std::string> formats = {"json"};
    int centerK = 3;
    std::string probeKind = "x4-stationary-scan";
    std::string pairFile;
    int trials = 1000;
    unsigned long long seed = 1;

    auto* vcmd = app.add_subcommand("verify", "verify family invariants and stationary centers");
    add_family_flags(vcmd, opt);
    vcmd->add_option("--samples", samples)->check(CLI::Range(8, 100000));
    vcmd->add_option("--tolerance", tolerance);
    vcmd->add_option("--out-dir", outDir);
    vcmd->add_option("--format", formats, "json, csv, svg")->delimiter(',');

    auto* lcmd = app.add_subcommand("locus", "sample and fit the locus of a triangle center");
    add_family_flags(lcmd, opt);
    lcmd->add_option("--center", centerK, "Kimberling index, or -1/-2/-3 for C0/C1/C2");
    lcmd->add_option("--samples", samples)->check(CLI::Range(12, 100000));
    lcmd->add_option("--out-dir", outDir);
    lcmd->add_option("--format", formats, "json, svg")->delimiter(',');

    auto* pcmd = app.add_subcommand("probe", "run a conjecture probe (report-only)");
    pcmd->add_option("--probe", probeKind, "x4-stationary-scan or polar-tan-half-sum");
    pcmd->add_option("--pairs", pairFile, "conic-pair JSON file (polar-tan-half-sum)");
    pcmd->add_option("--trials", trials);
    pcmd->add_option("--seed", seed);
    pcmd->add_option("--samples", samples);
    pcmd->add_option("--out-dir", outDir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        fs::create_directories(outDir);
        std::set<std::string> fmt(formats.begin(), formats.end());

        if (vcmd->parsed()) {
            FamilySpec spec = build_family(opt);
            VerifyResult res = verify(spec, samples, tolerance);
            for (const auto& r : res.reports)
                std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.id << "  maxdev="
                          << r.maxAbsDeviation << "\n";
            std::cout << (res.porismPass ? "pass" : "FAIL")
                      << "  porism-certification  defect=" << res.porismDefect << "\n";

            json out = to_json(res);
            out["config"] = config_json(opt, samples, tolerance);
            out["family"] = kind_name(spec.kind);
            if (fmt.count("json")) write_file(fs::path(outDir) / "report.json", out.dump(2) + "\n");
            if (fmt.count("csv")) write_file(fs::path(outDir) / "report.csv", to_csv(res.reports));
            if (fmt.count("svg")) {
                auto fam = sample_family(spec.pair, spec.n, std::min(samples, 16));
                write_file(fs::path(outDir) / "family.svg", render_svg(spec, fam));
            }
            return res.all_pass() ? 0 : 1;
        }

        if (lcmd->parsed()) {
            FamilySpec spec = build_family(opt);
            LocusResult res = locus(spec, CenterId{centerK}, samples);
            json out{{"config", config_json(opt, samples, tolerance)},
                     {"family", kind_name(spec.kind)},
                     {"locus", to_json(res)}};
            if (spec.kind == FamilyKind::FocalX4 && centerK == 20 && res.fitted) {
                LocusResult l3 = locus(spec, CenterId{3}, samples);
                if (l3.fitted)
                    out["axisRatioToX3Locus"] = res.fitted->semiMajor / l3.fitted->semiMajor;
            }
            std::cout << "locus X" << centerK
                      << (res.degeneratePoint ? ": degenerate point" : ": fitted ellipse")
                      << "\n";
            if (fmt.count("json")) write_file(fs::path(outDir) / "locus.json", out.dump(2) + "\n");
            if (fmt.count("svg")) {
                auto fam = sample_family(spec.pair, spec.n, std::min(samples, 16));
                std::vector<Point2> markers;
                if (spec.kind == FamilyKind::FocalX4) markers.push_back(spec.pair.outer.center);
                write_file(fs::path(outDir) / "locus.svg",
                           render_svg(spec, fam, &res, markers));
            }
            return 0;
        }

        if (pcmd->parsed()) {
            json out;
            if (probeKind == "x4-stationary-scan") {
                out = probe_x4_stationary(trials, seed);
            } else if (probeKind == "polar-tan-half-sum") {
                if (pairFile.empty()) throw std::runtime_error("--pairs file required");
                std::ifstream f(pairFile);
                if (!f) throw std::runtime_error("cannot read " + pairFile);
                json in = json::parse(f);
                auto [pair, n] = parse_conic_pair(in);
                out = probe_polar_half_angle_sums(pair, n, std::max(samples, 8));
            } else
                throw std::runtime_error("unknown probe '" + probeKind + "'");
            std::cout << out.dump(2) << "\n";
            write_file(fs::path(outDir) / "probe.json", out.dump(2) + "\n");
            return 0;
        }
    } catch (const NotAPorism& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const GeometryError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
