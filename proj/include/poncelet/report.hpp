#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "poncelet/loci.hpp"

namespace poncelet {

nlohmann::json to_json(const InvariantReport& r);
nlohmann::json to_json(const VerifyResult& r);
nlohmann::json to_json(const LocusResult& r);
nlohmann::json to_json(const GeneralEllipse& e);

std::string to_csv(const std::vector<InvariantReport>& reports);

/// Deterministic SVG of the configuration with optional samples and locus overlay.
std::string render_svg(const FamilySpec& spec, const std::vector<PolygonSample>& samples,
                       const LocusResult* locusOverlay = nullptr,
                       const std::vector<Point2>& markers = {});

/// Scan randomized circular-caustic porisms for stationary orthocenters that do
/// not match the known focal configuration.
nlohmann::json probe_x4_stationary(int trials, unsigned long long seed);

/// Chase a supplied porism, take the polar image with respect to the outer
/// conic, and report how well its half-angle sums are conserved.
nlohmann::json probe_polar_half_angle_sums(const ConicPair& pair, int n, int count = 64);

/// Parse a conic-pair JSON file (axis-ellipse parameters or six conic coefficients).
std::pair<ConicPair, int> parse_conic_pair(const nlohmann::json& j);

}  // namespace poncelet
