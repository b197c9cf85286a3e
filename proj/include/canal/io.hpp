#ifndef CANAL_IO_HPP
#define CANAL_IO_HPP

#include <json.hpp>

#include <optional>
#include <string>

#include "canal/blend.hpp"
#include "canal/dupin.hpp"

namespace canal::io {

// Malformed input documents; the CLI maps this to exit code 2 (kernel
// precondition failures map to 3).
struct SpecError : std::runtime_error {
    explicit SpecError(const std::string& msg) : std::runtime_error(msg) {}
};

struct SurfaceSpec {
    enum class Kind { Canal, Dupin, Blend } kind;
    CanalSurface surface1;                // canal / dupin pair1 / blend side 1
    std::optional<CanalSurface> surface2; // dupin pair2 / blend side 2
    Rat t1, t2;                           // blend junction parameters
    int continuity = 1;
    std::optional<Isometry> symmetry;     // blend: prescribed isometry
};

using nlohmann::json;

// Exact (de)serialization: rationals as "p/q" strings, polynomials as
// ascending coefficient arrays, curves as three {num, den} pairs.
json rat_json(const Rat& q);
Rat parse_rat(const json& j, const std::string& field);
json unipoly_json(const UniPoly& p);
UniPoly parse_unipoly(const json& j, const std::string& field);
json ratfunc_json(const RatFunc& f);
RatFunc parse_ratfunc(const json& j, const std::string& field);
json isometry_json(const Isometry& f);
Isometry parse_isometry(const json& j, const std::string& field);
json moebius_json(const Moebius& m);
Moebius parse_moebius(const json& j, const std::string& field);

SurfaceSpec parse_spec(const json& j);
SurfaceSpec load_spec_file(const std::string& path);

json symmetry_report_json(const SymmetryReport& rep);
json dupin_report_json(const DupinCyclide& d, bool super, const SymmetryReport& rep);
json blend_json(const BlendResult& blend, int continuity);
json regularity_json(const RegularityReport& rep);

// Re-reads the symmetry list of a report produced by symmetry_report_json.
struct ParsedSymmetry {
    Isometry f;
    Moebius phi;
    std::optional<Moebius> phi2;
};
std::vector<ParsedSymmetry> parse_symmetry_report(const json& j);

} // namespace canal::io

#endif
