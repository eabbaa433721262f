#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "degen/bcov/bcov.hpp"
#include "degen/hodgemetrics/torus.hpp"
#include "degen/monodromy/monodromy.hpp"
#include "degen/periods/periods.hpp"

namespace degen::io {

using Json = nlohmann::ordered_json;
using exactalg::Rational;
using exactalg::RationalMatrix;

inline constexpr const char* kVersion = "degen/v1";

// Exact values are strings "p/q"; plain JSON integers are accepted on input.
Json to_json(const Rational& x);
Rational rational_from_json(const Json& j, const std::string& path);
Json to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j, const std::string& path);

Json to_json(const strata::GeneralFiberData& f);
strata::GeneralFiberData fiber_from_json(const Json& j, const std::string& path = "/fiber");

// strata is an object keyed by k, each value a record or a list of
// per-component records that are summed.
Json to_json(const strata::SpecialFiberModel& m);
strata::SpecialFiberModel model_from_json(const Json& j, long n, const std::string& path = "/special_fiber");

Json to_json(const lmhs::LimitingMHS& mhs);

// Looks up named presets as <dir>/<name>.json.
struct PresetResolver {
  std::optional<std::filesystem::path> dir;
  // --presets-dir, then $BCOV_PRESETS, then the bundled data/presets.
  static PresetResolver from(const std::optional<std::string>& flag);
};

// Builtin presets: {"preset": "odp", "count": s, "hodge": diamond?},
// {"preset": "nodal_elliptic"}, {"preset": "pure", "hodge": diamond};
// any other preset name is read from the resolver. Otherwise an explicit
// {"degrees": [{k, table: [[p, w, dim]...], betti?, rotations: {p: [...]}}]}.
lmhs::LimitingMHS mhs_from_json(const Json& j, long n, const PresetResolver& presets,
                                const std::string& path = "/mhs");

Json to_json(const bcov::FamilyContext& c);
bcov::FamilyContext family_from_json(const Json& j, const std::string& path = "/options/family");

struct Descriptor {
  strata::GeneralFiberData fiber;
  strata::SpecialFiberModel model;
  std::optional<lmhs::LimitingMHS> mhs;
  Json mhs_source;  // canonical form of the input mhs field (preset references kept)
  bcov::FamilyContext family;
};

// Validates the version tag, every field and the model/fiber invariants.
Descriptor parse_descriptor(const Json& j, const PresetResolver& presets);
Json serialize(const Descriptor& d);

struct CrossCheck {
  std::string name;
  Rational expected, actual;
  bool pass = true;
};

struct Analysis {
  bcov::SpecializationReport report;
  std::optional<bcov::KappaBreakdown> breakdown;
  std::vector<CrossCheck> cross_checks;
  bool consistent() const;
};

// Runs every applicable formula and cross-checks all kappa values against
// kappa_general (or the first kappa formula that applies) and rho_odp
// against rho. Formula-level inconsistencies become failed cross-checks.
Analysis analyze(const Descriptor& d);
Json to_json(const Analysis& a, const Descriptor& d);

hodgemetrics::TorusDescriptor torus_from_json(const Json& j);
Json to_json(const hodgemetrics::CovolumeReport& r);

Json to_json(const periods::FitResult& f, const std::string& model);

// Reads and parses a JSON file; ValidationError at "" on syntax errors.
Json read_json_file(const std::filesystem::path& p);

}  // namespace degen::io
