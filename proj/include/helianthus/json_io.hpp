#pragma once

#include "helianthus/eval.hpp"
#include "helianthus/families.hpp"
#include "helianthus/interval.hpp"
#include "helianthus/process.hpp"
#include "helianthus/recursion.hpp"
#include "helianthus/regular.hpp"
#include "helianthus/sunflower.hpp"

#include <json.hpp>

#include <string>

namespace helianthus::io {

using json = nlohmann::json;

// Families.
//   {"universe": n, "sets": [[i, ...], ...]}
//   {"universe": n, "sets": [...], "weights": ["p/q", ...]}
// Loaders throw InputError on out-of-range or non-ascending indices,
// duplicate sets, and any malformed field.

[[nodiscard]] json to_json(const core::SetSystem& family);
[[nodiscard]] core::SetSystem set_system_from_json(const json& j);
[[nodiscard]] json to_json(const regular::WeightedFamily& d);
[[nodiscard]] regular::WeightedFamily weighted_from_json(const json& j);

/// Generator specs, selected by "kind":
///   block {w, kappa}, intersecting_block {w, t}, complete_uniform {w, n},
///   subspace {p, generator, [n]}, random {n, w, m, seed, [nonredundant]}.
[[nodiscard]] core::SetSystem family_from_spec(const json& spec);
[[nodiscard]] families::SubspaceSpec subspace_from_json(const json& j);

/// Parses a file; InputError if it cannot be read or is not JSON.
[[nodiscard]] json read_json_file(const std::string& path);
/// Writes text (plus a trailing newline) to path; "-" means stdout.
void write_text(const std::string& path, const std::string& text);
/// Two-space indented dump; keys are sorted, so output is deterministic.
[[nodiscard]] std::string dump(const json& j);

[[nodiscard]] json to_json(const Interval& x);
[[nodiscard]] json to_json(const regular::RegularityCertificate& cert);
[[nodiscard]] json to_json(const regular::RegularityBracket& bracket);
[[nodiscard]] json to_json(const eval::ApproxSunflowerCheck& check);
[[nodiscard]] json to_json(const eval::MonteCarloEstimate& estimate);
[[nodiscard]] json to_json(const sunflower::SunflowerCertificate& cert, const core::SetSystem& family);
[[nodiscard]] json to_json(const sunflower::ExtractionReport& report, const core::SetSystem& family);
[[nodiscard]] json to_json(const process::ProcessTrace& trace);
[[nodiscard]] json to_json(const process::StarSystem& star);
[[nodiscard]] json to_json(const process::StarOutcome& outcome);
[[nodiscard]] json to_json(const eval::RecursionTrace& trace);
[[nodiscard]] json to_json(const eval::TauReport& report);
[[nodiscard]] json to_json(const eval::Kappa0Report& report);

}  // namespace helianthus::io
