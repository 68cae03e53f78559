#pragma once

#include <json.hpp>
#include <optional>
#include <vector>

#include "mwc/mwc_set.hpp"
#include "mwc/report.hpp"

namespace mwc {

// A voting system as exchanged on the CLI boundary: voters plus either the
// minimal-winning-coalition lists (by voter name) or weights and a quota.
// Numbers may be JSON integers or "p/q" strings; JSON floats are rejected so
// no value ever passes through floating point.
struct WeightedSpec {
  std::vector<Rational> weights;
  Rational quota;
};

struct SystemDocument {
  VoterSet voters;
  std::optional<std::vector<Coalition>> mwc;  // candidates, unvalidated
  std::optional<WeightedSpec> weighted;
};

// Throws ValidationError (BadDocument, UnknownVoter, BadNumber, ...) on any
// shape problem. Unknown keys are ignored.
SystemDocument parse_system_document(const nlohmann::json& doc);

// Validates an MWC document or derives the MWC-set of a weighted one. May
// throw ValidationError or, for weighted documents beyond the derivation cap,
// ResourceLimitError.
MwcSet system_from_document(const SystemDocument& doc);

// {"voters": [...names], "mwc": [[...names]]}; parses back to the same system.
nlohmann::json system_to_json(const MwcSet& system);

// The system plus every index column, fractions as "p/q" strings and scores
// as decimal strings.
nlohmann::json report_to_json(const MwcSet& system, const PowerReport& report);

// Compact per-system record for atlas dumps: coalitions as voter indices.
nlohmann::json atlas_record_to_json(const MwcSet& system, const PowerReport& report);

}  // namespace mwc
