#include "mwc/json_io.hpp"

#include "mwc/errors.hpp"
#include "mwc/game_ops.hpp"

namespace mwc {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& msg) {
  throw ValidationError(ValidationKind::BadDocument, msg);
}

Rational parse_number(const json& j, const char* what) {
  if (j.is_number_unsigned()) {
    return Rational(BigInt(static_cast<unsigned long>(j.get<std::uint64_t>())));
  }
  if (j.is_number_integer()) {
    return Rational(BigInt(static_cast<long>(j.get<std::int64_t>())));
  }
  if (j.is_string()) {
    return Rational::parse(j.get<std::string>());
  }
  if (j.is_number()) {
    throw ValidationError(ValidationKind::BadNumber,
                          std::string(what) +
                              " must be an integer or a \"p/q\" string, not a float");
  }
  bad(std::string(what) + " must be an integer or a \"p/q\" string");
}

Coalition parse_coalition(const json& j, const VoterSet& voters) {
  if (!j.is_array()) bad("each coalition must be an array of voter names");
  Coalition c;
  for (const auto& name : j) {
    if (!name.is_string()) bad("coalition members must be voter names (strings)");
    const auto idx = voters.index_of(name.get<std::string>());
    if (!idx) {
      throw ValidationError(ValidationKind::UnknownVoter,
                            "coalition member \"" + name.get<std::string>() +
                                "\" is not in the voter list");
    }
    c = c.with(*idx);
  }
  return c;
}

}  // namespace

SystemDocument parse_system_document(const json& doc) {
  if (!doc.is_object()) bad("system document must be a JSON object");
  if (!doc.contains("voters") || !doc["voters"].is_array()) {
    bad("system document needs a \"voters\" array");
  }
  std::vector<std::string> names;
  for (const auto& v : doc["voters"]) {
    if (!v.is_string()) bad("voter names must be strings");
    names.push_back(v.get<std::string>());
  }
  VoterSet voters(std::move(names));

  const bool has_mwc = doc.contains("mwc");
  const bool has_weights = doc.contains("weights") || doc.contains("quota");
  if (has_mwc == has_weights) {
    bad("system document needs exactly one of \"mwc\" or \"weights\"+\"quota\"");
  }

  SystemDocument out{std::move(voters), std::nullopt, std::nullopt};
  if (has_mwc) {
    if (!doc["mwc"].is_array()) bad("\"mwc\" must be an array of coalitions");
    std::vector<Coalition> candidates;
    for (const auto& coalition : doc["mwc"]) {
      candidates.push_back(parse_coalition(coalition, out.voters));
    }
    out.mwc = std::move(candidates);
  } else {
    if (!doc.contains("weights") || !doc.contains("quota")) {
      bad("weighted documents need both \"weights\" and \"quota\"");
    }
    if (!doc["weights"].is_array()) bad("\"weights\" must be an array");
    WeightedSpec spec;
    for (const auto& w : doc["weights"]) spec.weights.push_back(parse_number(w, "weight"));
    spec.quota = parse_number(doc["quota"], "quota");
    out.weighted = std::move(spec);
  }
  return out;
}

MwcSet system_from_document(const SystemDocument& doc) {
  if (doc.mwc) {
    return validate_mwc_set(doc.voters, *doc.mwc);
  }
  return derive_mwc(WeightedGame(doc.voters, doc.weighted->weights, doc.weighted->quota));
}

json system_to_json(const MwcSet& system) {
  json j;
  j["voters"] = system.voters().names();
  json mwc = json::array();
  for (Coalition v : system.members()) {
    json names = json::array();
    for_each_voter(v, [&](int w) { names.push_back(system.voters().name(w)); });
    mwc.push_back(std::move(names));
  }
  j["mwc"] = std::move(mwc);
  return j;
}

namespace {

json rationals_to_json(const std::vector<Rational>& values) {
  json arr = json::array();
  for (const Rational& v : values) arr.push_back(v.str());
  return arr;
}

json scores_to_json(const std::vector<BigInt>& values) {
  json arr = json::array();
  for (const BigInt& v : values) arr.push_back(v.get_str());
  return arr;
}

}  // namespace

json report_to_json(const MwcSet& system, const PowerReport& report) {
  json j = system_to_json(system);
  j["bs"] = scores_to_json(report.bs);
  j["pbp"] = rationals_to_json(report.pbp);
  j["pbi"] = rationals_to_json(report.pbi);
  j["ssi"] = rationals_to_json(report.ssi);
  j["dp"] = rationals_to_json(report.dp);
  j["hp"] = rationals_to_json(report.hp);
  return j;
}

json atlas_record_to_json(const MwcSet& system, const PowerReport& report) {
  json mwc = json::array();
  for (Coalition v : system.members()) {
    json indices = json::array();
    for_each_voter(v, [&](int w) { indices.push_back(w); });
    mwc.push_back(std::move(indices));
  }
  json j;
  j["mwc"] = std::move(mwc);
  j["bs"] = scores_to_json(report.bs);
  j["pbp"] = rationals_to_json(report.pbp);
  j["pbi"] = rationals_to_json(report.pbi);
  j["ssi"] = rationals_to_json(report.ssi);
  j["dp"] = rationals_to_json(report.dp);
  j["hp"] = rationals_to_json(report.hp);
  return j;
}

}  // namespace mwc
