#include "json_io.hpp"

#include <nlohmann/json.hpp>

#include <clonedl/error.hpp>

namespace clonedl::cli {

using nlohmann::json;

namespace {

json properties_json(const FunSignature& s) {
  return {
      {"reproducing0", s.reproducing0}, {"reproducing1", s.reproducing1},
      {"monotone", s.monotone},         {"self_dual", s.self_dual},
      {"linear", s.linear},             {"separating0", s.separating0},
      {"separating1", s.separating1},   {"depends_on", s.depends_on},
      {"is_projection", s.is_projection}, {"is_constant", s.is_constant},
      {"is_and_shape", s.is_and_shape}, {"is_or_shape", s.is_or_shape},
  };
}

template <typename E, std::size_t N>
E enum_from(const json& j, const char* field, const E (&values)[N]) {
  if (!j.is_string()) {
    throw Error(ErrorKind::SyntaxError, std::string("'") + field + "' must be a string");
  }
  const auto s = j.get<std::string>();
  for (auto v : values) {
    if (to_string(v) == s) {
      return v;
    }
  }
  throw Error(ErrorKind::SyntaxError, std::string("bad '") + field + "' value '" + s + "'");
}

constexpr Problem kProblems[] = {Problem::Ext, Problem::Cred, Problem::Skep};
constexpr EngineKind kEngines[] = {
    EngineKind::Generic,      EngineKind::MonotoneIterative, EngineKind::R1Unique,
    EngineKind::AffineGuess,  EngineKind::PolyFragment,      EngineKind::Reachability,
    EngineKind::TrivialYes};
constexpr ComplexityCase kCases[] = {
    ComplexityCase::SigmaP2, ComplexityCase::PiP2, ComplexityCase::DeltaP2,
    ComplexityCase::NP,      ComplexityCase::CoNP, ComplexityCase::P,
    ComplexityCase::NL,      ComplexityCase::Trivial};

}  // namespace

std::string report_to_json(const CloneReport& r) {
  json props = json::object();
  for (const auto& [name, sig] : r.properties) {
    props[name] = properties_json(sig);
  }
  json subset = json::object();
  for (const auto& [c, v] : r.subset) {
    subset[std::string(to_string(c))] = v;
  }
  json contains = json::object();
  for (const auto& [c, v] : r.contains) {
    contains[std::string(to_string(c))] = v;
  }
  json out = {
      {"properties", props},
      {"subset", subset},
      {"contains", contains},
      {"cases",
       {{"ext", to_string(r.ext_case)},
        {"cred", to_string(r.cred_case)},
        {"skep", to_string(r.skep_case)}}},
      {"engines",
       {{"ext", to_string(r.ext_engine)},
        {"cred", to_string(r.cred_engine)},
        {"skep", to_string(r.skep_engine)}}},
  };
  return out.dump(2);
}

std::string decision_to_json(const Decision& d) {
  json out = {
      {"problem", to_string(d.problem)},
      {"answer", d.answer ? "yes" : "no"},
      {"engine", to_string(d.engine)},
      {"case", d.complexity ? json(to_string(*d.complexity)) : json(nullptr)},
      {"witness", d.witness ? json(d.witness->generating) : json(nullptr)},
      {"stats",
       {{"subsets_checked", d.stats.subsets_checked},
        {"implication_calls", d.stats.implication_calls}}},
  };
  return out.dump(2);
}

Decision decision_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::SyntaxError, e.what());
  }
  static const char* const kKeys[] = {"problem", "answer", "engine", "case", "witness", "stats"};
  if (!j.is_object() || j.size() != std::size(kKeys)) {
    throw Error(ErrorKind::SyntaxError, "decision must be an object with 6 fields");
  }
  for (const char* key : kKeys) {
    if (!j.contains(key)) {
      throw Error(ErrorKind::SyntaxError, std::string("missing '") + key + "'");
    }
  }
  Decision d;
  d.problem = enum_from(j["problem"], "problem", kProblems);
  const auto& answer = j["answer"];
  if (answer != "yes" && answer != "no") {
    throw Error(ErrorKind::SyntaxError, "'answer' must be \"yes\" or \"no\"");
  }
  d.answer = answer == "yes";
  d.engine = enum_from(j["engine"], "engine", kEngines);
  if (!j["case"].is_null()) {
    d.complexity = enum_from(j["case"], "case", kCases);
  }
  if (!j["witness"].is_null()) {
    try {
      d.witness = ExtensionWitness{j["witness"].get<std::vector<std::size_t>>(), false};
    } catch (const json::exception& e) {
      throw Error(ErrorKind::SyntaxError, std::string("'witness': ") + e.what());
    }
  }
  const auto& stats = j["stats"];
  try {
    d.stats.subsets_checked = stats.at("subsets_checked").get<std::size_t>();
    d.stats.implication_calls = stats.at("implication_calls").get<std::size_t>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::SyntaxError, std::string("'stats': ") + e.what());
  }
  return d;
}

}  // namespace clonedl::cli
