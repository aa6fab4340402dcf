#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pgv/config.hpp"
#include "pgv/families.hpp"
#include "pgv/integer.hpp"

namespace pgv {

using Json = nlohmann::ordered_json;

// Orders that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json to_json(const Integer& n);

struct Claim {
  std::string name;
  Json expected;
  Json computed;
  bool pass = false;
};

struct VerificationReport {
  FamilySpec spec;
  RunConfig config;
  std::vector<Claim> claims;
  std::vector<std::string> budget_notes;  // stages skipped for a budget
  Json observations = Json::object();      // computed facts with no expected value
  std::optional<Json> timings;             // stage -> milliseconds, only when requested

  bool all_pass() const;
  const Claim* find(const std::string& name) const;
  Json to_json() const;
};

// Runs every check for one family. A stage that hits a budget is recorded in
// budget_notes and skipped; any other exception fails that stage's claim.
// Earlier claims are never discarded. Throws std::invalid_argument for an
// invalid spec or config.
VerificationReport verify_family(const FamilySpec& spec, const RunConfig& config);

}  // namespace pgv
