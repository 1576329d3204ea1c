#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "ptn/audit.hpp"
#include "ptn/constructions.hpp"
#include "ptn/search.hpp"

using nlohmann::json;
using namespace ptn;

namespace {

json load(const std::string& rel) {
  std::ifstream in(std::string(PTN_SOURCE_DIR) + "/" + rel);
  REQUIRE(in.good());
  return json::parse(in);
}

// validator for the subset of JSON Schema the shipped schemas use: type,
// properties, required, items, enum, additionalProperties:false
bool validate(const json& schema, const json& inst, std::string& why, const std::string& at = "$") {
  if (schema.contains("enum")) {
    for (const auto& v : schema["enum"])
      if (v == inst) return true;
    why = at + ": value not in enum";
    return false;
  }
  if (schema.contains("type")) {
    const std::string t = schema["type"];
    bool ok = (t == "object" && inst.is_object()) || (t == "array" && inst.is_array()) ||
              (t == "string" && inst.is_string()) || (t == "boolean" && inst.is_boolean()) ||
              (t == "integer" && inst.is_number_integer()) || (t == "number" && inst.is_number());
    if (!ok) {
      why = at + ": expected " + t;
      return false;
    }
  }
  if (inst.is_object()) {
    const json props = schema.value("properties", json::object());
    for (const auto& req : schema.value("required", json::array())) {
      if (!inst.contains(req.get<std::string>())) {
        why = at + ": missing required key " + req.get<std::string>();
        return false;
      }
    }
    for (auto it = inst.begin(); it != inst.end(); ++it) {
      if (props.contains(it.key())) {
        if (!validate(props[it.key()], it.value(), why, at + "." + it.key())) return false;
      } else if (schema.value("additionalProperties", json(true)) == json(false)) {
        why = at + ": unexpected key " + it.key();
        return false;
      }
    }
  }
  if (inst.is_array() && schema.contains("items")) {
    for (size_t i = 0; i < inst.size(); ++i)
      if (!validate(schema["items"], inst[i], why, at + "[" + std::to_string(i) + "]")) return false;
  }
  return true;
}

void expect_valid(const json& schema, const json& inst) {
  std::string why;
  bool ok = validate(schema, inst, why);
  CAPTURE(why);
  CHECK(ok);
}

}  // namespace

TEST_SUITE("schemas") {
  TEST_CASE("extremal search results match their schema") {
    json schema = load("docs/schema/extremal_result.schema.json");
    ExtremalResult r = ex_planar(5, ForbiddenFamily::from_tag("theta4"));
    expect_valid(schema, json::parse(extremal_result_json(r).dump()));
  }

  TEST_CASE("audit reports match their schema") {
    json schema = load("docs/schema/audit_report.schema.json");
    BoundaryEmbedding b = theta4_base();
    expect_valid(schema, json::parse(audit_report_json(audit_observation1(b.emb)).dump()));
    expect_valid(schema, json::parse(audit_report_json(
                             audit_theorem_inequalities(b.emb, ForbiddenFamily::from_tag("theta4")))
                             .dump()));
  }

  TEST_CASE("certificates match their schema") {
    json schema = load("docs/schema/certificate.schema.json");
    ExtremalCertificate c = check_extremal_certificate(theta5_base().emb, "theta5");
    expect_valid(schema, json::parse(certificate_json(c).dump()));
  }

  TEST_CASE("the validator itself rejects shape violations") {
    json schema = load("docs/schema/extremal_result.schema.json");
    ExtremalResult r = ex_planar(4, ForbiddenFamily::from_tag("c4"));
    json good = json::parse(extremal_result_json(r).dump());
    std::string why;

    json missing = good;
    missing.erase("witness");
    CHECK(!validate(schema, missing, why));

    json wrong_type = good;
    wrong_type["max_edges"] = "nine";
    CHECK(!validate(schema, wrong_type, why));

    json extra = good;
    extra["comment"] = "hi";
    CHECK(!validate(schema, extra, why));

    json audit_schema = load("docs/schema/audit_report.schema.json");
    BoundaryEmbedding b = theta4_base();
    json rep = json::parse(audit_report_json(audit_observation1(b.emb)).dump());
    rep["checks"][0]["relation"] = ">=";
    CHECK(!validate(audit_schema, rep, why));
  }
}
