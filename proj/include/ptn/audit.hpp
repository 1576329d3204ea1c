#pragma once
// Numeric audits of plane graphs against the face/edge incidence identities
// and the per-family counting chains behind the edge bounds.
//
// Hypotheses (connectivity, minimum degree, freeness, the extremality
// assumption one chain step rests on) are reported, never silently assumed:
// every numeric check is still evaluated so a violated hypothesis shows up as
// data, not as an exception.

#include <string>
#include <vector>

#include "json.hpp"
#include "ptn/embedding.hpp"
#include "ptn/theta.hpp"

namespace ptn {

struct AuditCheck {
  std::string name;
  long long lhs = 0, rhs = 0;
  std::string relation;  // "==", "<=", or "vacuous"
  bool pass = true;
  bool equality = false;
  std::string note;
};

struct AuditHypothesis {
  std::string name;
  std::string status;  // "holds", "violated", "assumed"
  std::string note;
};

struct AuditReport {
  std::string subject;
  int n = 0;
  long long e = 0;
  int components = 0;
  bool all_checks_pass = true;
  std::vector<AuditHypothesis> hypotheses;
  std::vector<AuditCheck> checks;
};

template <class G>
AuditReport audit_observation1(const Embedding<G>& emb);

// family.tag in {theta4,c4}, {theta5,c5}, {theta6,c6,theta6+k5m} selects the
// 4-, 5-, or 6-chain respectively; freeness is checked for the given family.
template <class G>
AuditReport audit_theorem_inequalities(const Embedding<G>& emb, const ForbiddenFamily& family);

extern template AuditReport audit_observation1(const Embedding<Graph>&);
extern template AuditReport audit_observation1(const Embedding<LargeGraph>&);
extern template AuditReport audit_theorem_inequalities(const Embedding<Graph>&, const ForbiddenFamily&);
extern template AuditReport audit_theorem_inequalities(const Embedding<LargeGraph>&, const ForbiddenFamily&);

nlohmann::ordered_json audit_report_json(const AuditReport& r);

}  // namespace ptn
