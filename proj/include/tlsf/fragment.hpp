#pragma once

#include <string>
#include <vector>

#include "tlsf/elaborate.hpp"
#include "tlsf/ltl.hpp"

namespace tlsf {

/// One fairness implication group: (/\ GF env) -> (/\ GF sys).
struct GrGroup {
  std::vector<ltl::Formula> env;  // GF cores, X-free boolean
  std::vector<ltl::Formula> sys;
};

struct GrReport {
  bool in_gr = false;
  size_t k = 0;                  // number of fairness implication groups (>= 1 when in_gr)
  std::string obstruction;       // set when !in_gr
  std::vector<ltl::Formula> initial;     // X-free boolean conjuncts
  std::vector<ltl::Formula> transition;  // bodies B of `G B`, X-depth <= 1
  std::vector<GrGroup> groups;

  std::vector<ltl::Formula> env_fairness() const;
  std::vector<ltl::Formula> sys_fairness() const;

  /// Conjunction of the recognized parts; boolean-identity-equivalent to the
  /// classified input for every InGR verdict.
  ltl::Formula reassemble() const;

  std::string summary() const;  // "GR(1)" or "not GR(k): <obstruction>"
};

/// Syntactic GR(k) classification of a plain formula, modulo flattening and
/// commutation of conjunctions, double negation, true/false units and
/// GF-idempotence. Failures are verdicts, not errors.
GrReport classify(const ltl::Formula& f);

/// Spec-form classification: INITIALLY/PRESET supply the initial constraints,
/// REQUIRE/ASSERT the transition constraints, ASSUME/GUARANTEE the fairness
/// implication groups.
GrReport classify(const BasicSpec& spec);

}  // namespace tlsf
