#pragma once

#include <optional>

#include "tlsf/elaborate.hpp"

namespace tlsf {

struct CombinedFormula {
  ltl::Formula formula;
  SemanticsTag semantics;
  TargetTag target;
  std::vector<std::string> inputs, outputs;
};

/// Left-associated conjunction of a section list; true when empty.
ltl::Formula fold_section(const std::vector<ltl::Formula>& fs);

/// One formula for the whole specification.
///   standard:  te -> (ts && (G pe && ae -> G ps && as))
///   strict:    te -> (ts && (ps W !pe) && (G pe && ae -> as))
/// where te/ts are the folded INITIALLY/PRESET lists, pe/ps REQUIRE/ASSERT,
/// ae/as ASSUME/GUARANTEE. No simplification is applied.
ltl::Formula combine(const BasicSpec& spec, bool strict);

/// Converts between implementation models by X-prefixing: Moore -> Mealy
/// wraps every input atom occurrence in one X, Mealy -> Moore wraps outputs.
/// Identical model is the identity.
BasicSpec adapt_target(const BasicSpec& spec, Model from, Model to);

/// Pipeline step: applies semantics/target overrides, converts the model
/// first when it differs from the target, then combines.
CombinedFormula interpret(const BasicSpec& spec,
                          std::optional<SemanticsTag> semantics_override = std::nullopt,
                          std::optional<TargetTag> target_override = std::nullopt);

}  // namespace tlsf
