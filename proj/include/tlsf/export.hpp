#pragma once

#include <string>

#include "tlsf/elaborate.hpp"
#include "tlsf/fragment.hpp"
#include "tlsf/ltl.hpp"

namespace tlsf {

enum class Dialect : uint8_t { BasicTlsf, PromelaLtl, Psl, Wring, Slugs, Unbeast };

/// Basic-format text: INFO copied from the spec, MAIN with INPUTS/OUTPUTS and
/// only the nonempty formula subsections, every subexpression parenthesized.
/// Byte-deterministic.
std::string print_basic(const BasicSpec& spec);

/// One formula in a foreign dialect (PromelaLtl, Psl, Wring). Operators the
/// dialect cannot express are rewritten away first; see docs/dialects.md.
std::string export_formula(const ltl::Formula& f, Dialect dialect);

/// Whole-spec exports. Unbeast splits assumptions (INITIALLY, G REQUIRE,
/// ASSUME) from guarantees (PRESET, G ASSERT, GUARANTEE). Slugs requires
/// strict semantics and an InGR(1) classification and fails with an export
/// error otherwise.
std::string export_spec(const BasicSpec& spec, Dialect dialect);

/// Dialect atom spelling: bracketed bus atoms and the prime/at characters are
/// rewritten to underscore forms (basic TLSF keeps names unchanged).
std::string sanitize_atom(const std::string& name);

}  // namespace tlsf
