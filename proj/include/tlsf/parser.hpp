#pragma once

#include <string_view>

#include "tlsf/ast.hpp"
#include "tlsf/token.hpp"

namespace tlsf {

/// Parses a full-format specification (INFO [GLOBAL] MAIN).
SpecDocument parse_spec(const std::vector<Token>& tokens);
SpecDocument parse_spec(std::string_view text);

/// Parses one standalone full-format expression (whole token stream).
Expr parse_expr(const std::vector<Token>& tokens);
Expr parse_expr(std::string_view text);

/// Parses a basic-format specification: no GLOBAL section, boolean signal
/// declarations only (single names or name[index] atoms), fully parenthesized
/// basic LTL expressions. Any full-format construct is rejected.
SpecDocument parse_basic_spec(const std::vector<Token>& tokens);
SpecDocument parse_basic_spec(std::string_view text);

}  // namespace tlsf
