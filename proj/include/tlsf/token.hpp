#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tlsf/diagnostics.hpp"

namespace tlsf {

enum class TokenKind : uint8_t { Keyword, Identifier, Number, StringLit, Operator, Punct, End };

// Concrete token symbols. Word-form operators keep their own symbols so the
// parser can treat "AND" and "&&" identically while diagnostics show the text.
enum class Sym : uint16_t {
  End,
  Identifier,
  Number,
  StringLit,

  // punctuation
  LParen, RParen, LBracket, RBracket, LBrace, RBrace,
  Comma, Semicolon, Colon, Equals, DotDot,

  // symbolic operators
  Plus, Minus, Star, Slash, Percent, Bar, Tilde,
  AmpAmp, BarBar, Bang, Arrow, DoubleArrow,      // -> and <->
  EqEq, BangEq, SlashEq, Lt, Le, Gt, Ge, MemberArrow,  // <- is membership
  CupSym, CapSym, SetMinusSym, SetMinusAlt,      // (+) (*) (\) (-)

  // keywords: sections
  KwInfo, KwTitle, KwDescription, KwSemantics, KwTarget, KwTags,
  KwGlobal, KwParameters, KwDefinitions, KwMain,
  KwInputs, KwOutputs, KwInitially, KwPreset, KwRequire,
  KwAssert, KwAssume, KwGuarantee,
  KwInvariants, KwAssumptions, KwGuarantees,     // v1.0 aliases

  // keywords: declarations and literals
  KwEnum, KwOtherwise, KwTrue, KwFalse,

  // keywords: temporal letters
  KwX, KwG, KwF, KwU, KwR, KwW,

  // keywords: word-form operators
  KwSum, KwProd, KwSize, KwMin, KwMax, KwSizeof,
  KwMul, KwDiv, KwMod, KwPlus, KwMinus,
  KwCap, KwCup, KwSetminus,
  KwEq, KwNeq, KwLe, KwLeq, KwGe, KwGeg, KwIn, KwElem,
  KwNot, KwAnd, KwOr, KwForall, KwExists, KwImplies, KwEquiv,
};

struct Token {
  TokenKind kind = TokenKind::End;
  Sym sym = Sym::End;
  std::string text;
  SourcePos pos;
};

/// Splits TLSF text into tokens. Comments (// line, nested /* */) are
/// discarded; positions are 1-based line:column of the token start.
std::vector<Token> tokenize(std::string_view text);

/// The reserved-word table (identifier text -> symbol), for tests and docs.
bool is_reserved_word(std::string_view text);

}  // namespace tlsf
