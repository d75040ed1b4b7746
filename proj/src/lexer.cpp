#include <cctype>
#include <map>
#include <optional>
#include <string_view>

#include "tlsf/token.hpp"

namespace tlsf {

namespace {

const std::map<std::string_view, Sym>& keyword_table() {
  static const std::map<std::string_view, Sym> table = {
      {"INFO", Sym::KwInfo},
      {"TITLE", Sym::KwTitle},
      {"DESCRIPTION", Sym::KwDescription},
      {"SEMANTICS", Sym::KwSemantics},
      {"TARGET", Sym::KwTarget},
      {"TAGS", Sym::KwTags},
      {"GLOBAL", Sym::KwGlobal},
      {"PARAMETERS", Sym::KwParameters},
      {"DEFINITIONS", Sym::KwDefinitions},
      {"MAIN", Sym::KwMain},
      {"INPUTS", Sym::KwInputs},
      {"OUTPUTS", Sym::KwOutputs},
      {"INITIALLY", Sym::KwInitially},
      {"PRESET", Sym::KwPreset},
      {"REQUIRE", Sym::KwRequire},
      {"ASSERT", Sym::KwAssert},
      {"ASSUME", Sym::KwAssume},
      {"GUARANTEE", Sym::KwGuarantee},
      {"INVARIANTS", Sym::KwInvariants},
      {"ASSUMPTIONS", Sym::KwAssumptions},
      {"GUARANTEES", Sym::KwGuarantees},
      {"enum", Sym::KwEnum},
      {"otherwise", Sym::KwOtherwise},
      {"true", Sym::KwTrue},
      {"false", Sym::KwFalse},
      {"X", Sym::KwX},
      {"G", Sym::KwG},
      {"F", Sym::KwF},
      {"U", Sym::KwU},
      {"R", Sym::KwR},
      {"W", Sym::KwW},
      {"SUM", Sym::KwSum},
      {"PROD", Sym::KwProd},
      {"SIZE", Sym::KwSize},
      {"MIN", Sym::KwMin},
      {"MAX", Sym::KwMax},
      {"SIZEOF", Sym::KwSizeof},
      {"MUL", Sym::KwMul},
      {"DIV", Sym::KwDiv},
      {"MOD", Sym::KwMod},
      {"PLUS", Sym::KwPlus},
      {"MINUS", Sym::KwMinus},
      {"CAP", Sym::KwCap},
      {"CUP", Sym::KwCup},
      {"SETMINUS", Sym::KwSetminus},
      {"EQ", Sym::KwEq},
      {"NEQ", Sym::KwNeq},
      {"LE", Sym::KwLe},
      {"LEQ", Sym::KwLeq},
      {"GE", Sym::KwGe},
      {"GEG", Sym::KwGeg},
      {"IN", Sym::KwIn},
      {"ELEM", Sym::KwElem},
      {"NOT", Sym::KwNot},
      {"AND", Sym::KwAnd},
      {"OR", Sym::KwOr},
      {"FORALL", Sym::KwForall},
      {"EXISTS", Sym::KwExists},
      {"IMPLIES", Sym::KwImplies},
      {"EQUIV", Sym::KwEquiv},
  };
  return table;
}

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '@';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '@' || c == '\'';
}

struct Lexer {
  std::string_view text;
  size_t i = 0;
  uint32_t line = 1, col = 1;

  bool eof() const { return i >= text.size(); }
  char cur() const { return text[i]; }
  char peek(size_t k = 1) const { return i + k < text.size() ? text[i + k] : '\0'; }
  SourcePos pos() const { return {line, col}; }

  void advance() {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  }
  void advance_n(size_t n) {
    for (size_t k = 0; k < n; ++k) advance();
  }

  void skip_trivia() {
    while (!eof()) {
      char c = cur();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && peek() == '/') {
        while (!eof() && cur() != '\n') advance();
      } else if (c == '/' && peek() == '*') {
        SourcePos open = pos();
        advance_n(2);
        size_t depth = 1;
        while (depth > 0) {
          if (eof()) lex_error(open, "unterminated block comment");
          if (cur() == '/' && peek() == '*') {
            ++depth;
            advance_n(2);
          } else if (cur() == '*' && peek() == '/') {
            --depth;
            advance_n(2);
          } else {
            advance();
          }
        }
      } else {
        return;
      }
    }
  }

  Token make(TokenKind kind, Sym sym, SourcePos p, std::string text_) {
    return Token{kind, sym, std::move(text_), p};
  }

  Token next() {
    skip_trivia();
    SourcePos p = pos();
    if (eof()) return make(TokenKind::End, Sym::End, p, "");
    char c = cur();

    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = i;
      while (!eof() && std::isdigit(static_cast<unsigned char>(cur()))) advance();
      return make(TokenKind::Number, Sym::Number, p, std::string(text.substr(start, i - start)));
    }

    if (c == '\'') lex_error(p, "identifier may not start with a prime");

    if (ident_start(c)) {
      size_t start = i;
      while (!eof() && ident_char(cur())) advance();
      std::string s(text.substr(start, i - start));
      auto it = keyword_table().find(s);
      if (it != keyword_table().end())
        return make(TokenKind::Keyword, it->second, p, std::move(s));
      return make(TokenKind::Identifier, Sym::Identifier, p, std::move(s));
    }

    if (c == '"') {
      advance();
      size_t start = i;
      while (!eof() && cur() != '"') advance();
      if (eof()) lex_error(p, "unterminated string literal");
      std::string s(text.substr(start, i - start));
      advance();  // closing quote
      return make(TokenKind::StringLit, Sym::StringLit, p, std::move(s));
    }

    auto sym2 = [&](const char* two, Sym s) {
      if (cur() == two[0] && peek() == two[1]) {
        advance_n(2);
        return std::optional<Sym>(s);
      }
      return std::optional<Sym>();
    };

    // three-character forms first
    if (c == '(' && peek() == '+' && peek(2) == ')') {
      advance_n(3);
      return make(TokenKind::Operator, Sym::CupSym, p, "(+)");
    }
    if (c == '(' && peek() == '*' && peek(2) == ')') {
      advance_n(3);
      return make(TokenKind::Operator, Sym::CapSym, p, "(*)");
    }
    if (c == '(' && peek() == '\\' && peek(2) == ')') {
      advance_n(3);
      return make(TokenKind::Operator, Sym::SetMinusSym, p, "(\\)");
    }
    if (c == '(' && peek() == '-' && peek(2) == ')') {
      advance_n(3);
      return make(TokenKind::Operator, Sym::SetMinusAlt, p, "(-)");
    }
    if (c == '<' && peek() == '-' && peek(2) == '>') {
      advance_n(3);
      return make(TokenKind::Operator, Sym::DoubleArrow, p, "<->");
    }

    for (const auto& [two, s] : {std::pair<const char*, Sym>{"&&", Sym::AmpAmp},
                           {"||", Sym::BarBar},
                           {"->", Sym::Arrow},
                           {"<-", Sym::MemberArrow},
                           {"==", Sym::EqEq},
                           {"!=", Sym::BangEq},
                           {"/=", Sym::SlashEq},
                           {"<=", Sym::Le},
                           {">=", Sym::Ge},
                           {"..", Sym::DotDot}}) {
      if (auto got = sym2(two, s)) return make(TokenKind::Operator, *got, p, two);
    }

    auto one = [&](Sym s, TokenKind k) {
      std::string t(1, c);
      advance();
      return make(k, s, p, std::move(t));
    };
    switch (c) {
      case '(': return one(Sym::LParen, TokenKind::Punct);
      case ')': return one(Sym::RParen, TokenKind::Punct);
      case '[': return one(Sym::LBracket, TokenKind::Punct);
      case ']': return one(Sym::RBracket, TokenKind::Punct);
      case '{': return one(Sym::LBrace, TokenKind::Punct);
      case '}': return one(Sym::RBrace, TokenKind::Punct);
      case ',': return one(Sym::Comma, TokenKind::Punct);
      case ';': return one(Sym::Semicolon, TokenKind::Punct);
      case ':': return one(Sym::Colon, TokenKind::Operator);
      case '=': return one(Sym::Equals, TokenKind::Punct);
      case '+': return one(Sym::Plus, TokenKind::Operator);
      case '-': return one(Sym::Minus, TokenKind::Operator);
      case '*': return one(Sym::Star, TokenKind::Operator);
      case '/': return one(Sym::Slash, TokenKind::Operator);
      case '%': return one(Sym::Percent, TokenKind::Operator);
      case '|': return one(Sym::Bar, TokenKind::Operator);
      case '~': return one(Sym::Tilde, TokenKind::Operator);
      case '!': return one(Sym::Bang, TokenKind::Operator);
      case '<': return one(Sym::Lt, TokenKind::Operator);
      case '>': return one(Sym::Gt, TokenKind::Operator);
      default:
        lex_error(p, std::string("unexpected character '") + c + "'");
    }
  }
};

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  Lexer lx{text};
  std::vector<Token> out;
  while (true) {
    Token t = lx.next();
    bool end = t.kind == TokenKind::End;
    out.push_back(std::move(t));
    if (end) return out;
  }
}

bool is_reserved_word(std::string_view text) {
  return keyword_table().count(text) != 0;
}

}  // namespace tlsf
