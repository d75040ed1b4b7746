#include "tlsf/parser.hpp"

#include <charconv>
#include <optional>
#include <set>

namespace tlsf {

namespace {

// Operator levels follow the full-format precedence table: level 1 binds
// tightest, 19 loosest. Unary operands and big-operator bodies parse at the
// level of the prefix operators (11).
constexpr int kUnaryLevel = 11;
constexpr int kExprLevel = 17;    // ordinary expressions: everything below ~ and :
constexpr int kGuardLevel = 18;   // function alternatives may contain ~

struct BinOpInfo {
  int level;
  bool right_assoc;
  BinaryOp op;
};

std::optional<BinOpInfo> binary_info(Sym s) {
  switch (s) {
    case Sym::Star: case Sym::KwMul: return BinOpInfo{2, false, BinaryOp::Mul};
    case Sym::Slash: case Sym::KwDiv: return BinOpInfo{3, true, BinaryOp::Div};
    case Sym::Percent: case Sym::KwMod: return BinOpInfo{3, true, BinaryOp::Mod};
    case Sym::Plus: case Sym::KwPlus: return BinOpInfo{4, false, BinaryOp::Add};
    case Sym::Minus: case Sym::KwMinus: return BinOpInfo{4, false, BinaryOp::Sub};
    case Sym::SetMinusSym: case Sym::SetMinusAlt: case Sym::KwSetminus:
      return BinOpInfo{6, true, BinaryOp::SetMinus};
    case Sym::CapSym: case Sym::KwCap: return BinOpInfo{7, false, BinaryOp::Inter};
    case Sym::CupSym: case Sym::KwCup: return BinOpInfo{8, false, BinaryOp::Union};
    case Sym::EqEq: case Sym::KwEq: return BinOpInfo{9, false, BinaryOp::Eq};
    case Sym::BangEq: case Sym::SlashEq: case Sym::KwNeq:
      return BinOpInfo{9, false, BinaryOp::Neq};
    case Sym::Lt: case Sym::KwLe: return BinOpInfo{9, false, BinaryOp::Lt};
    case Sym::Le: case Sym::KwLeq: return BinOpInfo{9, false, BinaryOp::Le};
    case Sym::Gt: case Sym::KwGe: return BinOpInfo{9, false, BinaryOp::Gt};
    case Sym::Ge: case Sym::KwGeg: return BinOpInfo{9, false, BinaryOp::Ge};
    case Sym::KwIn: case Sym::KwElem: case Sym::MemberArrow:
      return BinOpInfo{10, false, BinaryOp::In};
    case Sym::AmpAmp: case Sym::KwAnd: return BinOpInfo{12, false, BinaryOp::And};
    case Sym::BarBar: case Sym::KwOr: return BinOpInfo{13, false, BinaryOp::Or};
    case Sym::Arrow: case Sym::KwImplies: return BinOpInfo{14, true, BinaryOp::Implies};
    case Sym::DoubleArrow: case Sym::KwEquiv: return BinOpInfo{14, true, BinaryOp::Iff};
    case Sym::KwW: return BinOpInfo{15, true, BinaryOp::WeakUntil};
    case Sym::KwU: return BinOpInfo{16, true, BinaryOp::Until};
    case Sym::KwR: return BinOpInfo{17, false, BinaryOp::Release};
    case Sym::Tilde: return BinOpInfo{18, false, BinaryOp::PatternMatch};
    default: return std::nullopt;
  }
}

std::optional<BigOpKind> big_op_kind(Sym s) {
  switch (s) {
    case Sym::Plus: case Sym::KwSum: return BigOpKind::Sum;
    case Sym::Star: case Sym::KwProd: return BigOpKind::Prod;
    case Sym::CupSym: case Sym::KwCup: return BigOpKind::Union;
    case Sym::CapSym: case Sym::KwCap: return BigOpKind::Inter;
    case Sym::AmpAmp: case Sym::KwAnd: case Sym::KwForall: return BigOpKind::And;
    case Sym::BarBar: case Sym::KwOr: case Sym::KwExists: return BigOpKind::Or;
    default: return std::nullopt;
  }
}

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

  SpecDocument parse_document() {
    SpecDocument doc;
    doc.info = parse_info();
    if (at(Sym::KwGlobal)) parse_global(doc);
    parse_main(doc.main);
    expect_end();
    return doc;
  }

  Expr parse_single_expression() {
    Expr e = parse_expression(kExprLevel);
    expect_end();
    return e;
  }

  SpecDocument parse_basic_document() {
    SpecDocument doc;
    doc.info = parse_info();
    if (at(Sym::KwGlobal))
      fail("GLOBAL section is not allowed in the basic format");
    parse_basic_main(doc.main);
    expect_end();
    return doc;
  }

 private:
  const std::vector<Token>& toks_;
  size_t pos_ = 0;
  bool allow_pattern_ = false;

  const Token& cur() const { return toks_[pos_]; }
  const Token& peek(size_t k = 1) const {
    size_t i = pos_ + k;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  bool at(Sym s) const { return cur().sym == s; }
  bool at_end() const { return cur().kind == TokenKind::End; }
  Token take() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const { parse_error(cur().pos, msg); }
  [[noreturn]] void fail_at(SourcePos p, const std::string& msg) const { parse_error(p, msg); }

  Token expect(Sym s, const char* what) {
    if (!at(s)) fail(std::string("expected ") + what + ", found '" + describe(cur()) + "'");
    return take();
  }
  static std::string describe(const Token& t) {
    return t.kind == TokenKind::End ? "end of input" : t.text;
  }
  void expect_end() {
    if (!at_end()) fail("stray tokens after specification: '" + describe(cur()) + "'");
  }

  uint64_t number_value(const Token& t) {
    // unsigned decimal, leading zeros allowed, capped below 2^63
    uint64_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || p != t.text.data() + t.text.size() || v > (uint64_t{1} << 63) - 1)
      fail_at(t.pos, "number literal out of range");
    return v;
  }

  // --- INFO ---------------------------------------------------------------

  InfoSection parse_info() {
    InfoSection info;
    expect(Sym::KwInfo, "INFO section");
    expect(Sym::LBrace, "'{'");
    bool have_title = false, have_desc = false, have_sem = false, have_target = false,
         have_tags = false;
    while (!at(Sym::RBrace)) {
      if (at(Sym::KwTitle)) {
        SourcePos p = take().pos;
        if (have_title) fail_at(p, "duplicate TITLE field");
        expect(Sym::Colon, "':'");
        info.title = expect(Sym::StringLit, "string literal").text;
        have_title = true;
      } else if (at(Sym::KwDescription)) {
        SourcePos p = take().pos;
        if (have_desc) fail_at(p, "duplicate DESCRIPTION field");
        expect(Sym::Colon, "':'");
        info.description = expect(Sym::StringLit, "string literal").text;
        have_desc = true;
      } else if (at(Sym::KwSemantics)) {
        SourcePos p = take().pos;
        if (have_sem) fail_at(p, "duplicate SEMANTICS field");
        expect(Sym::Colon, "':'");
        info.semantics.model = parse_model();
        info.semantics.strict = false;
        if (at(Sym::Comma)) {
          take();
          Token t = expect(Sym::Identifier, "Strict");
          if (t.text != "Strict") fail_at(t.pos, "expected Strict");
          info.semantics.strict = true;
        }
        have_sem = true;
      } else if (at(Sym::KwTarget)) {
        SourcePos p = take().pos;
        if (have_target) fail_at(p, "duplicate TARGET field");
        expect(Sym::Colon, "':'");
        info.target.model = parse_model();
        have_target = true;
      } else if (at(Sym::KwTags)) {
        SourcePos p = take().pos;
        if (have_tags) fail_at(p, "duplicate TAGS field");
        expect(Sym::Colon, "':'");
        info.tags.push_back(expect(Sym::StringLit, "string literal").text);
        while (at(Sym::Comma)) {
          take();
          info.tags.push_back(expect(Sym::StringLit, "string literal").text);
        }
        have_tags = true;
      } else {
        fail("unexpected token in INFO section: '" + describe(cur()) + "'");
      }
    }
    SourcePos close = take().pos;  // '}'
    if (!have_title) fail_at(close, "missing INFO field TITLE");
    if (!have_desc) fail_at(close, "missing INFO field DESCRIPTION");
    if (!have_sem) fail_at(close, "missing INFO field SEMANTICS");
    if (!have_target) fail_at(close, "missing INFO field TARGET");
    return info;
  }

  Model parse_model() {
    Token t = expect(Sym::Identifier, "Mealy or Moore");
    if (t.text == "Mealy") return Model::Mealy;
    if (t.text == "Moore") return Model::Moore;
    fail_at(t.pos, "expected Mealy or Moore");
  }

  // --- GLOBAL ---------------------------------------------------------------

  void parse_global(SpecDocument& doc) {
    expect(Sym::KwGlobal, "GLOBAL");
    expect(Sym::LBrace, "'{'");
    bool have_params = false, have_defs = false;
    while (!at(Sym::RBrace)) {
      if (at(Sym::KwParameters)) {
        SourcePos p = take().pos;
        if (have_params) fail_at(p, "duplicate PARAMETERS subsection");
        have_params = true;
        expect(Sym::LBrace, "'{'");
        while (!at(Sym::RBrace)) {
          Token name = expect(Sym::Identifier, "parameter name");
          expect(Sym::Equals, "'='");
          Expr value = parse_expression(kExprLevel);
          expect(Sym::Semicolon, "';'");
          doc.parameters.push_back({name.text, std::move(value), name.pos});
        }
        take();
      } else if (at(Sym::KwDefinitions)) {
        SourcePos p = take().pos;
        if (have_defs) fail_at(p, "duplicate DEFINITIONS subsection");
        have_defs = true;
        expect(Sym::LBrace, "'{'");
        while (!at(Sym::RBrace)) doc.definitions.push_back(parse_definition());
        take();
      } else {
        fail("unexpected token in GLOBAL section: '" + describe(cur()) + "'");
      }
    }
    take();  // '}'
  }

  Definition parse_definition() {
    if (at(Sym::KwEnum)) return parse_enum_decl();
    Token name = expect(Sym::Identifier, "definition name");
    if (at(Sym::LParen)) {
      take();
      FunctionDecl fn;
      fn.name = name.text;
      fn.pos = name.pos;
      fn.params.push_back(expect(Sym::Identifier, "parameter name").text);
      while (at(Sym::Comma)) {
        take();
        fn.params.push_back(expect(Sym::Identifier, "parameter name").text);
      }
      expect(Sym::RParen, "')'");
      expect(Sym::Equals, "'='");
      fn.alts = parse_alternatives();
      expect(Sym::Semicolon, "';'");
      return fn;
    }
    expect(Sym::Equals, "'='");
    Expr value = parse_expression(kExprLevel);
    expect(Sym::Semicolon, "';'");
    return BindingDecl{name.text, std::move(value), name.pos};
  }

  EnumDecl parse_enum_decl() {
    SourcePos p = expect(Sym::KwEnum, "enum").pos;
    EnumDecl decl;
    decl.pos = p;
    decl.name = expect(Sym::Identifier, "enumeration name").text;
    expect(Sym::Equals, "'='");
    while (cur().sym == Sym::Identifier && peek().sym == Sym::Colon) {
      EnumDecl::Entry entry;
      Token name = take();
      entry.name = name.text;
      entry.pos = name.pos;
      take();  // ':'
      entry.patterns.push_back(parse_enum_pattern());
      while (at(Sym::Comma)) {
        take();
        entry.patterns.push_back(parse_enum_pattern());
      }
      decl.entries.push_back(std::move(entry));
    }
    if (decl.entries.empty()) fail("enumeration must declare at least one entry");
    if (at(Sym::Semicolon)) take();  // terminator is optional after an enum
    return decl;
  }

  std::string parse_enum_pattern() {
    std::string pat;
    SourcePos p = cur().pos;
    while (at(Sym::Number) || at(Sym::Star)) pat += take().text;
    if (pat.empty()) fail("expected enumeration pattern over 0, 1, *");
    for (char c : pat)
      if (c != '0' && c != '1' && c != '*')
        fail_at(p, "enumeration pattern may only contain 0, 1, *");
    return pat;
  }

  std::vector<FunctionAlt> parse_alternatives() {
    std::vector<FunctionAlt> alts;
    while (!at(Sym::Semicolon)) {
      if (at_end()) fail("expected ';' terminating function definition");
      FunctionAlt alt;
      if (at(Sym::KwOtherwise)) {
        take();
        expect(Sym::Colon, "':'");
        alt.guard_kind = FunctionAlt::Guard::Otherwise;
        alt.body = parse_expression(kExprLevel);
      } else {
        allow_pattern_ = true;
        Expr first = parse_expression(kGuardLevel);
        allow_pattern_ = false;
        if (at(Sym::Colon)) {
          take();
          alt.guard_kind = FunctionAlt::Guard::Expr;
          alt.guard = std::move(first);
          alt.body = parse_expression(kExprLevel);
        } else {
          alt.guard_kind = FunctionAlt::Guard::None;
          alt.body = std::move(first);
        }
      }
      alts.push_back(std::move(alt));
    }
    if (alts.empty()) fail("function definition needs at least one body");
    return alts;
  }

  // --- MAIN -----------------------------------------------------------------

  struct SectionSlot {
    std::vector<Expr>* exprs = nullptr;
    std::vector<SignalDecl>* decls = nullptr;
    const char* name = "";
  };

  void parse_main(MainSection& main) {
    expect(Sym::KwMain, "MAIN section");
    expect(Sym::LBrace, "'{'");
    std::set<std::string> seen;
    bool have_inputs = false, have_outputs = false;
    while (!at(Sym::RBrace)) {
      SectionSlot slot = section_slot(main);
      Token kw = take();
      if (!seen.insert(slot.name).second)
        fail_at(kw.pos, std::string("duplicate section ") + slot.name);
      expect(Sym::LBrace, "'{'");
      if (slot.decls) {
        while (!at(Sym::RBrace)) slot.decls->push_back(parse_signal_decl());
        if (slot.decls == &main.inputs) have_inputs = true;
        if (slot.decls == &main.outputs) have_outputs = true;
      } else {
        while (!at(Sym::RBrace)) {
          slot.exprs->push_back(parse_expression(kExprLevel));
          expect(Sym::Semicolon, "';'");
        }
      }
      take();  // '}'
    }
    SourcePos close = take().pos;
    if (!have_inputs) fail_at(close, "missing section INPUTS");
    if (!have_outputs) fail_at(close, "missing section OUTPUTS");
  }

  SectionSlot section_slot(MainSection& main) {
    switch (cur().sym) {
      case Sym::KwInputs: return {nullptr, &main.inputs, "INPUTS"};
      case Sym::KwOutputs: return {nullptr, &main.outputs, "OUTPUTS"};
      case Sym::KwInitially: return {&main.initially, nullptr, "INITIALLY"};
      case Sym::KwPreset: return {&main.preset, nullptr, "PRESET"};
      case Sym::KwRequire: return {&main.require, nullptr, "REQUIRE"};
      case Sym::KwAssert:
      case Sym::KwInvariants: return {&main.asserts, nullptr, "ASSERT"};
      case Sym::KwAssume:
      case Sym::KwAssumptions: return {&main.assume, nullptr, "ASSUME"};
      case Sym::KwGuarantee:
      case Sym::KwGuarantees: return {&main.guarantee, nullptr, "GUARANTEE"};
      default:
        fail("unexpected token in MAIN section: '" + describe(cur()) + "'");
    }
  }

  SignalDecl parse_signal_decl() {
    Token first = expect(Sym::Identifier, "signal declaration");
    SignalDecl decl;
    decl.pos = first.pos;
    if (at(Sym::Identifier)) {
      // enum-typed bus: <enumtype> <name>
      decl.shape = SignalDecl::Shape::EnumBus;
      decl.enum_type = first.text;
      decl.name = take().text;
    } else if (at(Sym::LBracket)) {
      take();
      decl.shape = SignalDecl::Shape::SizedBus;
      decl.name = first.text;
      decl.width = parse_expression(kExprLevel);
      expect(Sym::RBracket, "']'");
    } else {
      decl.shape = SignalDecl::Shape::Single;
      decl.name = first.text;
    }
    expect(Sym::Semicolon, "';'");
    return decl;
  }

  // --- expressions ----------------------------------------------------------

  Expr parse_expression(int max_level) {
    Expr lhs = parse_operand();
    while (true) {
      auto info = binary_info(cur().sym);
      if (info && info->op == BinaryOp::PatternMatch && !allow_pattern_)
        fail("pattern match '~' is only allowed inside function definitions");
      if (!info || info->level > max_level) break;
      Token op = take();
      int sub = info->right_assoc ? info->level : info->level - 1;
      Expr rhs = parse_expression(sub);
      lhs = Expr::binary(info->op, std::move(lhs), std::move(rhs), op.pos);
    }
    return lhs;
  }

  Expr parse_operand() {
    const Token& t = cur();
    switch (t.sym) {
      case Sym::Number: {
        Token n = take();
        return Expr::nat_lit(number_value(n), n.pos);
      }
      case Sym::KwTrue: {
        Token n = take();
        return Expr::bool_lit(true, n.pos);
      }
      case Sym::KwFalse: {
        Token n = take();
        return Expr::bool_lit(false, n.pos);
      }
      case Sym::Identifier:
        return parse_identifier_operand();
      case Sym::LParen: {
        take();
        Expr inner = parse_expression(kExprLevel);
        expect(Sym::RParen, "')'");
        return inner;
      }
      case Sym::LBrace:
        return parse_set();
      case Sym::Bang: case Sym::KwNot: {
        Token op = take();
        return Expr::unary(UnaryOp::Not, parse_expression(kUnaryLevel), op.pos);
      }
      case Sym::KwX:
        return parse_next();
      case Sym::KwF:
        return parse_bounded(UnaryOp::Finally);
      case Sym::KwG:
        return parse_bounded(UnaryOp::Globally);
      case Sym::KwMin: case Sym::KwMax: case Sym::KwSizeof: case Sym::KwSize: {
        Token op = take();
        UnaryOp u = op.sym == Sym::KwMin   ? UnaryOp::Min
                    : op.sym == Sym::KwMax ? UnaryOp::Max
                    : op.sym == Sym::KwSizeof ? UnaryOp::SizeOf
                                              : UnaryOp::SetSize;
        return Expr::unary(u, parse_expression(1), op.pos);
      }
      case Sym::Bar: {
        Token op = take();
        Expr inner = parse_expression(8);
        expect(Sym::Bar, "closing '|'");
        return Expr::unary(UnaryOp::SetSize, std::move(inner), op.pos);
      }
      default:
        break;
    }
    if (auto big = big_op_kind(t.sym); big && peek().sym == Sym::LBracket)
      return parse_big_op(*big);
    fail("expected expression, found '" + describe(t) + "'");
  }

  Expr parse_identifier_operand() {
    Token name = take();
    if (at(Sym::LParen)) {
      take();
      std::vector<Expr> args;
      if (!at(Sym::RParen)) {
        args.push_back(parse_expression(kExprLevel));
        while (at(Sym::Comma)) {
          take();
          args.push_back(parse_expression(kExprLevel));
        }
      }
      expect(Sym::RParen, "')'");
      return Expr::apply(name.text, std::move(args), name.pos);
    }
    Expr e = Expr::ident(name.text, name.pos);
    while (at(Sym::LBracket)) {
      Token br = take();
      Expr index = parse_expression(kExprLevel);
      expect(Sym::RBracket, "']'");
      e = Expr::bus_index(std::move(e), std::move(index), br.pos);
    }
    return e;
  }

  Expr parse_next() {
    Token op = take();
    if (at(Sym::LBracket)) {
      take();
      Expr count = parse_expression(kExprLevel);
      expect(Sym::RBracket, "']'");
      return Expr::next_stack(std::move(count), parse_expression(kUnaryLevel), op.pos);
    }
    return Expr::unary(UnaryOp::Next, parse_expression(kUnaryLevel), op.pos);
  }

  Expr parse_bounded(UnaryOp base) {
    Token op = take();
    if (at(Sym::LBracket)) {
      take();
      Expr lo = parse_expression(kExprLevel);
      expect(Sym::Colon, "':'");
      Expr hi = parse_expression(kExprLevel);
      expect(Sym::RBracket, "']'");
      Expr body = parse_expression(kUnaryLevel);
      return base == UnaryOp::Finally
                 ? Expr::finally_range(std::move(lo), std::move(hi), std::move(body), op.pos)
                 : Expr::globally_range(std::move(lo), std::move(hi), std::move(body), op.pos);
    }
    return Expr::unary(base, parse_expression(kUnaryLevel), op.pos);
  }

  Expr parse_big_op(BigOpKind kind) {
    Token op = take();
    expect(Sym::LBracket, "'['");
    std::vector<Binder> binders;
    binders.push_back(parse_binder());
    while (at(Sym::Comma)) {
      take();
      binders.push_back(parse_binder());
    }
    expect(Sym::RBracket, "']'");
    Expr body = parse_expression(kUnaryLevel);
    return Expr::big_op(kind, std::move(binders), std::move(body), op.pos);
  }

  Binder parse_binder() {
    Binder b;
    b.pos = cur().pos;
    bool simple = cur().sym == Sym::Identifier &&
                  (peek().sym == Sym::KwIn || peek().sym == Sym::KwElem ||
                   peek().sym == Sym::MemberArrow);
    if (simple) {
      b.name = take().text;
      take();  // IN
      b.set = std::make_shared<Expr>(parse_expression(9));
      return b;
    }
    // comparison binder: lo <op1> name <op2> hi
    Expr lo = parse_expression(8);
    if (!at(Sym::Lt) && !at(Sym::Le)) fail("expected '<' or '<=' in range binder");
    b.lo_inclusive = take().sym == Sym::Le;
    b.name = expect(Sym::Identifier, "binder name").text;
    if (!at(Sym::Lt) && !at(Sym::Le)) fail("expected '<' or '<=' in range binder");
    b.hi_inclusive = take().sym == Sym::Le;
    Expr hi = parse_expression(8);
    b.lo = std::make_shared<Expr>(std::move(lo));
    b.hi = std::make_shared<Expr>(std::move(hi));
    return b;
  }

  Expr parse_set() {
    Token brace = take();
    if (at(Sym::RBrace)) {
      take();
      return Expr::set_display({}, brace.pos);
    }
    std::vector<Expr> elems;
    elems.push_back(parse_expression(kExprLevel));
    if (at(Sym::Comma)) {
      take();
      elems.push_back(parse_expression(kExprLevel));
      if (at(Sym::DotDot)) {
        take();
        Expr z = parse_expression(kExprLevel);
        expect(Sym::RBrace, "'}'");
        return Expr::set_range(std::move(elems[0]), std::move(elems[1]), std::move(z), brace.pos);
      }
      while (at(Sym::Comma)) {
        take();
        elems.push_back(parse_expression(kExprLevel));
      }
    }
    expect(Sym::RBrace, "'}'");
    return Expr::set_display(std::move(elems), brace.pos);
  }

  // --- basic format ---------------------------------------------------------

  void parse_basic_main(MainSection& main) {
    expect(Sym::KwMain, "MAIN section");
    expect(Sym::LBrace, "'{'");
    std::set<std::string> seen;
    bool have_inputs = false, have_outputs = false;
    while (!at(Sym::RBrace)) {
      SectionSlot slot = section_slot(main);
      Token kw = take();
      if (!seen.insert(slot.name).second)
        fail_at(kw.pos, std::string("duplicate section ") + slot.name);
      expect(Sym::LBrace, "'{'");
      if (slot.decls) {
        while (!at(Sym::RBrace)) {
          Token name = expect(Sym::Identifier, "signal name");
          SignalDecl decl;
          decl.pos = name.pos;
          decl.shape = SignalDecl::Shape::Single;
          decl.name = basic_atom_name(name);
          expect(Sym::Semicolon, "';'");
          slot.decls->push_back(std::move(decl));
        }
        if (slot.decls == &main.inputs) have_inputs = true;
        if (slot.decls == &main.outputs) have_outputs = true;
      } else {
        while (!at(Sym::RBrace)) {
          slot.exprs->push_back(parse_basic_formula());
          expect(Sym::Semicolon, "';'");
        }
      }
      take();
    }
    SourcePos close = take().pos;
    if (!have_inputs) fail_at(close, "missing section INPUTS");
    if (!have_outputs) fail_at(close, "missing section OUTPUTS");
  }

  // bus atoms print as name[index]; recombine into one atom name
  std::string basic_atom_name(const Token& name) {
    std::string s = name.text;
    if (at(Sym::LBracket)) {
      take();
      Token idx = expect(Sym::Number, "bus index");
      expect(Sym::RBracket, "']'");
      s += "[" + idx.text + "]";
    }
    return s;
  }

  Expr parse_basic_formula() {
    if (!at(Sym::LParen))
      fail("basic format requires fully parenthesized expressions");
    Token open = take();
    Expr result;
    switch (cur().sym) {
      case Sym::KwTrue:
        result = Expr::bool_lit(true, take().pos);
        break;
      case Sym::KwFalse:
        result = Expr::bool_lit(false, take().pos);
        break;
      case Sym::Identifier: {
        Token name = take();
        result = Expr::ident(basic_atom_name(name), name.pos);
        break;
      }
      case Sym::Bang: {
        Token op = take();
        result = Expr::unary(UnaryOp::Not, parse_basic_formula(), op.pos);
        break;
      }
      case Sym::KwX: {
        Token op = take();
        result = Expr::unary(UnaryOp::Next, parse_basic_formula(), op.pos);
        break;
      }
      case Sym::KwG: {
        Token op = take();
        result = Expr::unary(UnaryOp::Globally, parse_basic_formula(), op.pos);
        break;
      }
      case Sym::KwF: {
        Token op = take();
        result = Expr::unary(UnaryOp::Finally, parse_basic_formula(), op.pos);
        break;
      }
      case Sym::LParen: {
        Expr lhs = parse_basic_formula();
        BinaryOp op;
        switch (cur().sym) {
          case Sym::AmpAmp: op = BinaryOp::And; break;
          case Sym::BarBar: op = BinaryOp::Or; break;
          case Sym::Arrow: op = BinaryOp::Implies; break;
          case Sym::DoubleArrow: op = BinaryOp::Iff; break;
          case Sym::KwU: op = BinaryOp::Until; break;
          case Sym::KwR: op = BinaryOp::Release; break;
          case Sym::KwW: op = BinaryOp::WeakUntil; break;
          default:
            fail("expected a basic binary operator, found '" + describe(cur()) + "'");
        }
        Token opTok = take();
        Expr rhs = parse_basic_formula();
        result = Expr::binary(op, std::move(lhs), std::move(rhs), opTok.pos);
        break;
      }
      case Sym::Number:
        fail("numbers are not allowed in the basic format");
      case Sym::LBrace:
        fail("sets are not allowed in the basic format");
      default:
        fail("construct not allowed in the basic format: '" + describe(cur()) + "'");
    }
    (void)open;
    expect(Sym::RParen, "')'");
    return result;
  }
};

}  // namespace

SpecDocument parse_spec(const std::vector<Token>& tokens) {
  return Parser(tokens).parse_document();
}
SpecDocument parse_spec(std::string_view text) { return parse_spec(tokenize(text)); }

Expr parse_expr(const std::vector<Token>& tokens) {
  return Parser(tokens).parse_single_expression();
}
Expr parse_expr(std::string_view text) { return parse_expr(tokenize(text)); }

SpecDocument parse_basic_spec(const std::vector<Token>& tokens) {
  return Parser(tokens).parse_basic_document();
}
SpecDocument parse_basic_spec(std::string_view text) { return parse_basic_spec(tokenize(text)); }

}  // namespace tlsf
