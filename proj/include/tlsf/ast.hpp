#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tlsf/diagnostics.hpp"

namespace tlsf {

enum class Model : uint8_t { Mealy, Moore };

struct SemanticsTag {
  Model model = Model::Mealy;
  bool strict = false;
};
struct TargetTag {
  Model model = Model::Mealy;
};

std::string to_string(Model m);
std::string to_string(const SemanticsTag& s);

struct InfoSection {
  std::string title;
  std::string description;
  SemanticsTag semantics;
  TargetTag target;
  std::vector<std::string> tags;
};

// --- surface expressions ----------------------------------------------------

enum class UnaryOp : uint8_t {
  Not, Next, Globally, Finally,
  SetSize, Min, Max, SizeOf,
};

enum class BinaryOp : uint8_t {
  Mul, Div, Mod, Add, Sub,
  SetMinus, Inter, Union,
  Eq, Neq, Lt, Le, Gt, Ge, In,
  And, Or, Implies, Iff,
  WeakUntil, Until, Release,
  PatternMatch,
};

enum class BigOpKind : uint8_t { Sum, Prod, Union, Inter, And, Or };

class Expr;

struct Binder {
  std::string name;
  SourcePos pos;
  // either a set expression, or an interval lo <op1> name <op2> hi
  std::shared_ptr<Expr> set;                  // null for interval binders
  std::shared_ptr<Expr> lo, hi;
  bool lo_inclusive = true, hi_inclusive = true;
};

enum class ExprKind : uint8_t {
  NatLit, BoolLit, Ident,
  BusIndex,       // lhs [ rhs ]
  Apply,          // name(args)
  Unary, Binary,
  BigOp,
  SetDisplay,     // { e, e, ... }
  SetRange,       // { x, y .. z }
  NextStack,      // X[n] e
  FinallyRange,   // F[n:m] e
  GloballyRange,  // G[n:m] e
};

class Expr {
 public:
  Expr() = default;

  ExprKind kind() const { return node_->kind; }
  SourcePos pos() const { return node_->pos; }
  uint64_t nat() const { return node_->nat; }
  bool boolean() const { return node_->boolean; }
  const std::string& name() const { return node_->name; }
  UnaryOp unary_op() const { return node_->unary_op; }
  BinaryOp binary_op() const { return node_->binary_op; }
  BigOpKind big_op() const { return node_->big_op; }
  const Expr& child(size_t i) const { return node_->children[i]; }
  const std::vector<Expr>& children() const { return node_->children; }
  const std::vector<Binder>& binders() const { return node_->binders; }

  explicit operator bool() const { return node_ != nullptr; }

  // builders
  static Expr nat_lit(uint64_t v, SourcePos p);
  static Expr bool_lit(bool v, SourcePos p);
  static Expr ident(std::string name, SourcePos p);
  static Expr bus_index(Expr base, Expr index, SourcePos p);
  static Expr apply(std::string name, std::vector<Expr> args, SourcePos p);
  static Expr unary(UnaryOp op, Expr operand, SourcePos p);
  static Expr binary(BinaryOp op, Expr lhs, Expr rhs, SourcePos p);
  static Expr big_op(BigOpKind op, std::vector<Binder> binders, Expr body, SourcePos p);
  static Expr set_display(std::vector<Expr> elems, SourcePos p);
  static Expr set_range(Expr x, Expr y, Expr z, SourcePos p);
  static Expr next_stack(Expr count, Expr body, SourcePos p);
  static Expr finally_range(Expr lo, Expr hi, Expr body, SourcePos p);
  static Expr globally_range(Expr lo, Expr hi, Expr body, SourcePos p);

 private:
  struct Node {
    Node(ExprKind k, SourcePos p) : kind(k), pos(p) {}
    ExprKind kind;
    SourcePos pos;
    uint64_t nat = 0;
    bool boolean = false;
    std::string name;
    UnaryOp unary_op = UnaryOp::Not;
    BinaryOp binary_op = BinaryOp::And;
    BigOpKind big_op = BigOpKind::And;
    std::vector<Expr> children;
    std::vector<Binder> binders;
  };
  std::shared_ptr<const Node> node_;
  static Expr make(Node n);
};

// --- declarations -----------------------------------------------------------

struct ParameterDecl {
  std::string name;
  Expr value;
  SourcePos pos;
};

struct BindingDecl {
  std::string name;
  Expr value;
  SourcePos pos;
};

struct FunctionAlt {
  enum class Guard : uint8_t { None, Expr, Otherwise };
  Guard guard_kind = Guard::None;
  Expr guard;  // boolean or pattern-match expression when guard_kind == Expr
  Expr body;
};

struct FunctionDecl {
  std::string name;
  std::vector<std::string> params;
  std::vector<FunctionAlt> alts;
  SourcePos pos;
};

struct EnumDecl {
  struct Entry {
    std::string name;
    std::vector<std::string> patterns;  // strings over {0,1,*}
    SourcePos pos;
  };
  std::string name;
  std::vector<Entry> entries;
  SourcePos pos;
};

using Definition = std::variant<BindingDecl, FunctionDecl, EnumDecl>;

struct SignalDecl {
  enum class Shape : uint8_t { Single, SizedBus, EnumBus };
  std::string name;
  Shape shape = Shape::Single;
  Expr width;             // SizedBus only
  std::string enum_type;  // EnumBus only
  SourcePos pos;
};

struct MainSection {
  std::vector<SignalDecl> inputs;
  std::vector<SignalDecl> outputs;
  std::vector<Expr> initially, preset, require, asserts, assume, guarantee;
};

struct SpecDocument {
  InfoSection info;
  std::vector<ParameterDecl> parameters;
  std::vector<Definition> definitions;
  MainSection main;
};

}  // namespace tlsf
