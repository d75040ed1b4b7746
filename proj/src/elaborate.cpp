#include "tlsf/elaborate.hpp"

#include <algorithm>
#include <cassert>

namespace tlsf {

using ltl::Formula;

// --- Value -------------------------------------------------------------------

Value Value::nat(uint64_t v) {
  Value r;
  r.kind_ = Kind::Nat;
  r.nat_ = v;
  return r;
}
Value Value::boolean(bool v) {
  Value r;
  r.kind_ = Kind::Bool;
  r.bool_ = v;
  return r;
}
Value Value::set(std::vector<Value> elems) {
  Value r;
  r.kind_ = Kind::Set;
  std::sort(elems.begin(), elems.end(),
            [](const Value& a, const Value& b) { return compare(a, b) < 0; });
  elems.erase(std::unique(elems.begin(), elems.end(),
                          [](const Value& a, const Value& b) { return compare(a, b) == 0; }),
              elems.end());
  r.elems_ = std::move(elems);
  return r;
}
Value Value::formula(Formula f) {
  Value r;
  r.kind_ = Kind::Ltl;
  r.ltl_ = std::move(f);
  return r;
}
Value Value::signal(std::string atom) {
  Value r;
  r.kind_ = Kind::Signal;
  r.name_ = std::move(atom);
  return r;
}
Value Value::bus(std::string name, uint64_t width) {
  Value r;
  r.kind_ = Kind::Bus;
  r.name_ = std::move(name);
  r.width_ = width;
  return r;
}
Value Value::enum_val(std::string enum_type, size_t width, std::vector<std::string> patterns) {
  Value r;
  r.kind_ = Kind::EnumVal;
  r.name_ = std::move(enum_type);
  r.width_ = width;
  r.patterns_ = std::move(patterns);
  return r;
}

const char* Value::kind_name() const {
  switch (kind_) {
    case Kind::Nat: return "number";
    case Kind::Bool: return "boolean";
    case Kind::Set: return "set";
    case Kind::Ltl: return "formula";
    case Kind::Signal: return "signal";
    case Kind::Bus: return "bus";
    case Kind::EnumVal: return "enumeration value";
  }
  return "?";
}

int compare(const Value& a, const Value& b) {
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_ ? -1 : 1;
  switch (a.kind_) {
    case Value::Kind::Nat:
      return a.nat_ < b.nat_ ? -1 : a.nat_ > b.nat_ ? 1 : 0;
    case Value::Kind::Bool:
      return a.bool_ == b.bool_ ? 0 : (a.bool_ ? 1 : -1);
    case Value::Kind::Set: {
      size_t n = std::min(a.elems_.size(), b.elems_.size());
      for (size_t i = 0; i < n; ++i)
        if (int c = compare(a.elems_[i], b.elems_[i]); c != 0) return c;
      return a.elems_.size() < b.elems_.size() ? -1 : a.elems_.size() > b.elems_.size() ? 1 : 0;
    }
    case Value::Kind::Ltl:
      return ltl::compare(a.ltl_, b.ltl_);
    case Value::Kind::Signal:
      return a.name_.compare(b.name_);
    case Value::Kind::Bus: {
      if (int c = a.name_.compare(b.name_); c != 0) return c;
      return a.width_ < b.width_ ? -1 : a.width_ > b.width_ ? 1 : 0;
    }
    case Value::Kind::EnumVal: {
      if (int c = a.name_.compare(b.name_); c != 0) return c;
      if (a.patterns_ != b.patterns_) return a.patterns_ < b.patterns_ ? -1 : 1;
      return 0;
    }
  }
  return 0;
}

// --- EnumDef -------------------------------------------------------------------

const EnumDef::Entry* EnumDef::find(const std::string& entry) const {
  for (const auto& e : entries)
    if (e.name == entry) return &e;
  return nullptr;
}

namespace {

// Do two patterns share a concrete valuation?
bool patterns_overlap(const std::string& a, const std::string& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if ((a[i] == '0' && b[i] == '1') || (a[i] == '1' && b[i] == '0')) return false;
  return true;
}

bool pattern_matches(const std::string& pattern, uint64_t valuation) {
  for (size_t i = 0; i < pattern.size(); ++i) {
    bool bit = (valuation >> i) & 1;
    if (pattern[i] == '0' && bit) return false;
    if (pattern[i] == '1' && !bit) return false;
  }
  return true;
}

}  // namespace

bool EnumDef::covers_all() const {
  if (width > 20) return false;  // conservatively treat huge enums as partial
  uint64_t total = uint64_t{1} << width;
  for (uint64_t v = 0; v < total; ++v) {
    bool hit = false;
    for (const auto& e : entries)
      for (const auto& p : e.patterns)
        if (pattern_matches(p, v)) {
          hit = true;
          break;
        }
    if (!hit) return false;
  }
  return true;
}

// --- Environment -----------------------------------------------------------------

void Environment::declare(const std::string& name, const char* what, SourcePos pos) {
  auto [it, inserted] = declared_.emplace(name, what);
  if (!inserted)
    elab_error(pos, "identifier '" + name + "' already declared as " + it->second);
}

// --- small helpers -----------------------------------------------------------------

namespace {

struct ScopeFrame {
  Environment& env;
  explicit ScopeFrame(Environment& e) : env(e) { env.scopes.emplace_back(); }
  ~ScopeFrame() { env.scopes.pop_back(); }
};

Formula lift_to_formula(const Value& v, SourcePos pos) {
  switch (v.kind()) {
    case Value::Kind::Ltl: return v.as_formula();
    case Value::Kind::Signal: return ltl::atom(v.name());
    case Value::Kind::Bool: return v.as_bool() ? ltl::tt() : ltl::ff();
    case Value::Kind::Bus:
      elab_error(pos, "bus '" + v.name() +
                          "' used as a formula; index it or compare it to an enumeration value");
    case Value::Kind::EnumVal:
      elab_error(pos, "enumeration value can only be compared against a bus");
    default:
      elab_error(pos, std::string(v.kind_name()) + " used where a formula is required");
  }
}

uint64_t need_nat(const Value& v, SourcePos pos, const char* what) {
  if (v.kind() != Value::Kind::Nat)
    elab_error(pos, std::string(what) + " must be a number, got " + v.kind_name());
  return v.as_nat();
}

bool is_formula_like(const Value& v) {
  return v.kind() == Value::Kind::Ltl || v.kind() == Value::Kind::Signal;
}

}  // namespace

// --- public helpers ---------------------------------------------------------------

std::vector<uint64_t> eval_range(uint64_t x, uint64_t y, uint64_t z) {
  if (x >= y) elab_error({}, "range {x, y .. z} requires x < y");
  std::vector<uint64_t> out;
  uint64_t step = y - x;
  for (uint64_t n = x; n <= z;) {
    out.push_back(n);
    if (z - n < step) break;
    n += step;
  }
  return out;
}

Formula expand_enum_comparison(const std::string& bus, uint64_t bus_width,
                               const std::vector<std::string>& patterns, bool equal) {
  assert(!patterns.empty());
  for (const auto& p : patterns)
    if (p.size() != bus_width)
      elab_error({}, "bus '" + bus + "' of width " + std::to_string(bus_width) +
                         " compared against a valuation of width " + std::to_string(p.size()));
  Formula disj;
  for (const auto& p : patterns) {
    Formula conj;
    for (size_t i = 0; i < p.size(); ++i) {
      if (p[i] == '*') continue;
      Formula lit = ltl::atom(bus + "[" + std::to_string(i) + "]");
      if (p[i] == '0') lit = ltl::lnot(lit);
      conj = conj ? ltl::land(conj, lit) : lit;
    }
    if (!conj) conj = ltl::tt();  // all-wildcard pattern
    disj = disj ? ltl::lor(disj, conj) : conj;
  }
  return equal ? disj : ltl::lnot(disj);
}

std::optional<Formula> implicit_enum_constraint(const std::string& bus, const EnumDef& def) {
  if (def.covers_all()) return std::nullopt;
  Formula disj;
  for (const auto& e : def.entries) {
    Formula c = expand_enum_comparison(bus, def.width, e.patterns, true);
    disj = disj ? ltl::lor(disj, c) : c;
  }
  return ltl::globally(disj);
}

Formula stack_next(uint64_t n, Formula f) {
  for (uint64_t i = 0; i < n; ++i) f = ltl::next(f);
  return f;
}

Formula finally_range(uint64_t lo, uint64_t hi, Formula f) {
  assert(lo <= hi);
  Formula inner = f;
  for (uint64_t i = 0; i < hi - lo; ++i) inner = ltl::lor(f, ltl::next(inner));
  return stack_next(lo, inner);
}

Formula globally_range(uint64_t lo, uint64_t hi, Formula f) {
  assert(lo <= hi);
  Formula inner = f;
  for (uint64_t i = 0; i < hi - lo; ++i) inner = ltl::land(f, ltl::next(inner));
  return stack_next(lo, inner);
}

// --- evaluation --------------------------------------------------------------------

namespace {

Value force_global(const std::string& name, Environment& env, SourcePos pos);
Value apply_function(const std::string& name, const std::vector<Value>& args, Environment& env,
                     SourcePos pos);

Value lookup(const std::string& name, Environment& env, SourcePos pos) {
  for (auto it = env.scopes.rbegin(); it != env.scopes.rend(); ++it) {
    auto hit = it->find(name);
    if (hit != it->end()) return hit->second;
  }
  env.used.insert(name);
  if (auto it = env.globals.find(name); it != env.globals.end()) return it->second;
  if (env.pending.count(name)) return force_global(name, env, pos);
  if (env.functions.count(name))
    elab_error(pos, "function '" + name + "' used without arguments");
  if (auto it = env.enum_entries.find(name); it != env.enum_entries.end())
    return Value::enum_val(it->second.first->name, it->second.first->width,
                           it->second.second->patterns);
  if (auto it = env.signals.find(name); it != env.signals.end()) {
    if (it->second.is_bus) return Value::bus(name, it->second.width);
    return Value::signal(name);
  }
  elab_error(pos, "unbound identifier '" + name + "'");
}

Value force_global(const std::string& name, Environment& env, SourcePos pos) {
  auto it = env.pending.find(name);
  assert(it != env.pending.end());
  if (!env.forcing.insert(name).second)
    elab_error(pos, "cyclic definition of '" + name + "'");
  // definitions are top level: evaluate without local scopes in view
  std::vector<std::map<std::string, Value>> saved;
  saved.swap(env.scopes);
  Value v = eval(it->second->value, env);
  saved.swap(env.scopes);
  env.forcing.erase(name);
  env.globals.emplace(name, v);
  env.pending.erase(name);
  return v;
}

Value eval_binary(const Expr& expr, Environment& env);
Value eval_big_op(const Expr& expr, Environment& env);

// Structural pattern match of a formula against a pattern expression.
// Identifiers in the pattern bind subformulas ('_' never binds); a repeated
// identifier must match a structurally equal subformula.
bool match_pattern(const Formula& f, const Expr& pat,
                   std::map<std::string, Formula>& bound) {
  switch (pat.kind()) {
    case ExprKind::Ident: {
      if (pat.name() == "_") return true;
      auto [it, inserted] = bound.emplace(pat.name(), f);
      if (!inserted) return it->second == f;
      return true;
    }
    case ExprKind::BoolLit:
      return f.op() == (pat.boolean() ? ltl::Op::True : ltl::Op::False);
    case ExprKind::Unary: {
      ltl::Op want;
      switch (pat.unary_op()) {
        case UnaryOp::Not: want = ltl::Op::Not; break;
        case UnaryOp::Next: want = ltl::Op::Next; break;
        case UnaryOp::Globally: want = ltl::Op::Globally; break;
        case UnaryOp::Finally: want = ltl::Op::Finally; break;
        default:
          elab_error(pat.pos(), "invalid operator in pattern");
      }
      return f.op() == want && match_pattern(f.left(), pat.child(0), bound);
    }
    case ExprKind::Binary: {
      ltl::Op want;
      switch (pat.binary_op()) {
        case BinaryOp::And: want = ltl::Op::And; break;
        case BinaryOp::Or: want = ltl::Op::Or; break;
        case BinaryOp::Implies: want = ltl::Op::Implies; break;
        case BinaryOp::Iff: want = ltl::Op::Iff; break;
        case BinaryOp::Until: want = ltl::Op::Until; break;
        case BinaryOp::Release: want = ltl::Op::Release; break;
        case BinaryOp::WeakUntil: want = ltl::Op::WeakUntil; break;
        default:
          elab_error(pat.pos(), "invalid operator in pattern");
      }
      return f.op() == want && match_pattern(f.left(), pat.child(0), bound) &&
             match_pattern(f.right(), pat.child(1), bound);
    }
    default:
      elab_error(pat.pos(), "invalid pattern; patterns are built from connectives, "
                            "identifiers and '_'");
  }
}

Value apply_function(const std::string& name, const std::vector<Value>& args, Environment& env,
                     SourcePos pos) {
  auto it = env.functions.find(name);
  if (it == env.functions.end()) {
    if (env.globals.count(name) || env.pending.count(name))
      elab_error(pos, "'" + name + "' is not a function");
    elab_error(pos, "unbound function '" + name + "'");
  }
  env.used.insert(name);
  const FunctionDecl& fn = *it->second;
  if (args.size() != fn.params.size())
    elab_error(pos, "function '" + name + "' expects " + std::to_string(fn.params.size()) +
                        " arguments, got " + std::to_string(args.size()));
  if (++env.depth > env.options.recursion_limit) {
    --env.depth;
    elab_error(pos, "recursion depth limit exceeded in function '" + name + "'");
  }

  ScopeFrame frame(env);
  for (size_t i = 0; i < args.size(); ++i) env.scopes.back()[fn.params[i]] = args[i];

  std::optional<Value> result;
  for (const auto& alt : fn.alts) {
    bool fires = false;
    std::map<std::string, Formula> pattern_bound;
    if (alt.guard_kind == FunctionAlt::Guard::None ||
        alt.guard_kind == FunctionAlt::Guard::Otherwise) {
      fires = true;
    } else if (alt.guard.kind() == ExprKind::Binary &&
               alt.guard.binary_op() == BinaryOp::PatternMatch) {
      Value scrut = eval(alt.guard.child(0), env);
      if (!is_formula_like(scrut))
        elab_error(alt.guard.pos(), "pattern match requires a formula, got " +
                                        std::string(scrut.kind_name()));
      fires = match_pattern(lift_to_formula(scrut, alt.guard.pos()), alt.guard.child(1),
                            pattern_bound);
    } else {
      Value g = eval(alt.guard, env);
      if (g.kind() != Value::Kind::Bool)
        elab_error(alt.guard.pos(),
                   "guard must be a boolean expression, got " + std::string(g.kind_name()));
      fires = g.as_bool();
    }
    if (!fires) continue;

    ScopeFrame body_frame(env);
    for (auto& [n, f] : pattern_bound) env.scopes.back()[n] = Value::formula(f);
    result = eval(alt.body, env);
    break;
  }
  --env.depth;
  if (!result) elab_error(pos, "no guard of function '" + name + "' applies");

  // booleans and signals embed into formulas, so those three share one class
  auto kind_class = [](Value::Kind k) {
    return k == Value::Kind::Bool || k == Value::Kind::Signal ? Value::Kind::Ltl : k;
  };
  auto [kit, inserted] = env.function_kind.emplace(name, kind_class(result->kind()));
  if (!inserted && kit->second != kind_class(result->kind()))
    elab_error(pos, "function '" + name + "' produced mixed result kinds");
  return *result;
}

Value eval_unary(const Expr& expr, Environment& env) {
  SourcePos pos = expr.pos();
  switch (expr.unary_op()) {
    case UnaryOp::Not: {
      Value v = eval(expr.child(0), env);
      if (v.kind() == Value::Kind::Bool) return Value::boolean(!v.as_bool());
      if (is_formula_like(v)) return Value::formula(ltl::lnot(lift_to_formula(v, pos)));
      elab_error(pos, std::string("'!' applied to ") + v.kind_name());
    }
    case UnaryOp::Next:
    case UnaryOp::Globally:
    case UnaryOp::Finally: {
      Value v = eval(expr.child(0), env);
      if (!is_formula_like(v) && v.kind() != Value::Kind::Bool)
        elab_error(pos, std::string("temporal operator applied to ") + v.kind_name());
      Formula f = lift_to_formula(v, pos);
      switch (expr.unary_op()) {
        case UnaryOp::Next: return Value::formula(ltl::next(f));
        case UnaryOp::Globally: return Value::formula(ltl::globally(f));
        default: return Value::formula(ltl::eventually(f));
      }
    }
    case UnaryOp::SetSize: {
      Value v = eval(expr.child(0), env);
      if (v.kind() != Value::Kind::Set)
        elab_error(pos, std::string("size of ") + v.kind_name());
      return Value::nat(v.elements().size());
    }
    case UnaryOp::Min:
    case UnaryOp::Max: {
      Value v = eval(expr.child(0), env);
      if (v.kind() != Value::Kind::Set)
        elab_error(pos, std::string("MIN/MAX of ") + v.kind_name());
      if (v.elements().empty()) elab_error(pos, "MIN/MAX of an empty set");
      uint64_t best = 0;
      bool first = true;
      for (const auto& e : v.elements()) {
        if (e.kind() != Value::Kind::Nat) elab_error(pos, "MIN/MAX of a non-numeric set");
        uint64_t n = e.as_nat();
        if (first)
          best = n;
        else
          best = expr.unary_op() == UnaryOp::Min ? std::min(best, n) : std::max(best, n);
        first = false;
      }
      return Value::nat(best);
    }
    case UnaryOp::SizeOf: {
      Value v = eval(expr.child(0), env);
      if (v.kind() != Value::Kind::Bus)
        elab_error(pos, std::string("SIZEOF applied to ") + v.kind_name() +
                            "; it measures the width of a bus");
      return Value::nat(v.width());
    }
  }
  elab_error(pos, "unreachable unary operator");
}

Value eval_binary(const Expr& expr, Environment& env) {
  SourcePos pos = expr.pos();
  BinaryOp op = expr.binary_op();

  // arithmetic
  auto arith = [&](auto f) {
    Value a = eval(expr.child(0), env);
    Value b = eval(expr.child(1), env);
    uint64_t x = need_nat(a, pos, "arithmetic operand");
    uint64_t y = need_nat(b, pos, "arithmetic operand");
    return Value::nat(f(x, y));
  };

  constexpr uint64_t kNatMax = (uint64_t{1} << 63) - 1;
  switch (op) {
    case BinaryOp::Mul:
      return arith([&](uint64_t x, uint64_t y) {
        if (y != 0 && x > kNatMax / y) elab_error(pos, "numeric overflow");
        return x * y;
      });
    case BinaryOp::Div:
      return arith([&](uint64_t x, uint64_t y) {
        if (y == 0) elab_error(pos, "division by zero");
        return x / y;
      });
    case BinaryOp::Mod:
      return arith([&](uint64_t x, uint64_t y) {
        if (y == 0) elab_error(pos, "modulo by zero");
        return x % y;
      });
    case BinaryOp::Add:
      return arith([&](uint64_t x, uint64_t y) {
        if (x > kNatMax - y) elab_error(pos, "numeric overflow");
        return x + y;
      });
    case BinaryOp::Sub:
      return arith([&](uint64_t x, uint64_t y) {
        if (y > x) elab_error(pos, "natural subtraction underflow");
        return x - y;
      });

    case BinaryOp::SetMinus:
    case BinaryOp::Inter:
    case BinaryOp::Union: {
      Value a = eval(expr.child(0), env);
      Value b = eval(expr.child(1), env);
      if (a.kind() != Value::Kind::Set || b.kind() != Value::Kind::Set)
        elab_error(pos, "set operator applied to " + std::string(a.kind_name()) + " and " +
                            b.kind_name());
      std::vector<Value> out;
      if (op == BinaryOp::Union) {
        out = a.elements();
        out.insert(out.end(), b.elements().begin(), b.elements().end());
      } else {
        for (const auto& e : a.elements()) {
          bool in_b = std::any_of(b.elements().begin(), b.elements().end(),
                                  [&](const Value& x) { return x == e; });
          if (op == BinaryOp::Inter ? in_b : !in_b) out.push_back(e);
        }
      }
      return Value::set(std::move(out));
    }

    case BinaryOp::Eq:
    case BinaryOp::Neq: {
      Value a = eval(expr.child(0), env);
      Value b = eval(expr.child(1), env);
      bool eq = op == BinaryOp::Eq;
      if (a.kind() == Value::Kind::Nat && b.kind() == Value::Kind::Nat)
        return Value::boolean((a.as_nat() == b.as_nat()) == eq);
      // bus against enumeration valuation, either order
      const Value* bus = nullptr;
      const Value* ev = nullptr;
      if (a.kind() == Value::Kind::Bus && b.kind() == Value::Kind::EnumVal) {
        bus = &a; ev = &b;
      } else if (a.kind() == Value::Kind::EnumVal && b.kind() == Value::Kind::Bus) {
        bus = &b; ev = &a;
      }
      if (bus) {
        if (bus->width() != ev->width())
          elab_error(pos, "bus '" + bus->name() + "' of width " + std::to_string(bus->width()) +
                              " compared against a valuation of width " +
                              std::to_string(ev->width()));
        return Value::formula(expand_enum_comparison(bus->name(), bus->width(), ev->patterns(), eq));
      }
      if (a.kind() == Value::Kind::Bus && b.kind() == Value::Kind::Bus)
        elab_error(pos, "comparison between two buses is not defined; "
                        "compare a bus against an enumeration value");
      elab_error(pos, std::string("'==' is not defined on ") + a.kind_name() + " and " +
                          b.kind_name());
    }

    case BinaryOp::Lt:
    case BinaryOp::Le:
    case BinaryOp::Gt:
    case BinaryOp::Ge: {
      Value a = eval(expr.child(0), env);
      Value b = eval(expr.child(1), env);
      uint64_t x = need_nat(a, pos, "comparison operand");
      uint64_t y = need_nat(b, pos, "comparison operand");
      switch (op) {
        case BinaryOp::Lt: return Value::boolean(x < y);
        case BinaryOp::Le: return Value::boolean(x <= y);
        case BinaryOp::Gt: return Value::boolean(x > y);
        default: return Value::boolean(x >= y);
      }
    }

    case BinaryOp::In: {
      Value a = eval(expr.child(0), env);
      Value b = eval(expr.child(1), env);
      if (b.kind() != Value::Kind::Set)
        elab_error(pos, std::string("membership test against ") + b.kind_name());
      if (!b.elements().empty() && b.elements()[0].kind() != a.kind())
        elab_error(pos, std::string("membership test of ") + a.kind_name() + " in a set of " +
                            b.elements()[0].kind_name() + "s");
      bool found = std::any_of(b.elements().begin(), b.elements().end(),
                               [&](const Value& x) { return x == a; });
      return Value::boolean(found);
    }

    case BinaryOp::And:
    case BinaryOp::Or:
    case BinaryOp::Implies:
    case BinaryOp::Iff: {
      Value a = eval(expr.child(0), env);
      Value b = eval(expr.child(1), env);
      if (a.kind() == Value::Kind::Bool && b.kind() == Value::Kind::Bool) {
        bool x = a.as_bool(), y = b.as_bool();
        switch (op) {
          case BinaryOp::And: return Value::boolean(x && y);
          case BinaryOp::Or: return Value::boolean(x || y);
          case BinaryOp::Implies: return Value::boolean(!x || y);
          default: return Value::boolean(x == y);
        }
      }
      if ((is_formula_like(a) || a.kind() == Value::Kind::Bool) &&
          (is_formula_like(b) || b.kind() == Value::Kind::Bool)) {
        Formula l = lift_to_formula(a, pos), r = lift_to_formula(b, pos);
        switch (op) {
          case BinaryOp::And: return Value::formula(ltl::land(l, r));
          case BinaryOp::Or: return Value::formula(ltl::lor(l, r));
          case BinaryOp::Implies: return Value::formula(ltl::implies(l, r));
          default: return Value::formula(ltl::iff(l, r));
        }
      }
      elab_error(pos, std::string("boolean connective applied to ") + a.kind_name() + " and " +
                          b.kind_name());
    }

    case BinaryOp::Until:
    case BinaryOp::Release:
    case BinaryOp::WeakUntil: {
      Value a = eval(expr.child(0), env);
      Value b = eval(expr.child(1), env);
      Formula l = lift_to_formula(a, pos), r = lift_to_formula(b, pos);
      switch (op) {
        case BinaryOp::Until: return Value::formula(ltl::until(l, r));
        case BinaryOp::Release: return Value::formula(ltl::release(l, r));
        default: return Value::formula(ltl::weak_until(l, r));
      }
    }

    case BinaryOp::PatternMatch:
      elab_error(pos, "pattern match '~' is only meaningful as a function guard");
  }
  elab_error(pos, "unreachable binary operator");
}

Value eval_big_op(const Expr& expr, Environment& env) {
  SourcePos pos = expr.pos();
  const auto& binders = expr.binders();

  std::vector<Value> items;
  ScopeFrame frame(env);

  // enumerate the binder cross product; earlier binders are in scope for
  // later binder set expressions
  std::function<void(size_t)> walk = [&](size_t i) {
    if (i == binders.size()) {
      items.push_back(eval(expr.child(0), env));
      return;
    }
    const Binder& b = binders[i];
    std::vector<Value> domain;
    if (b.set) {
      Value s = eval(*b.set, env);
      if (s.kind() != Value::Kind::Set)
        elab_error(b.pos, std::string("binder domain must be a set, got ") + s.kind_name());
      domain = s.elements();
    } else {
      uint64_t lo = need_nat(eval(*b.lo, env), b.pos, "range bound");
      uint64_t hi = need_nat(eval(*b.hi, env), b.pos, "range bound");
      if (!b.lo_inclusive) {
        if (lo == uint64_t(-1)) elab_error(b.pos, "numeric overflow");
        ++lo;
      }
      bool empty = b.hi_inclusive ? hi < lo : hi <= lo;
      if (!empty) {
        uint64_t top = b.hi_inclusive ? hi : hi - 1;
        for (uint64_t v = lo; v <= top; ++v) {
          domain.push_back(Value::nat(v));
          if (v == top) break;
        }
      }
    }
    for (const auto& v : domain) {
      env.scopes.back()[b.name] = v;
      walk(i + 1);
    }
    env.scopes.back().erase(b.name);
  };
  walk(0);

  BigOpKind kind = expr.big_op();
  if (items.empty()) {
    switch (kind) {
      case BigOpKind::And: return Value::formula(ltl::tt());
      case BigOpKind::Or: return Value::formula(ltl::ff());
      case BigOpKind::Sum: return Value::nat(0);
      case BigOpKind::Prod: return Value::nat(1);
      case BigOpKind::Union: return Value::set({});
      case BigOpKind::Inter:
        elab_error(pos, "intersection over an empty family has no identity");
    }
  }

  switch (kind) {
    case BigOpKind::Sum:
    case BigOpKind::Prod: {
      constexpr uint64_t kNatMax = (uint64_t{1} << 63) - 1;
      uint64_t acc = kind == BigOpKind::Sum ? 0 : 1;
      for (const auto& v : items) {
        uint64_t n = need_nat(v, pos, "big operator operand");
        if (kind == BigOpKind::Sum) {
          if (acc > kNatMax - n) elab_error(pos, "numeric overflow");
          acc += n;
        } else {
          if (n != 0 && acc > kNatMax / n) elab_error(pos, "numeric overflow");
          acc *= n;
        }
      }
      return Value::nat(acc);
    }
    case BigOpKind::Union:
    case BigOpKind::Inter: {
      for (const auto& v : items)
        if (v.kind() != Value::Kind::Set)
          elab_error(pos, std::string("big set operator over ") + v.kind_name());
      std::vector<Value> acc = items[0].elements();
      for (size_t i = 1; i < items.size(); ++i) {
        std::vector<Value> next;
        if (kind == BigOpKind::Union) {
          next = acc;
          next.insert(next.end(), items[i].elements().begin(), items[i].elements().end());
        } else {
          for (const auto& e : acc)
            if (std::any_of(items[i].elements().begin(), items[i].elements().end(),
                            [&](const Value& x) { return x == e; }))
              next.push_back(e);
        }
        acc = Value::set(std::move(next)).elements();
      }
      return Value::set(std::move(acc));
    }
    case BigOpKind::And:
    case BigOpKind::Or: {
      bool any_formula = std::any_of(items.begin(), items.end(), is_formula_like);
      if (any_formula) {
        Formula acc;
        for (const auto& v : items) {
          Formula f = lift_to_formula(v, pos);
          if (!acc)
            acc = f;
          else
            acc = kind == BigOpKind::And ? ltl::land(acc, f) : ltl::lor(acc, f);
        }
        return Value::formula(acc);
      }
      bool acc = kind == BigOpKind::And;
      for (const auto& v : items) {
        if (v.kind() != Value::Kind::Bool)
          elab_error(pos, std::string("big boolean operator over ") + v.kind_name());
        acc = kind == BigOpKind::And ? (acc && v.as_bool()) : (acc || v.as_bool());
      }
      return Value::boolean(acc);
    }
  }
  elab_error(pos, "unreachable big operator");
}

}  // namespace

Value eval(const Expr& expr, Environment& env) {
  SourcePos pos = expr.pos();
  switch (expr.kind()) {
    case ExprKind::NatLit:
      return Value::nat(expr.nat());
    case ExprKind::BoolLit:
      // literal truth values are formula constants; folding them into the
      // boolean domain would simplify formulas behind the printer's back
      return Value::formula(expr.boolean() ? ltl::tt() : ltl::ff());
    case ExprKind::Ident:
      return lookup(expr.name(), env, pos);
    case ExprKind::BusIndex: {
      Value base = eval(expr.child(0), env);
      if (base.kind() != Value::Kind::Bus)
        elab_error(pos, std::string("indexing into ") + base.kind_name() +
                            "; only buses can be indexed");
      uint64_t idx = need_nat(eval(expr.child(1), env), pos, "bus index");
      if (idx >= base.width())
        elab_error(pos, "index " + std::to_string(idx) + " out of bounds for bus '" +
                            base.name() + "' of width " + std::to_string(base.width()));
      return Value::signal(base.name() + "[" + std::to_string(idx) + "]");
    }
    case ExprKind::Apply: {
      std::vector<Value> args;
      args.reserve(expr.children().size());
      for (const auto& a : expr.children()) args.push_back(eval(a, env));
      return apply_function(expr.name(), args, env, pos);
    }
    case ExprKind::Unary:
      return eval_unary(expr, env);
    case ExprKind::Binary:
      return eval_binary(expr, env);
    case ExprKind::BigOp:
      return eval_big_op(expr, env);
    case ExprKind::SetDisplay: {
      std::vector<Value> elems;
      for (const auto& e : expr.children()) elems.push_back(eval(e, env));
      for (size_t i = 1; i < elems.size(); ++i)
        if (elems[i].kind() != elems[0].kind())
          elab_error(pos, std::string("set elements must share one kind; found ") +
                              elems[0].kind_name() + " and " + elems[i].kind_name());
      return Value::set(std::move(elems));
    }
    case ExprKind::SetRange: {
      uint64_t x = need_nat(eval(expr.child(0), env), pos, "range bound");
      uint64_t y = need_nat(eval(expr.child(1), env), pos, "range bound");
      uint64_t z = need_nat(eval(expr.child(2), env), pos, "range bound");
      if (x >= y) elab_error(pos, "range {x, y .. z} requires x < y");
      std::vector<Value> elems;
      for (uint64_t n : eval_range(x, y, z)) elems.push_back(Value::nat(n));
      return Value::set(std::move(elems));
    }
    case ExprKind::NextStack: {
      uint64_t n = need_nat(eval(expr.child(0), env), pos, "X[n] count");
      Formula f = lift_to_formula(eval(expr.child(1), env), pos);
      return Value::formula(stack_next(n, f));
    }
    case ExprKind::FinallyRange:
    case ExprKind::GloballyRange: {
      uint64_t lo = need_nat(eval(expr.child(0), env), pos, "range bound");
      uint64_t hi = need_nat(eval(expr.child(1), env), pos, "range bound");
      if (hi < lo) elab_error(pos, "bounded temporal operator requires n <= m");
      Formula f = lift_to_formula(eval(expr.child(2), env), pos);
      return Value::formula(expr.kind() == ExprKind::FinallyRange ? finally_range(lo, hi, f)
                                                                  : globally_range(lo, hi, f));
    }
  }
  elab_error(pos, "unreachable expression kind");
}

// --- bind_globals -------------------------------------------------------------------

Environment bind_globals(const SpecDocument& doc, const std::map<std::string, uint64_t>& overrides,
                         const ElabOptions& options) {
  Environment env;
  env.options = options;

  std::set<std::string> param_names;
  for (const auto& p : doc.parameters) param_names.insert(p.name);
  for (const auto& [name, value] : overrides)
    if (!param_names.count(name))
      elab_error({}, "unknown parameter '" + name + "' in override");

  // register definitions first so parameters may refer to them lazily
  for (const auto& def : doc.definitions) {
    if (const auto* b = std::get_if<BindingDecl>(&def)) {
      env.declare(b->name, "a definition", b->pos);
      env.pending.emplace(b->name, b);
    } else if (const auto* f = std::get_if<FunctionDecl>(&def)) {
      env.declare(f->name, "a function", f->pos);
      std::set<std::string> formals;
      for (const auto& p : f->params)
        if (!formals.insert(p).second)
          elab_error(f->pos, "duplicate parameter '" + p + "' in function '" + f->name + "'");
      env.functions.emplace(f->name, f);
    } else {
      const auto& e = std::get<EnumDecl>(def);
      env.declare(e.name, "an enumeration", e.pos);
      EnumDef def2;
      def2.name = e.name;
      def2.width = e.entries.front().patterns.front().size();
      if (def2.width == 0) elab_error(e.pos, "enumeration patterns must be nonempty");
      for (const auto& entry : e.entries) {
        env.declare(entry.name, "an enumeration value", entry.pos);
        for (const auto& p : entry.patterns)
          if (p.size() != def2.width)
            elab_error(entry.pos, "enumeration '" + e.name + "' mixes pattern widths");
        def2.entries.push_back({entry.name, entry.patterns});
      }
      // distinct entries may not share a concrete valuation
      for (size_t i = 0; i < def2.entries.size(); ++i)
        for (size_t j = i + 1; j < def2.entries.size(); ++j)
          for (const auto& pa : def2.entries[i].patterns)
            for (const auto& pb : def2.entries[j].patterns)
              if (patterns_overlap(pa, pb))
                elab_error(e.pos, "enumeration entries '" + def2.entries[i].name + "' and '" +
                                      def2.entries[j].name + "' overlap");
      auto [it, ok] = env.enums.emplace(e.name, std::move(def2));
      (void)ok;
      for (const auto& entry : it->second.entries)
        env.enum_entries.emplace(entry.name, std::make_pair(&it->second, &entry));
    }
  }

  // parameters in declaration order, overrides substituted
  for (const auto& p : doc.parameters) {
    env.declare(p.name, "a parameter", p.pos);
    auto ov = overrides.find(p.name);
    if (ov != overrides.end()) {
      env.globals.emplace(p.name, Value::nat(ov->second));
      continue;
    }
    Value v = eval(p.value, env);
    if (v.kind() != Value::Kind::Nat)
      elab_error(p.pos, "parameter '" + p.name + "' must evaluate to a number, got " +
                            std::string(v.kind_name()));
    env.globals.emplace(p.name, v);
  }
  return env;
}

// --- elaborate ----------------------------------------------------------------------

bool BasicSpec::operator==(const BasicSpec& other) const {
  auto eq_info = [](const InfoSection& a, const InfoSection& b) {
    return a.title == b.title && a.description == b.description &&
           a.semantics.model == b.semantics.model && a.semantics.strict == b.semantics.strict &&
           a.target.model == b.target.model && a.tags == b.tags;
  };
  return eq_info(info, other.info) && inputs == other.inputs && outputs == other.outputs &&
         initially == other.initially && preset == other.preset && require == other.require &&
         asserts == other.asserts && assume == other.assume && guarantee == other.guarantee;
}

ElabResult elaborate(const SpecDocument& doc, const std::map<std::string, uint64_t>& overrides,
                     const ElabOptions& options) {
  Environment env = bind_globals(doc, overrides, options);
  ElabResult result;
  BasicSpec& out = result.spec;
  out.info = doc.info;

  struct EnumBusRef {
    std::string bus;
    const EnumDef* def;
    SignalInfo::Dir dir;
  };
  std::vector<EnumBusRef> enum_buses;

  auto declare_signals = [&](const std::vector<SignalDecl>& decls, SignalInfo::Dir dir,
                             std::vector<std::string>& atoms) {
    for (const auto& d : decls) {
      env.declare(d.name, dir == SignalInfo::Dir::Input ? "an input" : "an output", d.pos);
      SignalInfo info;
      info.dir = dir;
      switch (d.shape) {
        case SignalDecl::Shape::Single:
          info.is_bus = false;
          atoms.push_back(d.name);
          break;
        case SignalDecl::Shape::SizedBus: {
          uint64_t w = need_nat(eval(d.width, env), d.pos, "bus width");
          if (w < 1) elab_error(d.pos, "bus '" + d.name + "' must have width at least 1");
          info.is_bus = true;
          info.width = w;
          for (uint64_t i = 0; i < w; ++i)
            atoms.push_back(d.name + "[" + std::to_string(i) + "]");
          break;
        }
        case SignalDecl::Shape::EnumBus: {
          auto it = env.enums.find(d.enum_type);
          if (it == env.enums.end())
            elab_error(d.pos, "unknown enumeration '" + d.enum_type + "' in declaration of '" +
                                  d.name + "'");
          info.is_bus = true;
          info.width = it->second.width;
          info.enum_type = d.enum_type;
          for (uint64_t i = 0; i < info.width; ++i)
            atoms.push_back(d.name + "[" + std::to_string(i) + "]");
          enum_buses.push_back({d.name, &it->second, dir});
          break;
        }
      }
      env.signals.emplace(d.name, info);
    }
  };

  declare_signals(doc.main.inputs, SignalInfo::Dir::Input, out.inputs);
  declare_signals(doc.main.outputs, SignalInfo::Dir::Output, out.outputs);

  auto eval_section = [&](const std::vector<Expr>& exprs, std::vector<Formula>& target) {
    for (const auto& e : exprs) {
      Value v = eval(e, env);
      if (!is_formula_like(v) && v.kind() != Value::Kind::Bool)
        elab_error(e.pos(), std::string("section expression must be a formula, got ") +
                                v.kind_name());
      target.push_back(lift_to_formula(v, e.pos()));
    }
  };

  eval_section(doc.main.initially, out.initially);
  eval_section(doc.main.preset, out.preset);
  eval_section(doc.main.require, out.require);
  eval_section(doc.main.asserts, out.asserts);
  eval_section(doc.main.assume, out.assume);
  eval_section(doc.main.guarantee, out.guarantee);

  // enum-typed buses with unnamed valuations constrain inputs via REQUIRE and
  // outputs via ASSERT
  for (const auto& eb : enum_buses) {
    auto c = implicit_enum_constraint(eb.bus, *eb.def);
    if (!c) continue;
    if (eb.dir == SignalInfo::Dir::Input)
      out.require.push_back(*c);
    else
      out.asserts.push_back(*c);
  }

  // unused-definition warnings
  for (const auto& def : doc.definitions) {
    const std::string* name = nullptr;
    if (const auto* b = std::get_if<BindingDecl>(&def)) name = &b->name;
    if (const auto* f = std::get_if<FunctionDecl>(&def)) name = &f->name;
    if (name && !env.used.count(*name))
      result.warnings.push_back("unused definition '" + *name + "'");
  }
  for (const auto& p : doc.parameters)
    if (!env.used.count(p.name) && !overrides.count(p.name))
      result.warnings.push_back("unused parameter '" + p.name + "'");

  return result;
}

}  // namespace tlsf
