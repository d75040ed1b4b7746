#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace tlsf::ltl {

enum class Op : uint8_t {
  True,
  False,
  Atom,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Next,
  Globally,
  Finally,
  Until,
  Release,
  WeakUntil,
};

constexpr bool is_unary(Op op) {
  return op == Op::Not || op == Op::Next || op == Op::Globally || op == Op::Finally;
}
constexpr bool is_binary(Op op) {
  switch (op) {
    case Op::And:
    case Op::Or:
    case Op::Implies:
    case Op::Iff:
    case Op::Until:
    case Op::Release:
    case Op::WeakUntil:
      return true;
    default:
      return false;
  }
}
constexpr bool is_temporal(Op op) {
  switch (op) {
    case Op::Next:
    case Op::Globally:
    case Op::Finally:
    case Op::Until:
    case Op::Release:
    case Op::WeakUntil:
      return true;
    default:
      return false;
  }
}

/// Immutable plain-LTL formula. Copies share nodes; equality is structural.
class Formula {
 public:
  Formula() = default;

  Op op() const;
  const std::string& atom_name() const;
  const Formula& left() const;  // unary operand or binary lhs
  const Formula& right() const;
  size_t hash() const;

  explicit operator bool() const { return node_ != nullptr; }

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

  friend Formula tt();
  friend Formula ff();
  friend Formula atom(std::string name);
  friend Formula make_unary(Op op, Formula f);
  friend Formula make_binary(Op op, Formula l, Formula r);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

Formula tt();
Formula ff();
Formula atom(std::string name);
Formula make_unary(Op op, Formula f);
Formula make_binary(Op op, Formula l, Formula r);

inline Formula lnot(Formula f) { return make_unary(Op::Not, std::move(f)); }
inline Formula next(Formula f) { return make_unary(Op::Next, std::move(f)); }
inline Formula globally(Formula f) { return make_unary(Op::Globally, std::move(f)); }
inline Formula eventually(Formula f) { return make_unary(Op::Finally, std::move(f)); }
inline Formula land(Formula l, Formula r) { return make_binary(Op::And, std::move(l), std::move(r)); }
inline Formula lor(Formula l, Formula r) { return make_binary(Op::Or, std::move(l), std::move(r)); }
inline Formula implies(Formula l, Formula r) { return make_binary(Op::Implies, std::move(l), std::move(r)); }
inline Formula iff(Formula l, Formula r) { return make_binary(Op::Iff, std::move(l), std::move(r)); }
inline Formula until(Formula l, Formula r) { return make_binary(Op::Until, std::move(l), std::move(r)); }
inline Formula release(Formula l, Formula r) { return make_binary(Op::Release, std::move(l), std::move(r)); }
inline Formula weak_until(Formula l, Formula r) { return make_binary(Op::WeakUntil, std::move(l), std::move(r)); }

/// Total order on formulas (used to canonicalize sets of values).
int compare(const Formula& a, const Formula& b);

/// Nesting depth of temporal operators.
size_t temporal_depth(const Formula& f);

/// Number of nodes.
size_t size(const Formula& f);

/// Atom names occurring in f, sorted.
std::vector<std::string> atoms_of(const Formula& f);
void collect_atoms(const Formula& f, std::set<std::string>& out);

/// Compact infix rendering with minimal parentheses (diagnostics, reports).
std::string to_string(const Formula& f);

/// Rendering in the fully parenthesized basic grammar: every node wrapped in "(...)".
std::string to_basic_string(const Formula& f);

}  // namespace tlsf::ltl
