#include "tlsf/ltl.hpp"

#include <cassert>
#include <functional>

namespace tlsf::ltl {

struct Formula::Node {
  Op op;
  std::string atom;
  Formula lhs, rhs;
  size_t hash;
};

Op Formula::op() const { return node_->op; }
const std::string& Formula::atom_name() const { return node_->atom; }
const Formula& Formula::left() const { return node_->lhs; }
const Formula& Formula::right() const { return node_->rhs; }
size_t Formula::hash() const { return node_->hash; }

namespace {

size_t mix(size_t seed, size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

const char* op_symbol(Op op) {
  switch (op) {
    case Op::True: return "true";
    case Op::False: return "false";
    case Op::Atom: return "";
    case Op::Not: return "!";
    case Op::And: return "&&";
    case Op::Or: return "||";
    case Op::Implies: return "->";
    case Op::Iff: return "<->";
    case Op::Next: return "X";
    case Op::Globally: return "G";
    case Op::Finally: return "F";
    case Op::Until: return "U";
    case Op::Release: return "R";
    case Op::WeakUntil: return "W";
  }
  return "?";
}

}  // namespace

Formula tt() {
  static const Formula f = [] {
    Formula r;
    r.node_ = std::make_shared<Formula::Node>(Formula::Node{Op::True, {}, {}, {}, 0x1});
    return r;
  }();
  return f;
}

Formula ff() {
  static const Formula f = [] {
    Formula r;
    r.node_ = std::make_shared<Formula::Node>(Formula::Node{Op::False, {}, {}, {}, 0x2});
    return r;
  }();
  return f;
}

Formula atom(std::string name) {
  assert(!name.empty());
  size_t h = mix(static_cast<size_t>(Op::Atom), std::hash<std::string>{}(name));
  Formula r;
  r.node_ = std::make_shared<Formula::Node>(Formula::Node{Op::Atom, std::move(name), {}, {}, h});
  return r;
}

Formula make_unary(Op op, Formula f) {
  assert(is_unary(op) && f);
  size_t h = mix(static_cast<size_t>(op), f.hash());
  Formula r;
  r.node_ = std::make_shared<Formula::Node>(Formula::Node{op, {}, std::move(f), {}, h});
  return r;
}

Formula make_binary(Op op, Formula l, Formula r) {
  assert(is_binary(op) && l && r);
  size_t h = mix(mix(static_cast<size_t>(op), l.hash()), r.hash());
  Formula res;
  res.node_ = std::make_shared<Formula::Node>(Formula::Node{op, {}, std::move(l), std::move(r), h});
  return res;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.hash() != b.hash() || a.op() != b.op()) return false;
  switch (a.op()) {
    case Op::True:
    case Op::False:
      return true;
    case Op::Atom:
      return a.atom_name() == b.atom_name();
    default:
      if (is_unary(a.op())) return a.left() == b.left();
      return a.left() == b.left() && a.right() == b.right();
  }
}

int compare(const Formula& a, const Formula& b) {
  if (a == b) return 0;
  if (a.op() != b.op()) return a.op() < b.op() ? -1 : 1;
  switch (a.op()) {
    case Op::True:
    case Op::False:
      return 0;
    case Op::Atom:
      return a.atom_name().compare(b.atom_name());
    default: {
      if (int c = compare(a.left(), b.left()); c != 0) return c;
      if (is_binary(a.op())) return compare(a.right(), b.right());
      return 0;
    }
  }
}

size_t temporal_depth(const Formula& f) {
  switch (f.op()) {
    case Op::True:
    case Op::False:
    case Op::Atom:
      return 0;
    default: {
      size_t d = temporal_depth(f.left());
      if (is_binary(f.op())) d = std::max(d, temporal_depth(f.right()));
      return d + (is_temporal(f.op()) ? 1 : 0);
    }
  }
}

size_t size(const Formula& f) {
  switch (f.op()) {
    case Op::True:
    case Op::False:
    case Op::Atom:
      return 1;
    default: {
      size_t n = 1 + size(f.left());
      if (is_binary(f.op())) n += size(f.right());
      return n;
    }
  }
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.op()) {
    case Op::True:
    case Op::False:
      return;
    case Op::Atom:
      out.insert(f.atom_name());
      return;
    default:
      collect_atoms(f.left(), out);
      if (is_binary(f.op())) collect_atoms(f.right(), out);
  }
}

std::vector<std::string> atoms_of(const Formula& f) {
  std::set<std::string> s;
  collect_atoms(f, s);
  return {s.begin(), s.end()};
}

namespace {

// Precedence for compact printing only; parenthesize when a child binds looser.
int print_prec(Op op) {
  switch (op) {
    case Op::True:
    case Op::False:
    case Op::Atom:
      return 7;
    case Op::Not:
    case Op::Next:
    case Op::Globally:
    case Op::Finally:
      return 6;
    case Op::And:
      return 5;
    case Op::Or:
      return 4;
    case Op::Implies:
    case Op::Iff:
      return 3;
    case Op::Until:
    case Op::Release:
    case Op::WeakUntil:
      return 2;
  }
  return 0;
}

void print_compact(const Formula& f, int parent_prec, std::string& out) {
  int prec = print_prec(f.op());
  switch (f.op()) {
    case Op::True:
    case Op::False:
      out += op_symbol(f.op());
      return;
    case Op::Atom:
      out += f.atom_name();
      return;
    default:
      break;
  }
  bool parens = prec <= parent_prec;
  if (parens) out += '(';
  if (is_unary(f.op())) {
    out += op_symbol(f.op());
    if (f.op() != Op::Not) out += ' ';
    print_compact(f.left(), prec, out);
  } else {
    print_compact(f.left(), prec, out);
    out += ' ';
    out += op_symbol(f.op());
    out += ' ';
    print_compact(f.right(), prec, out);
  }
  if (parens) out += ')';
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print_compact(f, 0, out);
  return out;
}

std::string to_basic_string(const Formula& f) {
  std::string out = "(";
  switch (f.op()) {
    case Op::True:
    case Op::False:
      out += op_symbol(f.op());
      break;
    case Op::Atom:
      out += f.atom_name();
      break;
    default:
      if (is_unary(f.op())) {
        out += op_symbol(f.op());
        out += ' ';
        out += to_basic_string(f.left());
      } else {
        out += to_basic_string(f.left());
        out += ' ';
        out += op_symbol(f.op());
        out += ' ';
        out += to_basic_string(f.right());
      }
  }
  out += ')';
  return out;
}

}  // namespace tlsf::ltl
