#include "tlsf/rewrite.hpp"

#include <functional>

#include "tlsf/diagnostics.hpp"

namespace tlsf::ltl {

namespace {

Formula nnf_rec(const Formula& f, bool negated) {
  switch (f.op()) {
    case Op::True:
      return negated ? ff() : tt();
    case Op::False:
      return negated ? tt() : ff();
    case Op::Atom:
      return negated ? lnot(f) : f;
    case Op::Not:
      return nnf_rec(f.left(), !negated);
    case Op::And:
      return negated ? lor(nnf_rec(f.left(), true), nnf_rec(f.right(), true))
                     : land(nnf_rec(f.left(), false), nnf_rec(f.right(), false));
    case Op::Or:
      return negated ? land(nnf_rec(f.left(), true), nnf_rec(f.right(), true))
                     : lor(nnf_rec(f.left(), false), nnf_rec(f.right(), false));
    case Op::Implies:
      // a -> b == !a || b
      return negated ? land(nnf_rec(f.left(), false), nnf_rec(f.right(), true))
                     : lor(nnf_rec(f.left(), true), nnf_rec(f.right(), false));
    case Op::Iff:
      // a <-> b == (a && b) || (!a && !b)
      return negated ? lor(land(nnf_rec(f.left(), false), nnf_rec(f.right(), true)),
                           land(nnf_rec(f.left(), true), nnf_rec(f.right(), false)))
                     : lor(land(nnf_rec(f.left(), false), nnf_rec(f.right(), false)),
                           land(nnf_rec(f.left(), true), nnf_rec(f.right(), true)));
    case Op::Next:
      return next(nnf_rec(f.left(), negated));
    case Op::Globally:
      return negated ? eventually(nnf_rec(f.left(), true)) : globally(nnf_rec(f.left(), false));
    case Op::Finally:
      return negated ? globally(nnf_rec(f.left(), true)) : eventually(nnf_rec(f.left(), false));
    case Op::Until:
      return negated ? release(nnf_rec(f.left(), true), nnf_rec(f.right(), true))
                     : until(nnf_rec(f.left(), false), nnf_rec(f.right(), false));
    case Op::Release:
      return negated ? until(nnf_rec(f.left(), true), nnf_rec(f.right(), true))
                     : release(nnf_rec(f.left(), false), nnf_rec(f.right(), false));
    case Op::WeakUntil:
      // !(a W b) == (a && !b) U (!a && !b)
      return negated ? until(land(nnf_rec(f.left(), false), nnf_rec(f.right(), true)),
                             land(nnf_rec(f.left(), true), nnf_rec(f.right(), true)))
                     : weak_until(nnf_rec(f.left(), false), nnf_rec(f.right(), false));
  }
  return f;
}

}  // namespace

Formula nnf(const Formula& f) { return nnf_rec(f, false); }

bool is_nnf(const Formula& f) {
  switch (f.op()) {
    case Op::True:
    case Op::False:
    case Op::Atom:
      return true;
    case Op::Not:
      return f.left().op() == Op::Atom;
    case Op::Implies:
    case Op::Iff:
      return false;
    default:
      if (is_unary(f.op())) return is_nnf(f.left());
      return is_nnf(f.left()) && is_nnf(f.right());
  }
}

Formula replace_derived(const Formula& f, const std::set<Op>& keep) {
  bool have_u = keep.count(Op::Until) != 0;
  bool have_r = keep.count(Op::Release) != 0;
  if (!keep.count(Op::Next) || (!have_u && !have_r))
    elab_error({}, "replace_derived: keep set must contain X and one of U, R");

  auto kept = [&](Op op) { return keep.count(op) != 0; };

  std::function<Formula(const Formula&)> go = [&](const Formula& x) -> Formula {
    switch (x.op()) {
      case Op::True:
      case Op::False:
      case Op::Atom:
        return x;
      case Op::Not:
        return lnot(go(x.left()));
      case Op::And:
        return land(go(x.left()), go(x.right()));
      case Op::Or:
        return lor(go(x.left()), go(x.right()));
      case Op::Implies: {
        if (kept(Op::Implies)) return implies(go(x.left()), go(x.right()));
        return lor(lnot(go(x.left())), go(x.right()));
      }
      case Op::Iff: {
        if (kept(Op::Iff)) return iff(go(x.left()), go(x.right()));
        Formula a = go(x.left()), b = go(x.right());
        if (kept(Op::Implies)) return land(implies(a, b), implies(b, a));
        return land(lor(lnot(a), b), lor(lnot(b), a));
      }
      case Op::Next:
        return next(go(x.left()));
      case Op::Finally: {
        if (kept(Op::Finally)) return eventually(go(x.left()));
        Formula a = go(x.left());
        if (have_u) return until(tt(), a);
        return lnot(release(ff(), lnot(a)));  // F a == !G!a, G via R
      }
      case Op::Globally: {
        if (kept(Op::Globally)) return globally(go(x.left()));
        Formula a = go(x.left());
        if (have_r) return release(ff(), a);
        return lnot(until(tt(), lnot(a)));  // G a == !F!a, F via U
      }
      case Op::Until: {
        Formula a = go(x.left()), b = go(x.right());
        if (have_u) return until(a, b);
        return lnot(release(lnot(a), lnot(b)));
      }
      case Op::Release: {
        Formula a = go(x.left()), b = go(x.right());
        if (have_r) return release(a, b);
        return lnot(until(lnot(a), lnot(b)));
      }
      case Op::WeakUntil: {
        if (kept(Op::WeakUntil)) return weak_until(go(x.left()), go(x.right()));
        // a W b == (a U b) || G a
        Formula a = go(x.left()), b = go(x.right());
        Formula u = have_u ? until(a, b) : lnot(release(lnot(a), lnot(b)));
        Formula g;
        if (kept(Op::Globally))
          g = globally(a);
        else if (have_r)
          g = release(ff(), a);
        else
          g = lnot(until(tt(), lnot(a)));
        return lor(u, g);
      }
    }
    return x;
  };
  return go(f);
}

namespace {

bool distributes(Op inner, Op over) {
  if (inner == Op::Next)
    return over == Op::And || over == Op::Or || over == Op::Until || over == Op::Release ||
           over == Op::WeakUntil;
  if (inner == Op::Finally) return over == Op::Or;
  if (inner == Op::Globally) return over == Op::And;
  return false;
}

Op push_op_kind(PushOp op) {
  switch (op) {
    case PushOp::Next: return Op::Next;
    case PushOp::Finally: return Op::Finally;
    case PushOp::Globally: return Op::Globally;
  }
  return Op::Next;
}

// One bottom-up pass; reports whether anything changed.
Formula pass(const Formula& f, Direction dir, Op which, bool& changed) {
  Formula res;
  switch (f.op()) {
    case Op::True:
    case Op::False:
    case Op::Atom:
      return f;
    default:
      break;
  }
  if (is_unary(f.op())) {
    Formula child = pass(f.left(), dir, which, changed);
    if (f.op() == which) {
      if (child.op() == which) {  // idempotence: F F a, G G a (X excluded below)
        if (which != Op::Next) {
          changed = true;
          return child;
        }
      }
      if (dir == Direction::Inwards && distributes(which, child.op())) {
        changed = true;
        return make_binary(child.op(), make_unary(which, child.left()),
                           make_unary(which, child.right()));
      }
    }
    res = make_unary(f.op(), child);
  } else {
    Formula l = pass(f.left(), dir, which, changed);
    Formula r = pass(f.right(), dir, which, changed);
    if (dir == Direction::Outwards && distributes(which, f.op()) && l.op() == which &&
        r.op() == which) {
      changed = true;
      Formula merged = make_unary(which, make_binary(f.op(), l.left(), r.left()));
      return merged;
    }
    res = make_binary(f.op(), l, r);
  }
  return res;
}

}  // namespace

Formula push_pull(const Formula& f, Direction dir, PushOp op, bool single_pass) {
  Op which = push_op_kind(op);
  Formula cur = f;
  while (true) {
    bool changed = false;
    cur = pass(cur, dir, which, changed);
    if (!changed || single_pass) return cur;
  }
}

}  // namespace tlsf::ltl
