#pragma once

#include <set>

#include "tlsf/ltl.hpp"

namespace tlsf::ltl {

/// Negation normal form: negations pushed onto atoms, -> and <-> eliminated.
Formula nnf(const Formula& f);

/// True when negation occurs only directly above atoms and no ->/<-> remain.
bool is_nnf(const Formula& f);

/// Rewrites operators outside `keep` via the standard identities. The boolean
/// core (!, &&, ||) and atoms/constants are always kept; X must be kept, and
/// the set must retain U or R. Throws Error(Elab) on an inadmissible set.
Formula replace_derived(const Formula& f, const std::set<Op>& keep);

enum class Direction { Inwards, Outwards };
enum class PushOp { Next, Finally, Globally };

/// Distributes (or collects) one temporal operator over its distributive
/// boolean/temporal connectives, to fixpoint unless single_pass is set:
///   X inwards:  X(a . b) -> (X a) . (X b)   for . in {&&, ||, U, R, W}
///   F inwards:  F(a || b) -> F a || F b,  F F a -> F a
///   G inwards:  G(a && b) -> G a && G b,  G G a -> G a
/// and the inverse collections outwards.
Formula push_pull(const Formula& f, Direction dir, PushOp op, bool single_pass = false);

}  // namespace tlsf::ltl
