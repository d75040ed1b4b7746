#include "tlsf/fragment.hpp"

#include <optional>

namespace tlsf {

using ltl::Formula;
using ltl::Op;

namespace {

Formula strip_dneg(Formula f) {
  while (f.op() == Op::Not && f.left().op() == Op::Not) f = f.left().left();
  return f;
}

void flatten_and(const Formula& f, std::vector<Formula>& out) {
  Formula g = strip_dneg(f);
  if (g.op() == Op::And) {
    flatten_and(g.left(), out);
    flatten_and(g.right(), out);
  } else {
    out.push_back(g);
  }
}

bool is_boolean_xfree(const Formula& f) {
  switch (f.op()) {
    case Op::True:
    case Op::False:
    case Op::Atom:
      return true;
    case Op::Not:
    case Op::And:
    case Op::Or:
    case Op::Implies:
    case Op::Iff: {
      if (!is_boolean_xfree(f.left())) return false;
      return ltl::is_unary(f.op()) ? true : is_boolean_xfree(f.right());
    }
    default:
      return false;
  }
}

// transition bodies: boolean connectives over atoms and X of X-free booleans
bool is_transition_body(const Formula& f, size_t xdepth = 0) {
  switch (f.op()) {
    case Op::True:
    case Op::False:
    case Op::Atom:
      return true;
    case Op::Next:
      return xdepth == 0 && is_transition_body(f.left(), 1);
    case Op::Not:
      return is_transition_body(f.left(), xdepth);
    case Op::And:
    case Op::Or:
    case Op::Implies:
    case Op::Iff:
      return is_transition_body(f.left(), xdepth) && is_transition_body(f.right(), xdepth);
    default:
      return false;
  }
}

bool contains_op(const Formula& f, Op op) {
  if (f.op() == op) return true;
  switch (f.op()) {
    case Op::True:
    case Op::False:
    case Op::Atom:
      return false;
    default:
      if (ltl::is_unary(f.op())) return contains_op(f.left(), op);
      return contains_op(f.left(), op) || contains_op(f.right(), op);
  }
}

// G F core, collapsing GF (GF x) to GF x; nullopt when not a GF core
std::optional<Formula> gf_core(const Formula& f) {
  Formula g = strip_dneg(f);
  if (g.op() != Op::Globally) return std::nullopt;
  Formula body = strip_dneg(g.left());
  if (body.op() != Op::Finally) return std::nullopt;
  Formula core = strip_dneg(body.left());
  if (auto inner = gf_core(core)) return inner;  // GF idempotence
  if (is_boolean_xfree(core)) return core;
  return std::nullopt;
}

// conjunction of GF cores (true conjuncts dropped); nullopt when some
// conjunct is not a GF core
std::optional<std::vector<Formula>> gf_conjunction(const Formula& f) {
  std::vector<Formula> conj;
  flatten_and(f, conj);
  std::vector<Formula> cores;
  for (const auto& c : conj) {
    if (c.op() == Op::True) continue;
    auto core = gf_core(c);
    if (!core) return std::nullopt;
    cores.push_back(*core);
  }
  return cores;
}

GrReport not_gr(std::string why) {
  GrReport r;
  r.in_gr = false;
  r.obstruction = std::move(why);
  return r;
}

std::string describe_g_obstruction(const Formula& body) {
  if (contains_op(body, Op::Finally)) return "F under G outside GF core";
  if (contains_op(body, Op::Globally)) return "nested G outside GF core";
  if (contains_op(body, Op::Until) || contains_op(body, Op::Release) ||
      contains_op(body, Op::WeakUntil))
    return "U/R/W under G outside transition structure";
  return "X nesting deeper than one step under G";
}

GrReport finish(GrReport r, std::vector<Formula> bare_sys, std::vector<Formula> env_cores) {
  // bare GF cores and the environment fairness side form one group
  if (!bare_sys.empty() || !env_cores.empty())
    r.groups.insert(r.groups.begin(), GrGroup{std::move(env_cores), std::move(bare_sys)});
  r.in_gr = true;
  r.k = r.groups.empty() ? 1 : r.groups.size();  // degenerate formulas count as GR(1)
  return r;
}

}  // namespace

GrReport classify(const Formula& f) {
  std::vector<Formula> conjuncts;
  flatten_and(f, conjuncts);

  GrReport r;
  std::vector<Formula> bare_sys;

  // a false conjunct absorbs the formula
  for (const auto& c : conjuncts)
    if (c.op() == Op::False) {
      GrReport abs;
      abs.initial.push_back(ltl::ff());
      return finish(std::move(abs), {}, {});
    }

  for (const auto& c : conjuncts) {
    if (c.op() == Op::True) continue;
    if (is_boolean_xfree(c)) {
      r.initial.push_back(c);
      continue;
    }
    if (auto core = gf_core(c)) {
      bare_sys.push_back(*core);
      continue;
    }
    if (c.op() == Op::Globally) {
      Formula body = strip_dneg(c.left());
      if (is_transition_body(body)) {
        r.transition.push_back(body);
        continue;
      }
      return not_gr(describe_g_obstruction(body));
    }
    if (c.op() == Op::Implies) {
      auto env = gf_conjunction(c.left());
      auto sys = gf_conjunction(c.right());
      if (!env || !sys)
        return not_gr("implication side is not a conjunction of GF cores");
      r.groups.push_back(GrGroup{std::move(*env), std::move(*sys)});
      continue;
    }
    if (is_transition_body(c))
      return not_gr("X outside a G-wrapped transition constraint");
    return not_gr("conjunct outside the GR(k) shape: " + ltl::to_string(c));
  }
  return finish(std::move(r), std::move(bare_sys), {});
}

GrReport classify(const BasicSpec& spec) {
  GrReport r;
  std::vector<Formula> env_cores, bare_sys;

  for (const auto* section : {&spec.initially, &spec.preset})
    for (const auto& f : *section) {
      std::vector<Formula> conj;
      flatten_and(f, conj);
      for (const auto& c : conj) {
        if (c.op() == Op::True) continue;
        if (!is_boolean_xfree(c))
          return not_gr("initial constraint is not an X-free state predicate: " +
                        ltl::to_string(c));
        r.initial.push_back(c);
      }
    }

  for (const auto* section : {&spec.require, &spec.asserts})
    for (const auto& f : *section) {
      std::vector<Formula> conj;
      flatten_and(f, conj);
      for (const auto& c : conj) {
        if (c.op() == Op::True) continue;
        Formula body = c.op() == Op::Globally ? strip_dneg(c.left()) : c;
        if (!is_transition_body(body))
          return not_gr("invariant is not a one-step transition constraint: " +
                        ltl::to_string(c));
        r.transition.push_back(body);
      }
    }

  for (const auto& f : spec.assume) {
    auto cores = gf_conjunction(f);
    if (!cores) return not_gr("assumption is not a conjunction of GF cores: " + ltl::to_string(f));
    for (auto& c : *cores) env_cores.push_back(std::move(c));
  }

  for (const auto& f : spec.guarantee) {
    std::vector<Formula> conj;
    flatten_and(f, conj);
    for (const auto& c : conj) {
      if (c.op() == Op::True) continue;
      if (auto core = gf_core(c)) {
        bare_sys.push_back(*core);
        continue;
      }
      if (c.op() == Op::Implies) {
        auto env = gf_conjunction(c.left());
        auto sys = gf_conjunction(c.right());
        if (!env || !sys)
          return not_gr("implication side is not a conjunction of GF cores");
        r.groups.push_back(GrGroup{std::move(*env), std::move(*sys)});
        continue;
      }
      return not_gr("guarantee outside the GR(k) shape: " + ltl::to_string(c));
    }
  }

  return finish(std::move(r), std::move(bare_sys), std::move(env_cores));
}

std::vector<Formula> GrReport::env_fairness() const {
  std::vector<Formula> out;
  for (const auto& g : groups) out.insert(out.end(), g.env.begin(), g.env.end());
  return out;
}

std::vector<Formula> GrReport::sys_fairness() const {
  std::vector<Formula> out;
  for (const auto& g : groups) out.insert(out.end(), g.sys.begin(), g.sys.end());
  return out;
}

Formula GrReport::reassemble() const {
  Formula acc;
  auto add = [&](Formula f) { acc = acc ? ltl::land(acc, f) : f; };
  for (const auto& f : initial) add(f);
  for (const auto& f : transition) add(ltl::globally(f));
  auto fold_gf = [](const std::vector<Formula>& cores) {
    Formula r;
    for (const auto& c : cores) {
      Formula gf = ltl::globally(ltl::eventually(c));
      r = r ? ltl::land(r, gf) : gf;
    }
    return r;
  };
  for (const auto& g : groups) {
    Formula env = fold_gf(g.env);
    Formula sys = fold_gf(g.sys);
    if (env && sys)
      add(ltl::implies(env, sys));
    else if (sys)
      add(sys);
    else if (env)
      add(ltl::implies(env, ltl::tt()));
  }
  return acc ? acc : ltl::tt();
}

std::string GrReport::summary() const {
  if (in_gr) return "GR(" + std::to_string(k) + ")";
  return "not GR(k): " + obstruction;
}

}  // namespace tlsf
