#pragma once

#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tlsf/ast.hpp"
#include "tlsf/elaborate.hpp"
#include "tlsf/lasso.hpp"
#include "tlsf/ltl.hpp"

namespace testutil {

inline std::string data_path(const std::string& rel) {
  return std::string(TLSF_TEST_DATA_DIR) + "/" + rel;
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

// --- structural equality on surface expressions -------------------------------

inline bool expr_eq(const tlsf::Expr& a, const tlsf::Expr& b) {
  using tlsf::ExprKind;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ExprKind::NatLit:
      return a.nat() == b.nat();
    case ExprKind::BoolLit:
      return a.boolean() == b.boolean();
    case ExprKind::Ident:
      return a.name() == b.name();
    case ExprKind::Apply:
      if (a.name() != b.name()) return false;
      break;
    case ExprKind::Unary:
      if (a.unary_op() != b.unary_op()) return false;
      break;
    case ExprKind::Binary:
      if (a.binary_op() != b.binary_op()) return false;
      break;
    case ExprKind::BigOp: {
      if (a.big_op() != b.big_op() || a.binders().size() != b.binders().size()) return false;
      for (size_t i = 0; i < a.binders().size(); ++i) {
        const auto& x = a.binders()[i];
        const auto& y = b.binders()[i];
        if (x.name != y.name) return false;
        if (static_cast<bool>(x.set) != static_cast<bool>(y.set)) return false;
        if (x.set && !expr_eq(*x.set, *y.set)) return false;
        if (!x.set) {
          if (x.lo_inclusive != y.lo_inclusive || x.hi_inclusive != y.hi_inclusive) return false;
          if (!expr_eq(*x.lo, *y.lo) || !expr_eq(*x.hi, *y.hi)) return false;
        }
      }
      break;
    }
    default:
      break;
  }
  if (a.children().size() != b.children().size()) return false;
  for (size_t i = 0; i < a.children().size(); ++i)
    if (!expr_eq(a.child(i), b.child(i))) return false;
  return true;
}

// --- independent lasso oracle ---------------------------------------------------
//
// Evaluates on the explicit unrolling of the lasso: quantified positions range
// over [i, max(i, prefix) + loop), letters are read at raw positions. This
// never inspects positions past prefix + loop * (depth + 1) when evaluation
// starts at 0, and is derived independently of the library evaluator.

inline uint32_t raw_letter(const tlsf::ltl::LassoWord& w, size_t j) {
  return j < w.prefix.size() ? w.prefix[j] : w.loop[(j - w.prefix.size()) % w.loop.size()];
}

inline bool naive_eval(const tlsf::ltl::LassoWord& w, const tlsf::ltl::Formula& f, size_t i) {
  using tlsf::ltl::Op;
  size_t horizon = std::max(i, w.prefix.size()) + w.loop.size();
  switch (f.op()) {
    case Op::True: return true;
    case Op::False: return false;
    case Op::Atom: {
      size_t bit = 0;
      for (; bit < w.atoms.size(); ++bit)
        if (w.atoms[bit] == f.atom_name()) break;
      REQUIRE(bit < w.atoms.size());
      return (raw_letter(w, i) >> bit) & 1u;
    }
    case Op::Not: return !naive_eval(w, f.left(), i);
    case Op::And: return naive_eval(w, f.left(), i) && naive_eval(w, f.right(), i);
    case Op::Or: return naive_eval(w, f.left(), i) || naive_eval(w, f.right(), i);
    case Op::Implies: return !naive_eval(w, f.left(), i) || naive_eval(w, f.right(), i);
    case Op::Iff: return naive_eval(w, f.left(), i) == naive_eval(w, f.right(), i);
    case Op::Next: return naive_eval(w, f.left(), i + 1);
    case Op::Globally:
      for (size_t j = i; j < horizon; ++j)
        if (!naive_eval(w, f.left(), j)) return false;
      return true;
    case Op::Finally:
      for (size_t j = i; j < horizon; ++j)
        if (naive_eval(w, f.left(), j)) return true;
      return false;
    case Op::Until:
      for (size_t j = i; j < horizon; ++j) {
        if (naive_eval(w, f.right(), j)) return true;
        if (!naive_eval(w, f.left(), j)) return false;
      }
      return false;
    case Op::Release:
      for (size_t j = i; j < horizon; ++j) {
        if (!naive_eval(w, f.right(), j)) return false;
        if (naive_eval(w, f.left(), j)) return true;
      }
      return true;
    case Op::WeakUntil:
      for (size_t j = i; j < horizon; ++j) {
        if (naive_eval(w, f.right(), j)) return true;
        if (!naive_eval(w, f.left(), j)) return false;
      }
      return true;
  }
  return false;
}

// Reference bounded equivalence by plain enumeration of every shape.
inline std::optional<tlsf::ltl::LassoWord> bounded_equiv_ref(
    const tlsf::ltl::Formula& f, const tlsf::ltl::Formula& g,
    const std::vector<std::string>& atoms, size_t max_prefix, size_t max_loop) {
  std::optional<tlsf::ltl::LassoWord> witness;
  for (size_t k = 0; k <= max_prefix && !witness; ++k)
    for (size_t l = 1; l <= max_loop && !witness; ++l)
      tlsf::ltl::for_each_lasso(atoms, k, l, [&](const tlsf::ltl::LassoWord& w) {
        if (tlsf::ltl::eval_at(w, f, 0) != tlsf::ltl::eval_at(w, g, 0)) {
          witness = w;
          return false;
        }
        return true;
      });
  return witness;
}

// --- random formulas --------------------------------------------------------------

inline tlsf::ltl::Formula random_formula(std::mt19937& rng, int depth,
                                         const std::vector<std::string>& atoms) {
  using namespace tlsf::ltl;
  std::uniform_int_distribution<int> leaf(0, 9);
  if (depth == 0) {
    int pick = leaf(rng);
    if (pick == 0) return tt();
    if (pick == 1) return ff();
    return atom(atoms[pick % atoms.size()]);
  }
  std::uniform_int_distribution<int> node(0, 13);
  switch (node(rng)) {
    case 0: return lnot(random_formula(rng, depth - 1, atoms));
    case 1: return land(random_formula(rng, depth - 1, atoms), random_formula(rng, depth - 1, atoms));
    case 2: return lor(random_formula(rng, depth - 1, atoms), random_formula(rng, depth - 1, atoms));
    case 3: return implies(random_formula(rng, depth - 1, atoms), random_formula(rng, depth - 1, atoms));
    case 4: return iff(random_formula(rng, depth - 1, atoms), random_formula(rng, depth - 1, atoms));
    case 5: return next(random_formula(rng, depth - 1, atoms));
    case 6: return globally(random_formula(rng, depth - 1, atoms));
    case 7: return eventually(random_formula(rng, depth - 1, atoms));
    case 8: return until(random_formula(rng, depth - 1, atoms), random_formula(rng, depth - 1, atoms));
    case 9: return release(random_formula(rng, depth - 1, atoms), random_formula(rng, depth - 1, atoms));
    case 10: return weak_until(random_formula(rng, depth - 1, atoms), random_formula(rng, depth - 1, atoms));
    default: return random_formula(rng, 0, atoms);
  }
}

// random boolean X-free formula (GR(k) building block)
inline tlsf::ltl::Formula random_boolean(std::mt19937& rng, int depth,
                                         const std::vector<std::string>& atoms) {
  using namespace tlsf::ltl;
  std::uniform_int_distribution<int> leaf(0, 5);
  if (depth == 0) {
    int pick = leaf(rng);
    if (pick == 0) return tt();
    if (pick == 1) return ff();
    return atom(atoms[pick % atoms.size()]);
  }
  std::uniform_int_distribution<int> node(0, 4);
  switch (node(rng)) {
    case 0: return lnot(random_boolean(rng, depth - 1, atoms));
    case 1: return land(random_boolean(rng, depth - 1, atoms), random_boolean(rng, depth - 1, atoms));
    case 2: return lor(random_boolean(rng, depth - 1, atoms), random_boolean(rng, depth - 1, atoms));
    default: return random_boolean(rng, 0, atoms);
  }
}

// occurrence census: multiset of (atom name, X nesting depth)
inline std::map<std::pair<std::string, size_t>, size_t> xdepth_census(
    const tlsf::ltl::Formula& f, size_t depth = 0) {
  using tlsf::ltl::Op;
  std::map<std::pair<std::string, size_t>, size_t> out;
  switch (f.op()) {
    case Op::True:
    case Op::False:
      return out;
    case Op::Atom:
      out[{f.atom_name(), depth}]++;
      return out;
    default: {
      size_t d = depth + (f.op() == Op::Next ? 1 : 0);
      auto l = xdepth_census(f.left(), d);
      for (auto& [k, v] : l) out[k] += v;
      if (tlsf::ltl::is_binary(f.op())) {
        auto r = xdepth_census(f.right(), d);
        for (auto& [k, v] : r) out[k] += v;
      }
      return out;
    }
  }
}

// random basic specification for round-trip checks
inline tlsf::BasicSpec random_basic_spec(std::mt19937& rng) {
  using namespace tlsf;
  BasicSpec spec;
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> small(1, 3);

  spec.info.title = "generated";
  spec.info.description = "round trip case";
  spec.info.semantics.model = coin(rng) ? Model::Mealy : Model::Moore;
  spec.info.semantics.strict = coin(rng);
  spec.info.target.model = coin(rng) ? Model::Mealy : Model::Moore;
  if (coin(rng)) spec.info.tags = {"t1", "generated corpus"};

  const std::vector<std::string> input_pool = {"req", "cancel", "v[0]", "v[1]", "idle@env"};
  const std::vector<std::string> output_pool = {"grant", "done'", "w[0]", "w[1]"};
  int ni = small(rng), no = small(rng);
  for (int i = 0; i < ni; ++i) spec.inputs.push_back(input_pool[i]);
  for (int i = 0; i < no; ++i) spec.outputs.push_back(output_pool[i]);

  std::vector<std::string> atoms = spec.inputs;
  atoms.insert(atoms.end(), spec.outputs.begin(), spec.outputs.end());

  auto fill = [&](std::vector<ltl::Formula>& section) {
    std::uniform_int_distribution<int> count(0, 2);
    int n = count(rng);
    for (int i = 0; i < n; ++i) section.push_back(random_formula(rng, 3, atoms));
  };
  fill(spec.initially);
  fill(spec.preset);
  fill(spec.require);
  fill(spec.asserts);
  fill(spec.assume);
  fill(spec.guarantee);
  return spec;
}

}  // namespace testutil
