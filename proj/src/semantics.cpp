#include "tlsf/semantics.hpp"

#include <set>

namespace tlsf {

using ltl::Formula;

Formula fold_section(const std::vector<Formula>& fs) {
  if (fs.empty()) return ltl::tt();
  Formula acc = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) acc = ltl::land(acc, fs[i]);
  return acc;
}

Formula combine(const BasicSpec& spec, bool strict) {
  Formula te = fold_section(spec.initially);
  Formula ts = fold_section(spec.preset);
  Formula pe = fold_section(spec.require);
  Formula ps = fold_section(spec.asserts);
  Formula ae = fold_section(spec.assume);
  Formula as = fold_section(spec.guarantee);

  if (strict) {
    Formula holds = ltl::weak_until(ps, ltl::lnot(pe));
    Formula react = ltl::implies(ltl::land(ltl::globally(pe), ae), as);
    return ltl::implies(te, ltl::land(ts, ltl::land(holds, react)));
  }
  Formula react = ltl::implies(ltl::land(ltl::globally(pe), ae),
                               ltl::land(ltl::globally(ps), as));
  return ltl::implies(te, ltl::land(ts, react));
}

namespace {

Formula prefix_atoms(const Formula& f, const std::set<std::string>& atoms) {
  switch (f.op()) {
    case ltl::Op::True:
    case ltl::Op::False:
      return f;
    case ltl::Op::Atom:
      return atoms.count(f.atom_name()) ? ltl::next(f) : f;
    default:
      if (ltl::is_unary(f.op())) return ltl::make_unary(f.op(), prefix_atoms(f.left(), atoms));
      return ltl::make_binary(f.op(), prefix_atoms(f.left(), atoms),
                              prefix_atoms(f.right(), atoms));
  }
}

}  // namespace

BasicSpec adapt_target(const BasicSpec& spec, Model from, Model to) {
  if (from == to) return spec;
  const auto& names = from == Model::Moore ? spec.inputs : spec.outputs;
  std::set<std::string> atoms(names.begin(), names.end());
  BasicSpec out = spec;
  auto convert = [&](std::vector<Formula>& fs) {
    for (auto& f : fs) f = prefix_atoms(f, atoms);
  };
  convert(out.initially);
  convert(out.preset);
  convert(out.require);
  convert(out.asserts);
  convert(out.assume);
  convert(out.guarantee);
  return out;
}

CombinedFormula interpret(const BasicSpec& spec, std::optional<SemanticsTag> semantics_override,
                          std::optional<TargetTag> target_override) {
  SemanticsTag sem = semantics_override.value_or(spec.info.semantics);
  TargetTag target = target_override.value_or(spec.info.target);

  const BasicSpec* effective = &spec;
  BasicSpec adapted;
  if (sem.model != target.model) {
    adapted = adapt_target(spec, sem.model, target.model);
    effective = &adapted;
  }
  CombinedFormula out;
  out.formula = combine(*effective, sem.strict);
  out.semantics = sem;
  out.target = target;
  out.inputs = spec.inputs;
  out.outputs = spec.outputs;
  return out;
}

}  // namespace tlsf
