#include "tlsf/pipeline.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "tlsf/parser.hpp"
#include "tlsf/semantics.hpp"

namespace tlsf {

namespace {

std::optional<ltl::Op> op_by_name(const std::string& s) {
  using ltl::Op;
  if (s == "X") return Op::Next;
  if (s == "G") return Op::Globally;
  if (s == "F") return Op::Finally;
  if (s == "U") return Op::Until;
  if (s == "R") return Op::Release;
  if (s == "W") return Op::WeakUntil;
  if (s == "->") return Op::Implies;
  if (s == "<->") return Op::Iff;
  return std::nullopt;
}

ltl::Formula apply_rewrites(ltl::Formula f, const RunConfig& cfg, std::ostream& err, int& rc) {
  if (cfg.apply_nnf) f = ltl::nnf(f);
  if (cfg.apply_replace_derived) {
    std::set<ltl::Op> keep;
    if (cfg.keep.empty()) {
      keep = {ltl::Op::Next, ltl::Op::Until};
    } else {
      for (const auto& name : cfg.keep) {
        auto op = op_by_name(name);
        if (!op) {
          err << "error: unknown operator '" << name << "' in --keep\n";
          rc = kExitUsage;
          return f;
        }
        keep.insert(*op);
      }
    }
    f = ltl::replace_derived(f, keep);
  }
  if (cfg.push_pull) f = ltl::push_pull(f, cfg.push_pull->first, cfg.push_pull->second,
                                        cfg.single_pass);
  return f;
}

void print_grk_report(const GrReport& report, std::ostream& out) {
  out << "verdict: " << report.summary() << "\n";
  if (!report.in_gr) return;
  out << "initial:\n";
  for (const auto& f : report.initial) out << "  " << ltl::to_string(f) << "\n";
  out << "transition:\n";
  for (const auto& f : report.transition) out << "  G " << ltl::to_string(f) << "\n";
  size_t i = 0;
  for (const auto& g : report.groups) {
    out << "fairness group " << ++i << ":\n";
    for (const auto& f : g.env) out << "  env G F " << ltl::to_string(f) << "\n";
    for (const auto& f : g.sys) out << "  sys G F " << ltl::to_string(f) << "\n";
  }
}

}  // namespace

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  // read input
  std::string text;
  if (config.input_path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream file(config.input_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << config.input_path << "'\n";
      return kExitUsage;
    }
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }
  const std::string where = config.input_path == "-" ? "<stdin>" : config.input_path;

  // parse
  SpecDocument doc;
  try {
    doc = parse_spec(text);
  } catch (const Error& e) {
    err << where << ":" << (e.pos().valid() ? e.pos().str() + ": " : "") << e.message() << "\n";
    return kExitSyntax;
  }

  // elaborate
  std::map<std::string, uint64_t> overrides;
  for (const auto& [k, v] : config.params) overrides[k] = v;
  ElabResult elab;
  try {
    elab = elaborate(doc, overrides);
  } catch (const Error& e) {
    err << where << ":" << (e.pos().valid() ? e.pos().str() + ": " : "") << e.message() << "\n";
    return kExitElab;
  }
  for (const auto& w : elab.warnings) err << where << ": warning: " << w << "\n";
  if (config.warnings_as_errors && !elab.warnings.empty()) {
    err << where << ": error: warnings treated as errors\n";
    return kExitElab;
  }

  BasicSpec spec = elab.spec;
  SemanticsTag sem = config.semantics.value_or(spec.info.semantics);
  TargetTag target = config.target ? TargetTag{*config.target} : spec.info.target;

  try {
    switch (config.format) {
      case OutputFormat::Check: {
        GrReport report = classify(spec);
        out << "semantics=" << to_string(sem) << " target=" << to_string(target.model)
            << " inputs=" << spec.inputs.size() << " outputs=" << spec.outputs.size()
            << " gr=" << report.summary() << "\n";
        return kExitOk;
      }
      case OutputFormat::Basic: {
        BasicSpec printed = spec;
        printed.info.semantics = sem;
        printed.info.target = target;
        if (sem.model != target.model) {
          printed = adapt_target(printed, sem.model, target.model);
          printed.info.semantics.model = target.model;
        }
        out << print_basic(printed);
        return kExitOk;
      }
      case OutputFormat::FullLtl:
      case OutputFormat::Promela:
      case OutputFormat::Psl:
      case OutputFormat::Wring: {
        CombinedFormula combined = interpret(spec, sem, target);
        int rc = kExitOk;
        ltl::Formula f = apply_rewrites(combined.formula, config, err, rc);
        if (rc != kExitOk) return rc;
        switch (config.format) {
          case OutputFormat::FullLtl: out << ltl::to_basic_string(f) << "\n"; break;
          case OutputFormat::Promela: out << export_formula(f, Dialect::PromelaLtl) << "\n"; break;
          case OutputFormat::Psl: out << export_formula(f, Dialect::Psl) << "\n"; break;
          default: out << export_formula(f, Dialect::Wring) << "\n"; break;
        }
        return kExitOk;
      }
      case OutputFormat::Unbeast: {
        BasicSpec printed = spec;
        printed.info.semantics = sem;
        printed.info.target = target;
        if (sem.model != target.model)
          printed = adapt_target(printed, sem.model, target.model);
        out << export_spec(printed, Dialect::Unbeast);
        return kExitOk;
      }
      case OutputFormat::Slugs: {
        BasicSpec printed = spec;
        printed.info.semantics = sem;
        printed.info.target = target;
        if (sem.model != target.model)
          printed = adapt_target(printed, sem.model, target.model);
        out << export_spec(printed, Dialect::Slugs);
        return kExitOk;
      }
      case OutputFormat::GrkReport: {
        GrReport report = classify(spec);
        print_grk_report(report, out);
        return kExitOk;
      }
    }
  } catch (const Error& e) {
    err << where << ": " << e.message() << "\n";
    return e.kind() == ErrorKind::Export ? kExitExport : kExitElab;
  }
  return kExitUsage;
}

}  // namespace tlsf
