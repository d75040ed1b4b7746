#include "tlsf/export.hpp"

#include <set>

#include "tlsf/rewrite.hpp"
#include "tlsf/semantics.hpp"

namespace tlsf {

using ltl::Formula;
using ltl::Op;

// --- basic format ------------------------------------------------------------

namespace {

void print_info(const InfoSection& info, std::string& out) {
  auto field = [&](const std::string& key, const std::string& value) {
    std::string k = key + ":";
    k.resize(12, ' ');
    out += "  " + k + " " + value + "\n";
  };
  out += "INFO {\n";
  field("TITLE", "\"" + info.title + "\"");
  field("DESCRIPTION", "\"" + info.description + "\"");
  field("SEMANTICS", to_string(info.semantics));
  field("TARGET", to_string(info.target.model));
  if (!info.tags.empty()) {
    std::string tags;
    for (size_t i = 0; i < info.tags.size(); ++i) {
      if (i) tags += ", ";
      tags += "\"" + info.tags[i] + "\"";
    }
    field("TAGS", tags);
  }
  out += "}\n";
}

}  // namespace

std::string print_basic(const BasicSpec& spec) {
  std::string out;
  print_info(spec.info, out);
  out += "MAIN {\n";
  auto decls = [&](const char* name, const std::vector<std::string>& atoms) {
    out += std::string("  ") + name + " {\n";
    for (const auto& a : atoms) out += "    " + a + ";\n";
    out += "  }\n";
  };
  decls("INPUTS", spec.inputs);
  decls("OUTPUTS", spec.outputs);
  auto section = [&](const char* name, const std::vector<Formula>& fs) {
    if (fs.empty()) return;
    out += std::string("  ") + name + " {\n";
    for (const auto& f : fs) out += "    " + ltl::to_basic_string(f) + ";\n";
    out += "  }\n";
  };
  section("INITIALLY", spec.initially);
  section("PRESET", spec.preset);
  section("REQUIRE", spec.require);
  section("ASSERT", spec.asserts);
  section("ASSUME", spec.assume);
  section("GUARANTEE", spec.guarantee);
  out += "}\n";
  return out;
}

// --- dialect helpers -----------------------------------------------------------

std::string sanitize_atom(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (c == '[')
      out += '_';
    else if (c == ']')
      continue;
    else if (c == '\'' || c == '@')
      out += '_';
    else
      out += c;
  }
  return out;
}

namespace {

// Binary nodes wrap themselves in parentheses; unary operators juxtapose.
// Keeps "[]<>a" for G F a while staying unambiguous.
struct InfixStyle {
  const char* tt;
  const char* ff;
  const char* not_;
  const char* and_;
  const char* or_;
  const char* implies;
  const char* iff;
  const char* next;
  const char* globally;
  const char* finally_;
  const char* until;
  const char* release;
  const char* weak_until;
  bool atom_polarity = false;  // Wring: a=1 / a=0
};

void print_infix(const Formula& f, const InfixStyle& st, std::string& out) {
  switch (f.op()) {
    case Op::True: out += st.tt; return;
    case Op::False: out += st.ff; return;
    case Op::Atom:
      out += sanitize_atom(f.atom_name());
      if (st.atom_polarity) out += "=1";
      return;
    case Op::Not:
      if (st.atom_polarity && f.left().op() == Op::Atom) {
        out += sanitize_atom(f.left().atom_name());
        out += "=0";
        return;
      }
      out += st.not_;
      print_infix(f.left(), st, out);
      return;
    case Op::Next:
    case Op::Globally:
    case Op::Finally: {
      out += f.op() == Op::Next ? st.next : f.op() == Op::Globally ? st.globally : st.finally_;
      print_infix(f.left(), st, out);
      return;
    }
    default: {
      const char* op = nullptr;
      switch (f.op()) {
        case Op::And: op = st.and_; break;
        case Op::Or: op = st.or_; break;
        case Op::Implies: op = st.implies; break;
        case Op::Iff: op = st.iff; break;
        case Op::Until: op = st.until; break;
        case Op::Release: op = st.release; break;
        case Op::WeakUntil: op = st.weak_until; break;
        default: break;
      }
      if (!op) export_error("operator not expressible in this dialect");
      out += "(";
      print_infix(f.left(), st, out);
      out += op;
      print_infix(f.right(), st, out);
      out += ")";
      return;
    }
  }
}

Formula release_to_weak(const Formula& f) {
  switch (f.op()) {
    case Op::True:
    case Op::False:
    case Op::Atom:
      return f;
    case Op::Release: {
      // a R b == b W (b && a)
      Formula a = release_to_weak(f.left());
      Formula b = release_to_weak(f.right());
      return ltl::weak_until(b, ltl::land(b, a));
    }
    default:
      if (ltl::is_unary(f.op())) return ltl::make_unary(f.op(), release_to_weak(f.left()));
      return ltl::make_binary(f.op(), release_to_weak(f.left()), release_to_weak(f.right()));
  }
}

std::string export_promela(const Formula& f) {
  // W and R are not part of the dialect; rewrite through the U/G base
  Formula pre = ltl::replace_derived(
      f, {Op::Next, Op::Until, Op::Globally, Op::Finally, Op::Implies, Op::Iff});
  InfixStyle st{"true", "false", "!", " && ", " || ", " -> ", " <-> ",
                "X ",   "[]",    "<>", " U ",  nullptr, nullptr};
  std::string out;
  print_infix(pre, st, out);
  return out;
}

std::string export_psl(const Formula& f) {
  // the linear fragment keeps G F X U R; W is rewritten away
  Formula pre = ltl::replace_derived(f, {Op::Next, Op::Until, Op::Release, Op::Globally,
                                         Op::Finally, Op::Implies, Op::Iff});
  InfixStyle st{"true", "false", "!", " && ", " || ", " -> ", " <-> ",
                "X ",   "G ",    "F ", " U ",  " R ",  nullptr};
  std::string out;
  print_infix(pre, st, out);
  return out;
}

std::string export_wring(const Formula& f) {
  // Wring carries negation only in atom polarities: rewrite ->/<->/W away,
  // then normalize so negations sit on atoms
  Formula pre = ltl::nnf(
      ltl::replace_derived(f, {Op::Next, Op::Until, Op::Release, Op::Globally, Op::Finally}));
  InfixStyle st{"TRUE", "FALSE", "!", "*", "+", nullptr, nullptr,
                "X",    "G",     "F", " U ", " R ", nullptr};
  st.atom_polarity = true;
  std::string out;
  print_infix(pre, st, out);
  return out;
}

// slugs section lines: infix boolean text, X over a subformula primes the
// atoms inside (valid since transition bodies have X-depth <= 1)
void print_slugs(const Formula& f, bool primed, std::string& out) {
  switch (f.op()) {
    case Op::True: out += "TRUE"; return;
    case Op::False: out += "FALSE"; return;
    case Op::Atom:
      out += sanitize_atom(f.atom_name());
      if (primed) out += "'";
      return;
    case Op::Not:
      out += "!";
      print_slugs(f.left(), primed, out);
      return;
    case Op::Next:
      if (primed) export_error("Slugs transition constraints allow only one step of X");
      print_slugs(f.left(), true, out);
      return;
    default: {
      const char* op = nullptr;
      switch (f.op()) {
        case Op::And: op = " & "; break;
        case Op::Or: op = " | "; break;
        case Op::Implies: op = " -> "; break;
        case Op::Iff: op = " <-> "; break;
        default: export_error("formula not expressible in Slugs sections");
      }
      out += "(";
      print_slugs(f.left(), primed, out);
      out += op;
      print_slugs(f.right(), primed, out);
      out += ")";
      return;
    }
  }
}

void xml_escape(const std::string& s, std::string& out) {
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
}

void print_unbeast(const Formula& f, int indent, std::string& out) {
  std::string pad(indent, ' ');
  auto tag = [&](const char* name) {
    out += pad + "<" + name + ">\n";
    print_unbeast(f.left(), indent + 2, out);
    if (ltl::is_binary(f.op())) print_unbeast(f.right(), indent + 2, out);
    out += pad + "</" + name + ">\n";
  };
  switch (f.op()) {
    case Op::True: out += pad + "<True/>\n"; return;
    case Op::False: out += pad + "<False/>\n"; return;
    case Op::Atom: {
      out += pad + "<Var>";
      xml_escape(sanitize_atom(f.atom_name()), out);
      out += "</Var>\n";
      return;
    }
    case Op::Not: tag("Not"); return;
    case Op::And: tag("And"); return;
    case Op::Or: tag("Or"); return;
    case Op::Implies: tag("Implies"); return;
    case Op::Iff: tag("Iff"); return;
    case Op::Next: tag("X"); return;
    case Op::Globally: tag("G"); return;
    case Op::Finally: tag("F"); return;
    case Op::Until: tag("U"); return;
    case Op::WeakUntil: tag("WU"); return;
    case Op::Release:
      export_error("release must be rewritten before Unbeast export");
  }
}

std::string export_unbeast(const BasicSpec& spec) {
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<SynthesisProblem>\n";
  out += "  <Title>";
  xml_escape(spec.info.title, out);
  out += "</Title>\n";
  out += "  <Description>";
  xml_escape(spec.info.description, out);
  out += "</Description>\n";
  out += "  <GlobalInputs>\n";
  for (const auto& a : spec.inputs) {
    out += "    <Bit>";
    xml_escape(sanitize_atom(a), out);
    out += "</Bit>\n";
  }
  out += "  </GlobalInputs>\n";
  out += "  <GlobalOutputs>\n";
  for (const auto& a : spec.outputs) {
    out += "    <Bit>";
    xml_escape(sanitize_atom(a), out);
    out += "</Bit>\n";
  }
  out += "  </GlobalOutputs>\n";

  auto emit = [&](const std::vector<Formula>& fs, bool wrap_globally) {
    for (const auto& f : fs) {
      Formula g = wrap_globally ? ltl::globally(f) : f;
      out += "    <LTL>\n";
      print_unbeast(release_to_weak(g), 6, out);
      out += "    </LTL>\n";
    }
  };
  out += "  <Assumptions>\n";
  emit(spec.initially, false);
  emit(spec.require, true);
  emit(spec.assume, false);
  out += "  </Assumptions>\n";
  out += "  <Specification>\n";
  emit(spec.preset, false);
  emit(spec.asserts, true);
  emit(spec.guarantee, false);
  out += "  </Specification>\n";
  out += "</SynthesisProblem>\n";
  return out;
}

std::string export_slugs(const BasicSpec& spec) {
  if (!spec.info.semantics.strict)
    export_error("Slugs export requires strict semantics");
  GrReport report = classify(spec);
  if (!report.in_gr || report.k != 1)
    export_error("Slugs export requires an InGR(1) specification: " +
                 (report.in_gr ? "found GR(" + std::to_string(report.k) + ")"
                               : report.obstruction));

  std::string out;
  auto names = [&](const char* name, const std::vector<std::string>& atoms) {
    out += std::string("[") + name + "]\n";
    for (const auto& a : atoms) out += sanitize_atom(a) + "\n";
    out += "\n";
  };
  names("INPUT", spec.inputs);
  names("OUTPUT", spec.outputs);

  auto lines = [&](const char* name, const std::vector<Formula>& fs) {
    out += std::string("[") + name + "]\n";
    for (const auto& f : fs) {
      print_slugs(f, false, out);
      out += "\n";
    }
    out += "\n";
  };

  std::vector<Formula> env_init, sys_init, env_trans, sys_trans;
  for (const auto& f : spec.initially) env_init.push_back(f);
  for (const auto& f : spec.preset) sys_init.push_back(f);
  for (const auto& f : spec.require) env_trans.push_back(f.op() == Op::Globally ? f.left() : f);
  for (const auto& f : spec.asserts) sys_trans.push_back(f.op() == Op::Globally ? f.left() : f);

  const GrGroup& group = report.groups.front();
  lines("ENV_INIT", env_init);
  lines("SYS_INIT", sys_init);
  lines("ENV_TRANS", env_trans);
  lines("SYS_TRANS", sys_trans);
  lines("ENV_LIVENESS", group.env);
  lines("SYS_LIVENESS", group.sys);
  return out;
}

}  // namespace

std::string export_formula(const Formula& f, Dialect dialect) {
  switch (dialect) {
    case Dialect::BasicTlsf: return ltl::to_basic_string(f);
    case Dialect::PromelaLtl: return export_promela(f);
    case Dialect::Psl: return export_psl(f);
    case Dialect::Wring: return export_wring(f);
    case Dialect::Slugs:
      export_error("Slugs export works on specifications, not bare formulas");
    case Dialect::Unbeast:
      export_error("Unbeast export works on specifications, not bare formulas");
  }
  export_error("unknown dialect");
}

std::string export_spec(const BasicSpec& spec, Dialect dialect) {
  switch (dialect) {
    case Dialect::BasicTlsf: return print_basic(spec);
    case Dialect::Unbeast: return export_unbeast(spec);
    case Dialect::Slugs: return export_slugs(spec);
    default: {
      CombinedFormula combined = interpret(spec);
      return export_formula(combined.formula, dialect) + "\n";
    }
  }
}

}  // namespace tlsf
