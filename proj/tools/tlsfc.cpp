// Command-line frontend: parse -> elaborate -> adapt -> rewrite -> export.

#include <CLI11.hpp>
#include <iostream>

#include "tlsf/pipeline.hpp"

namespace {

std::optional<tlsf::OutputFormat> format_by_name(const std::string& s) {
  using tlsf::OutputFormat;
  if (s == "check") return OutputFormat::Check;
  if (s == "basic") return OutputFormat::Basic;
  if (s == "full-ltl") return OutputFormat::FullLtl;
  if (s == "promela") return OutputFormat::Promela;
  if (s == "psl") return OutputFormat::Psl;
  if (s == "wring") return OutputFormat::Wring;
  if (s == "unbeast") return OutputFormat::Unbeast;
  if (s == "slugs") return OutputFormat::Slugs;
  if (s == "grk-report") return OutputFormat::GrkReport;
  return std::nullopt;
}

std::optional<tlsf::SemanticsTag> semantics_by_name(const std::string& s) {
  if (s == "Mealy") return tlsf::SemanticsTag{tlsf::Model::Mealy, false};
  if (s == "Moore") return tlsf::SemanticsTag{tlsf::Model::Moore, false};
  if (s == "Mealy,Strict") return tlsf::SemanticsTag{tlsf::Model::Mealy, true};
  if (s == "Moore,Strict") return tlsf::SemanticsTag{tlsf::Model::Moore, true};
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"TLSF compiler: reduce full-format specifications to plain LTL"};
  app.name("tlsfc");

  std::string input;
  std::string format = "check";
  std::vector<std::string> params;
  std::string target, semantics;
  bool do_nnf = false, do_replace = false, single_pass = false, werror = false;
  std::string keep, push, pull;

  app.add_option("input", input, "specification file, or - for standard input")->required();
  app.add_option("-f,--format", format,
                 "output: check|basic|full-ltl|promela|psl|wring|unbeast|slugs|grk-report");
  app.add_option("-P,--param", params, "parameter override name=value (repeatable)");
  app.add_option("--target", target, "target override: Mealy|Moore");
  app.add_option("--semantics", semantics,
                 "semantics override: Mealy|Moore|Mealy,Strict|Moore,Strict");
  app.add_flag("--nnf", do_nnf, "rewrite to negation normal form");
  app.add_flag("--replace-derived", do_replace, "replace derived temporal operators");
  app.add_option("--keep", keep, "comma-separated operators kept by --replace-derived");
  app.add_option("--push", push, "push operator inwards: X|F|G");
  app.add_option("--pull", pull, "pull operator outwards: X|F|G");
  app.add_flag("--single-pass", single_pass, "run push/pull once instead of to fixpoint");
  app.add_flag("--werror", werror, "treat warnings as errors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      app.exit(e);
      return tlsf::kExitOk;
    }
    std::cerr << "error: " << e.what() << "\n";
    return tlsf::kExitUsage;
  }

  tlsf::RunConfig cfg;
  cfg.input_path = input;
  cfg.apply_nnf = do_nnf;
  cfg.apply_replace_derived = do_replace;
  cfg.single_pass = single_pass;
  cfg.warnings_as_errors = werror;

  auto fmt = format_by_name(format);
  if (!fmt) {
    std::cerr << "error: unknown output format '" << format << "'\n";
    return tlsf::kExitUsage;
  }
  cfg.format = *fmt;

  for (const auto& p : params) {
    auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) {
      std::cerr << "error: parameter override must be name=value, got '" << p << "'\n";
      return tlsf::kExitUsage;
    }
    try {
      size_t used = 0;
      uint64_t value = std::stoull(p.substr(eq + 1), &used);
      if (used != p.size() - eq - 1) throw std::invalid_argument(p);
      cfg.params.emplace_back(p.substr(0, eq), value);
    } catch (const std::exception&) {
      std::cerr << "error: invalid number in parameter override '" << p << "'\n";
      return tlsf::kExitUsage;
    }
  }

  if (!target.empty()) {
    if (target == "Mealy")
      cfg.target = tlsf::Model::Mealy;
    else if (target == "Moore")
      cfg.target = tlsf::Model::Moore;
    else {
      std::cerr << "error: target must be Mealy or Moore\n";
      return tlsf::kExitUsage;
    }
  }
  if (!semantics.empty()) {
    auto sem = semantics_by_name(semantics);
    if (!sem) {
      std::cerr << "error: semantics must be Mealy|Moore|Mealy,Strict|Moore,Strict\n";
      return tlsf::kExitUsage;
    }
    cfg.semantics = *sem;
  }

  if (!push.empty() && !pull.empty()) {
    std::cerr << "error: --push and --pull are mutually exclusive\n";
    return tlsf::kExitUsage;
  }
  auto push_op = [](const std::string& s) -> std::optional<tlsf::ltl::PushOp> {
    if (s == "X") return tlsf::ltl::PushOp::Next;
    if (s == "F") return tlsf::ltl::PushOp::Finally;
    if (s == "G") return tlsf::ltl::PushOp::Globally;
    return std::nullopt;
  };
  if (!push.empty()) {
    auto op = push_op(push);
    if (!op) {
      std::cerr << "error: --push takes X, F or G\n";
      return tlsf::kExitUsage;
    }
    cfg.push_pull = {tlsf::ltl::Direction::Inwards, *op};
  }
  if (!pull.empty()) {
    auto op = push_op(pull);
    if (!op) {
      std::cerr << "error: --pull takes X, F or G\n";
      return tlsf::kExitUsage;
    }
    cfg.push_pull = {tlsf::ltl::Direction::Outwards, *op};
  }
  if (!keep.empty()) {
    size_t start = 0;
    while (start <= keep.size()) {
      size_t comma = keep.find(',', start);
      if (comma == std::string::npos) comma = keep.size();
      if (comma > start) cfg.keep.push_back(keep.substr(start, comma - start));
      start = comma + 1;
    }
  }

  return tlsf::run(cfg, std::cin, std::cout, std::cerr);
}
