#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "testutil.hpp"
#include "tlsf/parser.hpp"
#include "tlsf/pipeline.hpp"

using namespace tlsf;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_text(const std::string& text, RunConfig cfg = {}) {
  cfg.input_path = "-";
  std::istringstream in(text);
  std::ostringstream out, err;
  int code = run(cfg, in, out, err);
  return {code, out.str(), err.str()};
}

Result run_file(const std::string& name, RunConfig cfg = {}) {
  cfg.input_path = testutil::data_path("corpus/" + name);
  std::istringstream in;
  std::ostringstream out, err;
  int code = run(cfg, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("basic output with a parameter override") {
  RunConfig cfg;
  cfg.format = OutputFormat::Basic;
  cfg.params = {{"n", 3}};
  Result r = run_file("parameterized_arbiter.tlsf", cfg);
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("r[2];") != std::string::npos);
  CHECK(r.out.find("g[2];") != std::string::npos);
  // the gate: basic output always reparses as a basic specification
  CHECK_NOTHROW(parse_basic_spec(r.out));
}

TEST_CASE("check mode prints a one line summary") {
  Result r = run_file("micro_gr1.tlsf");
  CHECK(r.code == kExitOk);
  CHECK(r.out == "semantics=Mealy,Strict target=Mealy inputs=1 outputs=1 gr=GR(1)\n");
}

TEST_CASE("lexical failures exit 1 with a position") {
  Result r = run_text("INFO { /* open");
  CHECK(r.code == kExitSyntax);
  CHECK(r.err.find("1:8") != std::string::npos);

  Result p = run_text("INFO { TITLE: \"t\" }");
  CHECK(p.code == kExitSyntax);
}

TEST_CASE("elaboration failures exit 2") {
  RunConfig cfg;
  cfg.params = {{"zz", 1}};
  Result r = run_file("parameterized_arbiter.tlsf", cfg);
  CHECK(r.code == kExitElab);
  CHECK(r.err.find("zz") != std::string::npos);

  Result ready = run_file("amba_tincr.tlsf");
  CHECK(ready.code == kExitElab);
  CHECK(ready.err.find("READY") != std::string::npos);
  CHECK(ready.err.find("26:") != std::string::npos);
  // exactly one diagnostic line
  CHECK(std::count(ready.err.begin(), ready.err.end(), '\n') == 1);
}

TEST_CASE("export precondition failures exit 3") {
  RunConfig cfg;
  cfg.format = OutputFormat::Slugs;
  Result r = run_file("parameterized_arbiter.tlsf", cfg);
  CHECK(r.code == kExitExport);
  CHECK(r.err.find("Slugs") != std::string::npos);
}

TEST_CASE("missing files exit 4") {
  RunConfig cfg;
  cfg.input_path = "/nonexistent/nowhere.tlsf";
  std::istringstream in;
  std::ostringstream out, err;
  CHECK(run(cfg, in, out, err) == kExitUsage);
}

TEST_CASE("target adjustment X-prefixes the converted side in full-ltl output") {
  RunConfig cfg;
  cfg.format = OutputFormat::FullLtl;
  cfg.target = Model::Moore;  // Mealy semantics spec: outputs get prefixed
  Result r = run_file("micro_gr1.tlsf", cfg);
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("(X (g))") != std::string::npos);
  CHECK(r.out.find("(X (r))") != std::string::npos);  // from REQUIRE's own X

  RunConfig plain;
  plain.format = OutputFormat::FullLtl;
  Result base = run_file("micro_gr1.tlsf", plain);
  CHECK(base.out.find("(X (g))") != std::string::npos);  // ASSERT's own X g
  CHECK(base.out != r.out);
}

TEST_CASE("semantics override switches the template") {
  RunConfig strict;
  strict.format = OutputFormat::FullLtl;
  Result s = run_file("parameterized_arbiter.tlsf", strict);
  CHECK(s.out.find(" W ") == std::string::npos);

  strict.semantics = SemanticsTag{Model::Mealy, true};
  Result t = run_file("parameterized_arbiter.tlsf", strict);
  CHECK(t.out.find(" W ") != std::string::npos);
}

TEST_CASE("rewrite flags act on formula outputs") {
  RunConfig cfg;
  cfg.format = OutputFormat::FullLtl;
  cfg.apply_nnf = true;
  Result r = run_file("micro_gr1.tlsf", cfg);
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("->") == std::string::npos);
  CHECK(r.out.find("<->") == std::string::npos);

  RunConfig rd;
  rd.format = OutputFormat::FullLtl;
  rd.apply_replace_derived = true;  // default keep is X and U
  Result q = run_file("micro_gr1.tlsf", rd);
  CHECK(q.code == kExitOk);
  CHECK(q.out.find("(G ") == std::string::npos);
  CHECK(q.out.find(" W ") == std::string::npos);

  RunConfig bad;
  bad.format = OutputFormat::FullLtl;
  bad.apply_replace_derived = true;
  bad.keep = {"Z"};
  CHECK(run_file("micro_gr1.tlsf", bad).code == kExitUsage);
}

TEST_CASE("grk report lists the parts") {
  RunConfig cfg;
  cfg.format = OutputFormat::GrkReport;
  Result r = run_file("micro_gr1.tlsf", cfg);
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("verdict: GR(1)") != std::string::npos);
  CHECK(r.out.find("env G F r") != std::string::npos);
  CHECK(r.out.find("sys G F g") != std::string::npos);
}

TEST_CASE("warnings are reported and can be fatal") {
  std::string text =
      "INFO { TITLE: \"t\" DESCRIPTION: \"d\" SEMANTICS: Mealy TARGET: Mealy }\n"
      "GLOBAL { DEFINITIONS { unused = 1; } }\n"
      "MAIN { INPUTS { a; } OUTPUTS { b; } ASSERT { a; } }";
  Result warn = run_text(text);
  CHECK(warn.code == kExitOk);
  CHECK(warn.err.find("unused") != std::string::npos);

  RunConfig cfg;
  cfg.warnings_as_errors = true;
  Result fatal = run_text(text, cfg);
  CHECK(fatal.code == kExitElab);
}

TEST_CASE("malformed inputs never exit zero") {
  std::string good =
      testutil::read_file(testutil::data_path("corpus/parameterized_arbiter.tlsf"));
  size_t last_brace = good.find_last_of('}');

  // every proper prefix misses the closing structure
  for (size_t cut = 0; cut < last_brace; cut += 37) {
    Result r = run_text(good.substr(0, cut));
    CAPTURE(cut);
    CHECK(r.code != kExitOk);
    CHECK((r.code == kExitSyntax || r.code == kExitElab));
  }

  // single-character corruption of structural tokens
  int corrupted = 0;
  for (size_t i = 0; i < good.size() && corrupted < 40; ++i) {
    char c = good[i];
    if (c != '{' && c != '}' && c != ';') continue;
    std::string bad = good;
    bad[i] = '?';
    Result r = run_text(bad);
    CAPTURE(i);
    CHECK(r.code != kExitOk);
    ++corrupted;
  }
  CHECK(corrupted >= 20);
}
