#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tlsf/ast.hpp"
#include "tlsf/ltl.hpp"

namespace tlsf {

// --- elaboration-time values ------------------------------------------------

class Value {
 public:
  enum class Kind : uint8_t { Nat, Bool, Set, Ltl, Signal, Bus, EnumVal };

  static Value nat(uint64_t v);
  static Value boolean(bool v);
  static Value set(std::vector<Value> elems);  // canonicalizes (sort + dedup)
  static Value formula(ltl::Formula f);
  static Value signal(std::string atom);
  static Value bus(std::string name, uint64_t width);
  static Value enum_val(std::string enum_type, size_t width, std::vector<std::string> patterns);

  Kind kind() const { return kind_; }
  const char* kind_name() const;

  uint64_t as_nat() const { return nat_; }
  bool as_bool() const { return bool_; }
  const std::vector<Value>& elements() const { return elems_; }
  const ltl::Formula& as_formula() const { return ltl_; }
  const std::string& name() const { return name_; }  // Signal atom / Bus name / enum type
  uint64_t width() const { return width_; }
  const std::vector<std::string>& patterns() const { return patterns_; }

  friend int compare(const Value& a, const Value& b);
  friend bool operator==(const Value& a, const Value& b) { return compare(a, b) == 0; }

 private:
  Kind kind_ = Kind::Nat;
  uint64_t nat_ = 0;
  bool bool_ = false;
  std::vector<Value> elems_;
  ltl::Formula ltl_;
  std::string name_;
  uint64_t width_ = 0;
  std::vector<std::string> patterns_;
};

// --- enumeration definitions --------------------------------------------------

struct EnumDef {
  struct Entry {
    std::string name;
    std::vector<std::string> patterns;
  };
  std::string name;
  size_t width = 0;
  std::vector<Entry> entries;

  const Entry* find(const std::string& entry) const;
  /// True when the named entries cover all 2^width valuations.
  bool covers_all() const;
};

// --- environment ---------------------------------------------------------------

struct ElabOptions {
  size_t recursion_limit = 4096;
};

struct SignalInfo {
  enum class Dir : uint8_t { Input, Output };
  Dir dir = Dir::Input;
  bool is_bus = false;
  uint64_t width = 1;
  std::string enum_type;  // nonempty for enum-typed buses
};

class Environment {
 public:
  Environment() = default;

  // global tables
  std::map<std::string, Value> globals;
  std::map<std::string, const BindingDecl*> pending;
  std::map<std::string, const FunctionDecl*> functions;
  std::map<std::string, EnumDef> enums;
  std::map<std::string, std::pair<const EnumDef*, const EnumDef::Entry*>> enum_entries;
  std::map<std::string, SignalInfo> signals;

  ElabOptions options;

  // local scopes (function formals, big-operator binders, pattern variables)
  std::vector<std::map<std::string, Value>> scopes;

  // cycle detection for plain definitions; recursion depth for functions
  std::set<std::string> forcing;
  size_t depth = 0;

  // result-kind consistency per function
  std::map<std::string, Value::Kind> function_kind;

  // names referenced at least once (unused-definition warnings)
  std::set<std::string> used;

  void declare(const std::string& name, const char* what, SourcePos pos);

 private:
  std::map<std::string, std::string> declared_;  // name -> category
};

// --- elaborated result ----------------------------------------------------------

struct BasicSpec {
  InfoSection info;
  std::vector<std::string> inputs;   // flat atoms, buses expanded to name[i]
  std::vector<std::string> outputs;
  std::vector<ltl::Formula> initially, preset, require, asserts, assume, guarantee;

  bool operator==(const BasicSpec& other) const;
};

// --- operations ------------------------------------------------------------------

/// Evaluates PARAMETERS (with overrides) and registers definitions, functions,
/// enumerations. Signals are registered later by elaborate().
Environment bind_globals(const SpecDocument& doc,
                         const std::map<std::string, uint64_t>& overrides,
                         const ElabOptions& options = {});

/// Expression evaluation in an environment.
Value eval(const Expr& expr, Environment& env);

/// {x, y .. z} for x < y: all x + j*(y-x) with x <= n <= z.
std::vector<uint64_t> eval_range(uint64_t x, uint64_t y, uint64_t z);

/// Constraint a bus equal (or unequal) to an enumeration valuation set:
/// disjunction over patterns of the per-position literals; 0 -> !b[i],
/// 1 -> b[i], * -> no literal.
ltl::Formula expand_enum_comparison(const std::string& bus, uint64_t bus_width,
                                    const std::vector<std::string>& patterns, bool equal);

/// The global constraint induced by an enum-typed bus whose enumeration does
/// not name every valuation; std::nullopt when all valuations are covered.
std::optional<ltl::Formula> implicit_enum_constraint(const std::string& bus, const EnumDef& def);

/// Bounded-operator expansions.
ltl::Formula stack_next(uint64_t n, ltl::Formula f);
ltl::Formula finally_range(uint64_t lo, uint64_t hi, ltl::Formula f);   // requires lo <= hi
ltl::Formula globally_range(uint64_t lo, uint64_t hi, ltl::Formula f);  // requires lo <= hi

struct ElabResult {
  BasicSpec spec;
  std::vector<std::string> warnings;
};

/// Full reduction to basic form: evaluates every MAIN expression to a plain
/// formula, expands buses to indexed atoms and appends implicit enum
/// constraints (inputs to REQUIRE, outputs to ASSERT).
ElabResult elaborate(const SpecDocument& doc,
                     const std::map<std::string, uint64_t>& overrides = {},
                     const ElabOptions& options = {});

}  // namespace tlsf
