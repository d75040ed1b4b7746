#include <doctest.h>

#include "testutil.hpp"
#include "tlsf/lasso.hpp"
#include "tlsf/rewrite.hpp"

using namespace tlsf::ltl;

namespace {

LassoWord word(std::vector<std::string> atoms, std::vector<uint32_t> prefix,
               std::vector<uint32_t> loop) {
  return LassoWord{std::move(atoms), std::move(prefix), std::move(loop)};
}

bool equiv(const Formula& f, const Formula& g, const std::vector<std::string>& atoms,
           size_t k, size_t l) {
  return !bounded_equiv(f, g, atoms, k, l).has_value();
}

}  // namespace

TEST_CASE("eval_at on simple lassos") {
  Formula a = atom("a"), b = atom("b");

  // ({a} {})^w satisfies G F a
  LassoWord w1 = word({"a"}, {}, {1, 0});
  CHECK(eval_at(w1, globally(eventually(a)), 0));
  CHECK_FALSE(eval_at(w1, globally(a), 0));

  // {}^w falsifies a R b since b never holds
  LassoWord w2 = word({"a", "b"}, {}, {0});
  CHECK_FALSE(eval_at(w2, release(a, b), 0));

  // prefix {a}, loop {b}: a U b holds at 0
  LassoWord w3 = word({"a", "b"}, {1}, {2});
  CHECK(eval_at(w3, until(a, b), 0));
  CHECK(eval_at(w3, a, 0));
  CHECK_FALSE(eval_at(w3, a, 1));
  CHECK(eval_at(w3, b, 5));  // positions normalize into the loop

  CHECK_THROWS_AS(eval_at(word({"a"}, {1}, {}), a, 0), std::invalid_argument);
  CHECK_THROWS_AS(eval_at(w1, atom("zz"), 0), std::invalid_argument);
}

TEST_CASE("eval_at agrees with the naive unrolling evaluator") {
  std::mt19937 rng(7);
  std::vector<std::string> atoms = {"a", "b"};
  std::uniform_int_distribution<int> len(0, 3), looplen(1, 3), letter(0, 3), pos(0, 2);
  for (int round = 0; round < 300; ++round) {
    Formula f = testutil::random_formula(rng, 4, atoms);
    LassoWord w;
    w.atoms = atoms;
    int pl = len(rng), ll = looplen(rng);
    for (int i = 0; i < pl; ++i) w.prefix.push_back(letter(rng));
    for (int i = 0; i < ll; ++i) w.loop.push_back(letter(rng));
    size_t p = pos(rng);
    CAPTURE(to_string(f));
    CAPTURE(w.str());
    CHECK(eval_at(w, f, p) == testutil::naive_eval(w, f, p));
  }
}

TEST_CASE("bounded_equiv on the stock identities") {
  Formula a = atom("a"), b = atom("b");
  std::vector<std::string> ab = {"a", "b"};

  // until expansion law
  CHECK(equiv(until(a, b), lor(b, land(a, next(until(a, b)))), ab, 3, 3));
  // weak until via until and globally
  CHECK(equiv(weak_until(a, b), lor(until(a, b), globally(a)), ab, 3, 3));
  // F a and G a differ, with a verified witness
  auto cex = bounded_equiv(eventually(a), globally(a), {"a"}, 2, 2);
  REQUIRE(cex.has_value());
  CHECK(eval_at(*cex, eventually(a), 0) != eval_at(*cex, globally(a), 0));
  // release duality
  CHECK(equiv(release(a, b), lnot(until(lnot(a), lnot(b))), ab, 3, 3));
  CHECK_FALSE(equiv(until(a, b), weak_until(a, b), ab, 2, 2));
}

TEST_CASE("bounded_equiv matches plain enumeration on small bounds") {
  std::mt19937 rng(11);
  std::vector<std::string> atoms = {"a", "b"};
  for (int round = 0; round < 60; ++round) {
    Formula f = testutil::random_formula(rng, 3, atoms);
    Formula g = round % 3 == 0 ? nnf(f) : testutil::random_formula(rng, 3, atoms);
    size_t k = round % 2 == 0 ? 2 : 3;
    size_t l = round % 2 == 0 ? 2 : 3;
    auto fast = bounded_equiv(f, g, atoms, k, l);
    auto slow = testutil::bounded_equiv_ref(f, g, atoms, k, l);
    CAPTURE(to_string(f));
    CAPTURE(to_string(g));
    CHECK(fast.has_value() == slow.has_value());
    if (fast) CHECK(eval_at(*fast, f, 0) != eval_at(*fast, g, 0));
  }
}

TEST_CASE("bounded_equiv handles asymmetric bounds") {
  std::mt19937 rng(227);
  std::vector<std::string> atoms = {"a", "b"};
  for (int round = 0; round < 30; ++round) {
    Formula f = testutil::random_formula(rng, 3, atoms);
    Formula g = testutil::random_formula(rng, 3, atoms);
    for (auto [k, l] : {std::pair<size_t, size_t>{4, 1}, {1, 4}, {0, 3}, {3, 1}}) {
      auto fast = bounded_equiv(f, g, atoms, k, l);
      auto slow = testutil::bounded_equiv_ref(f, g, atoms, k, l);
      CAPTURE(to_string(f));
      CAPTURE(to_string(g));
      CAPTURE(k);
      CAPTURE(l);
      CHECK(fast.has_value() == slow.has_value());
    }
  }
}

TEST_CASE("bounded_equiv prefix bounds matter") {
  Formula a = atom("a");
  // on loop-only words G a and G X a coincide; a one-letter prefix tells
  // them apart
  CHECK_FALSE(bounded_equiv(globally(a), globally(next(a)), {"a"}, 0, 2).has_value());
  auto cex = bounded_equiv(globally(a), globally(next(a)), {"a"}, 1, 2);
  REQUIRE(cex.has_value());
  CHECK(eval_at(*cex, globally(a), 0) != eval_at(*cex, globally(next(a)), 0));

  // loop-only difference is found with an empty prefix bound
  auto loop_cex = bounded_equiv(a, next(a), {"a"}, 0, 2);
  REQUIRE(loop_cex.has_value());
  CHECK(loop_cex->prefix.empty());
  CHECK(eval_at(*loop_cex, a, 0) != eval_at(*loop_cex, next(a), 0));

  CHECK_THROWS_AS(bounded_equiv(a, a, {"a"}, 1, 0), std::invalid_argument);
}

TEST_CASE("nnf hits the stated normal forms") {
  Formula a = atom("a"), b = atom("b");
  CHECK(nnf(lnot(land(a, b))) == lor(lnot(a), lnot(b)));
  CHECK(nnf(lnot(next(a))) == next(lnot(a)));
  CHECK(nnf(lnot(until(a, b))) == release(lnot(a), lnot(b)));
  CHECK(nnf(lnot(release(a, b))) == until(lnot(a), lnot(b)));
  CHECK(nnf(lnot(globally(a))) == eventually(lnot(a)));
  CHECK(nnf(lnot(eventually(a))) == globally(lnot(a)));
  CHECK(nnf(lnot(weak_until(a, b))) == until(land(a, lnot(b)), land(lnot(a), lnot(b))));
  CHECK(nnf(implies(a, b)) == lor(lnot(a), b));
  CHECK(nnf(lnot(lnot(a))) == a);
}

TEST_CASE("nnf output is in normal form and equivalent") {
  std::mt19937 rng(23);
  std::vector<std::string> atoms = {"a", "b", "c"};
  for (int round = 0; round < 120; ++round) {
    Formula f = testutil::random_formula(rng, 4, atoms);
    Formula g = nnf(f);
    CAPTURE(to_string(f));
    CHECK(is_nnf(g));
    CHECK(equiv(f, g, atoms_of(f).empty() ? std::vector<std::string>{"a"} : atoms_of(f), 3, 3));
  }
}

namespace {

bool only_ops(const Formula& f, const std::set<Op>& allowed) {
  switch (f.op()) {
    case Op::True:
    case Op::False:
    case Op::Atom:
      return true;
    case Op::Not:
    case Op::And:
    case Op::Or:
      break;  // boolean core is always allowed
    default:
      if (!allowed.count(f.op())) return false;
  }
  if (is_unary(f.op())) return only_ops(f.left(), allowed);
  if (is_binary(f.op())) return only_ops(f.left(), allowed) && only_ops(f.right(), allowed);
  return true;
}

}  // namespace

TEST_CASE("replace_derived rewrites exactly the operators outside keep") {
  Formula a = atom("a"), b = atom("b");
  std::set<Op> u_base = {Op::Next, Op::Until};

  CHECK(replace_derived(eventually(a), u_base) == until(tt(), a));
  CHECK(replace_derived(weak_until(a, b), u_base) ==
        lor(until(a, b), lnot(until(tt(), lnot(a)))));
  CHECK(replace_derived(until(a, b), u_base) == until(a, b));

  std::mt19937 rng(31);
  std::vector<std::string> atoms = {"a", "b", "c"};
  std::vector<std::set<Op>> keeps = {
      {Op::Next, Op::Until},
      {Op::Next, Op::Release},
      {Op::Next, Op::Until, Op::Release, Op::Globally, Op::Finally},
  };
  for (int round = 0; round < 90; ++round) {
    Formula f = testutil::random_formula(rng, 4, atoms);
    const auto& keep = keeps[round % keeps.size()];
    Formula g = replace_derived(f, keep);
    CAPTURE(to_string(f));
    CAPTURE(to_string(g));
    CHECK(only_ops(g, keep));
    auto ap = atoms_of(f);
    if (ap.empty()) ap = {"a"};
    CHECK(equiv(f, g, ap, 3, 3));
  }

  CHECK_THROWS_AS(replace_derived(a, {Op::Until}), tlsf::Error);          // X missing
  CHECK_THROWS_AS(replace_derived(a, {Op::Next, Op::Globally}), tlsf::Error);  // no U/R
}

namespace {

size_t count_op(const Formula& f, Op op) {
  size_t n = f.op() == op ? 1 : 0;
  if (is_unary(f.op())) return n + count_op(f.left(), op);
  if (is_binary(f.op())) return n + count_op(f.left(), op) + count_op(f.right(), op);
  return n;
}

// inwards: total size of subtrees still sitting under the pushed operator;
// outwards: number of its occurrences. Each changing pass must shrink this.
size_t push_measure(const Formula& f, Direction dir, Op op) {
  if (dir == Direction::Outwards) return count_op(f, op);
  size_t n = f.op() == op ? size(f.left()) : 0;
  if (is_unary(f.op())) return n + push_measure(f.left(), dir, op);
  if (is_binary(f.op()))
    return n + push_measure(f.left(), dir, op) + push_measure(f.right(), dir, op);
  return n;
}

}  // namespace

TEST_CASE("push_pull moves operators and terminates") {
  Formula a = atom("a"), b = atom("b");
  CHECK(push_pull(next(land(a, b)), Direction::Inwards, PushOp::Next) == land(next(a), next(b)));
  CHECK(push_pull(land(next(a), next(b)), Direction::Outwards, PushOp::Next) == next(land(a, b)));
  CHECK(push_pull(globally(land(a, globally(b))), Direction::Inwards, PushOp::Globally) ==
        land(globally(a), globally(b)));
  CHECK(push_pull(eventually(lor(a, b)), Direction::Inwards, PushOp::Finally) ==
        lor(eventually(a), eventually(b)));
  CHECK(push_pull(next(until(a, b)), Direction::Inwards, PushOp::Next) ==
        until(next(a), next(b)));

  std::mt19937 rng(41);
  std::vector<std::string> atoms = {"a", "b"};
  std::vector<std::pair<Direction, PushOp>> configs = {
      {Direction::Inwards, PushOp::Next},     {Direction::Outwards, PushOp::Next},
      {Direction::Inwards, PushOp::Finally},  {Direction::Outwards, PushOp::Finally},
      {Direction::Inwards, PushOp::Globally}, {Direction::Outwards, PushOp::Globally},
  };
  for (int round = 0; round < 120; ++round) {
    Formula f = testutil::random_formula(rng, 4, atoms);
    auto [dir, pop] = configs[round % configs.size()];
    Op op = pop == PushOp::Next ? Op::Next : pop == PushOp::Finally ? Op::Finally : Op::Globally;

    // single passes strictly decrease the measure until the fixpoint
    Formula cur = f;
    size_t guard = 0;
    while (true) {
      Formula nxt = push_pull(cur, dir, pop, /*single_pass=*/true);
      if (nxt == cur) break;
      CHECK(push_measure(nxt, dir, op) < push_measure(cur, dir, op));
      cur = nxt;
      REQUIRE(++guard < 200);
    }
    Formula fixed = push_pull(f, dir, pop);
    CHECK(fixed == cur);
    CHECK(push_pull(fixed, dir, pop) == fixed);

    auto ap = atoms_of(f);
    if (ap.empty()) ap = {"a"};
    CHECK(equiv(f, fixed, ap, 3, 3));
  }
}

TEST_CASE("formula utilities") {
  Formula a = atom("a"), b = atom("b");
  CHECK(temporal_depth(land(a, b)) == 0);
  CHECK(temporal_depth(next(until(a, b))) == 2);
  CHECK(size(land(a, b)) == 3);
  CHECK(to_string(globally(implies(a, eventually(b)))) == "G (a -> F b)");
  CHECK(to_basic_string(land(a, b)) == "((a) && (b))");
  CHECK(atoms_of(land(a, lnot(b))) == std::vector<std::string>{"a", "b"});
  CHECK(compare(a, a) == 0);
  CHECK(compare(a, b) != 0);
  CHECK(land(a, b) == land(a, b));
  CHECK(land(a, b) != land(b, a));
}
