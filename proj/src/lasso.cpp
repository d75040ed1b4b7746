#include "tlsf/lasso.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace tlsf::ltl {

namespace {

// Formula flattened to an array: children precede parents.
struct FlatNode {
  Op op;
  int lhs = -1, rhs = -1;
  int atom_bit = -1;
};

struct FlatFormula {
  std::vector<FlatNode> nodes;
  int root = -1;
};

struct Flattener {
  const std::vector<std::string>& atoms;
  std::vector<FlatNode> nodes;
  // structural hash-consing so shared subtrees are computed once
  std::map<std::tuple<Op, int, int, int>, int> cache;

  int flatten(const Formula& f) {
    int lhs = -1, rhs = -1, bit = -1;
    switch (f.op()) {
      case Op::True:
      case Op::False:
        break;
      case Op::Atom: {
        auto it = std::find(atoms.begin(), atoms.end(), f.atom_name());
        if (it == atoms.end())
          throw std::invalid_argument("atom '" + f.atom_name() + "' is not in the alphabet");
        bit = static_cast<int>(it - atoms.begin());
        break;
      }
      default:
        lhs = flatten(f.left());
        if (is_binary(f.op())) rhs = flatten(f.right());
    }
    auto key = std::make_tuple(f.op(), lhs, rhs, bit);
    auto [it, inserted] = cache.emplace(key, static_cast<int>(nodes.size()));
    if (inserted) nodes.push_back(FlatNode{f.op(), lhs, rhs, bit});
    return it->second;
  }
};

}  // namespace

bool LassoWord::holds(size_t position, size_t atom_index) const {
  size_t p = position < prefix.size() ? position
                                      : prefix.size() + (position - prefix.size()) % loop.size();
  uint32_t letter = p < prefix.size() ? prefix[p] : loop[p - prefix.size()];
  return (letter >> atom_index) & 1u;
}

std::string LassoWord::str() const {
  auto letter_str = [&](uint32_t letter) {
    std::string s = "{";
    bool first = true;
    for (size_t i = 0; i < atoms.size(); ++i)
      if ((letter >> i) & 1u) {
        if (!first) s += ",";
        s += atoms[i];
        first = false;
      }
    return s + "}";
  };
  std::string s;
  for (uint32_t l : prefix) s += letter_str(l);
  s += "(";
  for (uint32_t l : loop) s += letter_str(l);
  s += ")^w";
  return s;
}

namespace {

class LassoEvaluator {
 public:
  LassoEvaluator(const LassoWord& word, const Formula& f) : word_(word) {
    if (word.loop.empty()) throw std::invalid_argument("lasso loop must be nonempty");
    Flattener fl{word.atoms, {}, {}};
    int root = fl.flatten(f);
    flat_ = FlatFormula{std::move(fl.nodes), root};
    total_ = word.prefix.size() + word.loop.size();
    memo_.assign(flat_.nodes.size() * total_, -1);
  }

  bool eval(size_t position) { return eval(flat_.root, normalize(position)); }

 private:
  size_t normalize(size_t p) const {
    size_t pre = word_.prefix.size();
    return p < total_ ? p : pre + (p - pre) % word_.loop.size();
  }
  size_t succ(size_t p) const { return p + 1 < total_ ? p + 1 : word_.prefix.size(); }
  bool letter_bit(size_t p, int bit) const {
    uint32_t letter =
        p < word_.prefix.size() ? word_.prefix[p] : word_.loop[p - word_.prefix.size()];
    return (letter >> bit) & 1u;
  }

  bool eval(int node, size_t pos) {
    int8_t& slot = memo_[static_cast<size_t>(node) * total_ + pos];
    if (slot >= 0) return slot != 0;
    const FlatNode& n = flat_.nodes[node];
    bool r = false;
    switch (n.op) {
      case Op::True: r = true; break;
      case Op::False: r = false; break;
      case Op::Atom: r = letter_bit(pos, n.atom_bit); break;
      case Op::Not: r = !eval(n.lhs, pos); break;
      case Op::And: r = eval(n.lhs, pos) && eval(n.rhs, pos); break;
      case Op::Or: r = eval(n.lhs, pos) || eval(n.rhs, pos); break;
      case Op::Implies: r = !eval(n.lhs, pos) || eval(n.rhs, pos); break;
      case Op::Iff: r = eval(n.lhs, pos) == eval(n.rhs, pos); break;
      case Op::Next: r = eval(n.lhs, succ(pos)); break;
      case Op::Globally: r = walk_globally(n.lhs, pos); break;
      case Op::Finally: r = walk_finally(n.lhs, pos); break;
      case Op::Until: r = walk_until(n.lhs, n.rhs, pos); break;
      case Op::Release: r = walk_release(n.lhs, n.rhs, pos); break;
      case Op::WeakUntil: r = walk_weak_until(n.lhs, n.rhs, pos); break;
    }
    slot = r ? 1 : 0;
    return r;
  }

  // From any position, total_ steps visit every reachable position of the lasso.
  bool walk_globally(int a, size_t pos) {
    size_t q = pos;
    for (size_t k = 0; k <= total_; ++k) {
      if (!eval(a, q)) return false;
      q = succ(q);
    }
    return true;
  }
  bool walk_finally(int a, size_t pos) {
    size_t q = pos;
    for (size_t k = 0; k <= total_; ++k) {
      if (eval(a, q)) return true;
      q = succ(q);
    }
    return false;
  }
  bool walk_until(int a, int b, size_t pos) {
    size_t q = pos;
    for (size_t k = 0; k <= total_; ++k) {
      if (eval(b, q)) return true;
      if (!eval(a, q)) return false;
      q = succ(q);
    }
    return false;
  }
  bool walk_release(int a, int b, size_t pos) {
    size_t q = pos;
    for (size_t k = 0; k <= total_; ++k) {
      if (!eval(b, q)) return false;
      if (eval(a, q)) return true;
      q = succ(q);
    }
    return true;
  }
  bool walk_weak_until(int a, int b, size_t pos) {
    size_t q = pos;
    for (size_t k = 0; k <= total_; ++k) {
      if (eval(b, q)) return true;
      if (!eval(a, q)) return false;
      q = succ(q);
    }
    return true;
  }

  const LassoWord& word_;
  FlatFormula flat_;
  size_t total_ = 0;
  std::vector<int8_t> memo_;
};

}  // namespace

bool eval_at(const LassoWord& word, const Formula& f, size_t position) {
  LassoEvaluator ev(word, f);
  return ev.eval(position);
}

void for_each_lasso(const std::vector<std::string>& atoms, size_t prefix_len, size_t loop_len,
                    const std::function<bool(const LassoWord&)>& fn) {
  assert(loop_len >= 1);
  size_t letters = size_t{1} << atoms.size();
  LassoWord w;
  w.atoms = atoms;
  w.prefix.assign(prefix_len, 0);
  w.loop.assign(loop_len, 0);
  size_t total = prefix_len + loop_len;
  std::vector<uint32_t> cur(total, 0);
  while (true) {
    for (size_t i = 0; i < prefix_len; ++i) w.prefix[i] = cur[i];
    for (size_t i = 0; i < loop_len; ++i) w.loop[i] = cur[prefix_len + i];
    if (!fn(w)) return;
    size_t i = 0;
    for (; i < total; ++i) {
      if (++cur[i] < letters) break;
      cur[i] = 0;
    }
    if (i == total) return;
  }
}

// ---------------------------------------------------------------------------
// bounded_equiv
//
// Checking every lasso shape one word at a time is hopeless at the bound
// sizes the test suite uses, so truth tables over the letter assignments are
// computed instead: for a fixed shape (prefix = K, loop = l), the truth of a
// subformula at a position is a boolean function of the |atoms|*(K+l) letter
// bits, represented as a packed bitset over all assignments. Loop positions
// only depend on loop letters; prefix position p additionally depends on the
// letters at p..K-1. Layers are computed back to front, the front layer is
// streamed in blocks per first-letter value so a difference exits early.
//
// Only covering shapes are enumerated: any lasso with |prefix| < K denotes
// the same word as one with |prefix| = K (rotate the loop into the prefix),
// and a loop of length l denotes the same word as its unrolling to any
// multiple, so loop lengths with a proper multiple <= max_loop are skipped.
// ---------------------------------------------------------------------------

namespace {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  size_t bits() const { return bits_; }
  void fill(bool v) {
    std::fill(words_.begin(), words_.end(), v ? ~uint64_t{0} : 0);
    if (v) trim();
  }
  void set_from_var(size_t var) {
    // bit i of the table = value of assignment-bit `var` in index i
    if (var >= 6) {
      size_t run = size_t{1} << (var - 6);
      for (size_t w = 0; w < words_.size(); ++w)
        words_[w] = ((w / run) & 1) ? ~uint64_t{0} : 0;
    } else {
      static const uint64_t pat[6] = {0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull,
                                      0xF0F0F0F0F0F0F0F0ull, 0xFF00FF00FF00FF00ull,
                                      0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
      std::fill(words_.begin(), words_.end(), pat[var]);
    }
    trim();
  }

  void assign_not(const Bitset& a) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] = ~a.words_[i];
    trim();
  }
  void assign_and(const Bitset& a, const Bitset& b) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] = a.words_[i] & b.words_[i];
  }
  void assign_or(const Bitset& a, const Bitset& b) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] = a.words_[i] | b.words_[i];
  }
  void assign_implies(const Bitset& a, const Bitset& b) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] = ~a.words_[i] | b.words_[i];
    trim();
  }
  void assign_iff(const Bitset& a, const Bitset& b) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] = ~(a.words_[i] ^ b.words_[i]);
    trim();
  }
  void assign_copy(const Bitset& a) { words_ = a.words_; bits_ = a.bits_; }

  void and_in(const Bitset& a) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= a.words_[i];
  }
  void or_and_in(const Bitset& path, const Bitset& a) {  // this |= path & a
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= path.words_[i] & a.words_[i];
  }
  void or_and3_in(const Bitset& path, const Bitset& a, const Bitset& b) {
    for (size_t i = 0; i < words_.size(); ++i)
      words_[i] |= path.words_[i] & a.words_[i] & b.words_[i];
  }
  void or_in(const Bitset& a) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= a.words_[i];
  }

  std::optional<size_t> first_diff(const Bitset& other) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      uint64_t d = words_[i] ^ other.words_[i];
      if (d) return i * 64 + static_cast<size_t>(__builtin_ctzll(d));
    }
    return std::nullopt;
  }

  bool test(size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(size_t i, bool v) {
    if (v)
      words_[i / 64] |= uint64_t{1} << (i % 64);
    else
      words_[i / 64] &= ~(uint64_t{1} << (i % 64));
  }

  // Copy `block` (a power-of-two sized slice) to slot `index` of this bitset.
  void write_block(const Bitset& block, size_t index) {
    size_t b = block.bits_;
    if (b % 64 == 0) {
      size_t words = b / 64;
      std::copy(block.words_.begin(), block.words_.end(),
                words_.begin() + static_cast<ptrdiff_t>(index * words));
    } else {
      for (size_t i = 0; i < b; ++i) set(index * b + i, block.test(i));
    }
  }

 private:
  void trim() {
    size_t rem = bits_ % 64;
    if (rem && !words_.empty()) words_.back() &= (~uint64_t{0}) >> (64 - rem);
  }
  size_t bits_ = 0;
  std::vector<uint64_t> words_;
};

struct ShapeChecker {
  const FlatFormula& flat;
  int root_f, root_g;
  size_t n_atoms, K, l;

  size_t loop_bits() const { return n_atoms * l; }
  // assignment-bit of atom `bit` at loop position j
  size_t loop_var(size_t j, int bit) const { return n_atoms * j + bit; }
  // assignment-bit of atom `bit` at prefix position q, within a table that
  // spans letters p..K-1 (letter K-1 sits just above the loop bits)
  size_t prefix_var(size_t q, int bit) const { return loop_bits() + n_atoms * (K - 1 - q) + bit; }

  // per-node tables at every loop position
  std::vector<std::vector<Bitset>> loop_tables;

  void compute_loop_tables() {
    size_t nbits = std::max<size_t>(loop_bits(), 0);
    size_t space = size_t{1} << nbits;
    loop_tables.assign(flat.nodes.size(), {});
    for (size_t id = 0; id < flat.nodes.size(); ++id) {
      const FlatNode& n = flat.nodes[id];
      auto& tabs = loop_tables[id];
      tabs.assign(l, Bitset(space));
      for (size_t j = 0; j < l; ++j) {
        Bitset& t = tabs[j];
        switch (n.op) {
          case Op::True: t.fill(true); break;
          case Op::False: t.fill(false); break;
          case Op::Atom: t.set_from_var(loop_var(j, n.atom_bit)); break;
          case Op::Not: t.assign_not(loop_tables[n.lhs][j]); break;
          case Op::And: t.assign_and(loop_tables[n.lhs][j], loop_tables[n.rhs][j]); break;
          case Op::Or: t.assign_or(loop_tables[n.lhs][j], loop_tables[n.rhs][j]); break;
          case Op::Implies: t.assign_implies(loop_tables[n.lhs][j], loop_tables[n.rhs][j]); break;
          case Op::Iff: t.assign_iff(loop_tables[n.lhs][j], loop_tables[n.rhs][j]); break;
          case Op::Next: t.assign_copy(loop_tables[n.lhs][(j + 1) % l]); break;
          case Op::Globally: {
            t.fill(true);
            for (size_t s = 0; s < l; ++s) t.and_in(loop_tables[n.lhs][(j + s) % l]);
            break;
          }
          case Op::Finally: {
            t.fill(false);
            for (size_t s = 0; s < l; ++s) t.or_in(loop_tables[n.lhs][(j + s) % l]);
            break;
          }
          case Op::Until: {
            Bitset path(space);
            path.fill(true);
            t.fill(false);
            for (size_t s = 0; s < l; ++s) {
              size_t q = (j + s) % l;
              t.or_and_in(path, loop_tables[n.rhs][q]);
              path.and_in(loop_tables[n.lhs][q]);
            }
            break;
          }
          case Op::Release: {
            Bitset path(space);
            path.fill(true);
            t.fill(false);
            for (size_t s = 0; s < l; ++s) {
              size_t q = (j + s) % l;
              t.or_and3_in(path, loop_tables[n.lhs][q], loop_tables[n.rhs][q]);
              path.and_in(loop_tables[n.rhs][q]);
            }
            t.or_in(path);  // rhs held through a full period
            break;
          }
          case Op::WeakUntil: {
            Bitset path(space);
            path.fill(true);
            t.fill(false);
            for (size_t s = 0; s < l; ++s) {
              size_t q = (j + s) % l;
              t.or_and_in(path, loop_tables[n.rhs][q]);
              path.and_in(loop_tables[n.lhs][q]);
            }
            t.or_in(path);  // lhs held through a full period
            break;
          }
        }
      }
    }
  }

  // Compute all node tables for prefix position p over the space of letters
  // (p+1..K-1, loop) with letter p fixed to `hi`. `next_layer` holds the
  // position p+1 tables over the same space (loop tables at j=0 when p+1==K).
  void compute_block(uint32_t hi, const std::vector<Bitset>& next_layer, size_t space,
                     std::vector<Bitset>& out) {
    out.assign(flat.nodes.size(), Bitset());
    for (size_t id = 0; id < flat.nodes.size(); ++id) {
      const FlatNode& n = flat.nodes[id];
      Bitset t(space);
      switch (n.op) {
        case Op::True: t.fill(true); break;
        case Op::False: t.fill(false); break;
        case Op::Atom: {
          // letter p is the constant `hi`; deeper letters are table variables
          t.fill((hi >> n.atom_bit) & 1u);
          break;
        }
        case Op::Not: t.assign_not(out[n.lhs]); break;
        case Op::And: t.assign_and(out[n.lhs], out[n.rhs]); break;
        case Op::Or: t.assign_or(out[n.lhs], out[n.rhs]); break;
        case Op::Implies: t.assign_implies(out[n.lhs], out[n.rhs]); break;
        case Op::Iff: t.assign_iff(out[n.lhs], out[n.rhs]); break;
        case Op::Next: t.assign_copy(next_layer[n.lhs]); break;
        case Op::Globally: t.assign_and(out[n.lhs], next_layer[id]); break;
        case Op::Finally: t.assign_or(out[n.lhs], next_layer[id]); break;
        case Op::Until: {
          // a U b = b | (a & X(a U b))
          t.assign_copy(out[n.rhs]);
          t.or_and_in(out[n.lhs], next_layer[id]);
          break;
        }
        case Op::Release: {
          // a R b = b & (a | X(a R b))
          Bitset rest(space);
          rest.assign_or(out[n.lhs], next_layer[id]);
          t.assign_and(out[n.rhs], rest);
          break;
        }
        case Op::WeakUntil: {
          t.assign_copy(out[n.rhs]);
          t.or_and_in(out[n.lhs], next_layer[id]);
          break;
        }
      }
      out[id] = std::move(t);
    }
  }
};

}  // namespace

std::optional<LassoWord> bounded_equiv(const Formula& f, const Formula& g,
                                       const std::vector<std::string>& atoms,
                                       size_t max_prefix, size_t max_loop) {
  if (max_loop == 0) throw std::invalid_argument("max_loop must be at least 1");
  size_t n_atoms = atoms.size();
  size_t worst_bits = n_atoms * (max_prefix + max_loop);
  if (worst_bits > 30)
    throw std::invalid_argument("bounded_equiv: alphabet/bounds too large for exhaustive check");

  Flattener fl{atoms, {}, {}};
  int root_f = fl.flatten(f);
  int root_g = fl.flatten(g);
  FlatFormula flat{std::move(fl.nodes), -1};

  const size_t K = max_prefix;

  // loop lengths with a proper multiple <= max_loop are covered by that multiple
  std::vector<size_t> loops;
  for (size_t l = 1; l <= max_loop; ++l) {
    bool covered = false;
    for (size_t m = 2 * l; m <= max_loop; m += l) covered = covered || (m % l == 0);
    if (!covered) loops.push_back(l);
  }

  for (size_t l : loops) {
    ShapeChecker sc{flat, root_f, root_g, n_atoms, K, l, {}};
    sc.compute_loop_tables();

    auto decode = [&](size_t index, uint32_t hi0, bool with_prefix) {
      LassoWord w;
      w.atoms = atoms;
      w.loop.assign(l, 0);
      for (size_t j = 0; j < l; ++j)
        w.loop[j] = static_cast<uint32_t>((index >> (n_atoms * j)) & ((1u << n_atoms) - 1));
      if (with_prefix) {
        w.prefix.assign(K, 0);
        w.prefix[0] = hi0;
        for (size_t q = 1; q < K; ++q)
          w.prefix[q] = static_cast<uint32_t>((index >> sc.prefix_var(q, 0)) &
                                              ((1u << n_atoms) - 1));
      }
      return w;
    };

    if (K == 0) {
      auto d = sc.loop_tables[root_f][0].first_diff(sc.loop_tables[root_g][0]);
      if (d) return decode(*d, 0, false);
      continue;
    }

    // next_layer starts as the loop tables at loop position 0
    size_t space = size_t{1} << (n_atoms * l);
    std::vector<Bitset> next_layer(flat.nodes.size());
    for (size_t id = 0; id < flat.nodes.size(); ++id)
      next_layer[id] = sc.loop_tables[id][0];

    uint32_t letters = 1u << n_atoms;

    // layers K-1 .. 1 are materialized in full (concatenation of per-hi blocks)
    for (size_t p = K; p-- > 1;) {
      size_t full_space = space << n_atoms;
      std::vector<Bitset> layer(flat.nodes.size(), Bitset(full_space));
      std::vector<Bitset> block;
      for (uint32_t hi = 0; hi < letters; ++hi) {
        sc.compute_block(hi, next_layer, space, block);
        for (size_t id = 0; id < flat.nodes.size(); ++id)
          layer[id].write_block(block[id], hi);
      }
      next_layer = std::move(layer);
      space = full_space;
    }

    // layer 0 is streamed per first-letter block with early exit
    std::vector<Bitset> block;
    for (uint32_t hi = 0; hi < letters; ++hi) {
      sc.compute_block(hi, next_layer, space, block);
      auto d = block[root_f].first_diff(block[root_g]);
      if (d) return decode(*d, hi, true);
    }
  }
  return std::nullopt;
}

}  // namespace tlsf::ltl
