#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tlsf/ltl.hpp"

namespace tlsf::ltl {

/// An infinite word prefix . loop^omega over a finite atom alphabet.
/// Letters are bitmasks: bit i set <=> atoms[i] holds at that position.
struct LassoWord {
  std::vector<std::string> atoms;
  std::vector<uint32_t> prefix;
  std::vector<uint32_t> loop;  // nonempty

  bool holds(size_t position, size_t atom_index) const;
  std::string str() const;
};

/// Satisfaction of f on word at the given position, exact on the infinite
/// word via lasso periodicity. Positions past the prefix are normalized into
/// the loop; results are memoized per (subformula, normalized position).
/// Throws std::invalid_argument on an empty loop or an atom outside the alphabet.
bool eval_at(const LassoWord& word, const Formula& f, size_t position);

/// Exhaustive bounded equivalence over all lassos with |prefix| <= max_prefix
/// and 1 <= |loop| <= max_loop over the given atoms. Returns std::nullopt when
/// f and g agree at position 0 on every such word, otherwise a witness word.
std::optional<LassoWord> bounded_equiv(const Formula& f, const Formula& g,
                                       const std::vector<std::string>& atoms,
                                       size_t max_prefix, size_t max_loop);

/// Enumerates every lasso with the exact shape (prefix_len, loop_len); the
/// callback returns false to stop. Exposed for the oracle cross-check tests.
void for_each_lasso(const std::vector<std::string>& atoms, size_t prefix_len,
                    size_t loop_len, const std::function<bool(const LassoWord&)>& fn);

}  // namespace tlsf::ltl
