#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "explab/exactla/matrix.hpp"

namespace explab {

struct Letter {
  std::size_t generator;  // 0-based index into GroupPresentation::generators
  int exponent;           // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
};

// DSL: "gens: a b; rel: a b a^-1 b^-1; rel: ...". Tokens are generator names
// with an optional integer exponent "^k"; "[u, w]" is the commutator
// u w u^-1 w^-1 and "1" the empty word. An empty "rel:" clause adds nothing.
// Errors are ParseError with line and column.
GroupPresentation parse_presentation(std::string_view text);
// Prints in the DSL; parse_presentation(format_presentation(p)) reproduces p.
std::string format_presentation(const GroupPresentation& p);

Word inverse(const Word& w);
Word commutator(const Word& u, const Word& w);

// Relators by generators; entry (r, g) is the exponent sum of g in relator r.
IntMatrix presentation_d1(const GroupPresentation& p);

// Generators s1..s(n-1); commutators [s_i, s_j] for j - i >= 2 come first,
// then s_i s_(i+1) s_i s_(i+1)^-1 s_i^-1 s_(i+1)^-1. Requires n >= 2.
GroupPresentation braid_presentation(std::size_t n);

// Generators x_ij (i != j) in lexicographic order; [x_ij, x_kl] for pairs with
// i != l and j != k, then [x_ij, x_jk] x_ik^-1 for distinct i, j, k.
// Requires n >= 2.
GroupPresentation steinberg_presentation(std::size_t n);

}  // namespace explab
