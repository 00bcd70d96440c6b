#pragma once

#include <string>
#include <variant>
#include <vector>

#include "hdiff/ring.hpp"

namespace hdiff {

/// A letter of a free word: a generator or a coefficient standing at that position.
using Letter = std::variant<Generator, RatFunc>;
using Word = std::vector<Letter>;

/// lhs = rhs, both sides sums of words.
struct Relation {
  std::string name;
  std::vector<Word> lhs;
  std::vector<Word> rhs;
};

/// Weight relations plus the component relations of the ring. For N = 1 these
/// are the five families Z Z, d d, Z d (i<j and i>j) and Z_i d_i; for N >= 2
/// both printed forms of each copy relation and same-site commutation.
std::vector<Relation> defining_relations(const RingCtx& ctx);

/// The word multiplied out in the ring.
Element evaluate_word(const RingCtx& ctx, const Word& w);
Element evaluate_side(const RingCtx& ctx, const std::vector<Word>& side);

std::string word_to_string(const RingCtx& ctx, const Word& w);
std::string relation_to_string(const RingCtx& ctx, const Relation& r);

}  // namespace hdiff
