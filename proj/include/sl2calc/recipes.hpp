#pragma once

#include <vector>

#include "sl2calc/calculus.hpp"
#include "sl2calc/sl2type.hpp"

namespace sl2calc {

/// One stage of an iterated dual-pair lift: the group reached and the type
/// carried at that point. The first step is the seeding character; each
/// later step appends one part via the lift rule.
struct ChainStep {
  GroupKind group;
  SL2Type type_after;
};

/// Realization data for a type on Sp_{2n} or O_{2n}: split the partition
/// into distinct odd parts (realized by a lift chain from a character of a
/// smaller group G') and doubled parts (realized as GL Levi blocks), then
/// assemble by parabolic induction. Zero-rank `base` marks a trivial G'.
struct RepRecipe {
  GroupKind target;
  Partition distinct_odds;
  Partition doubled;
  std::vector<ChainStep> chain;
  std::vector<int> levi_blocks;
  GroupKind base;
};

/// Splits a valid Sp/O-even type: for a value of multiplicity c, an odd
/// value sends one copy to the distinct-odd side when c is odd and
/// floor(c/2) copies to the doubled side; an even value (c is forced even)
/// sends c/2 copies to the doubled side.
std::pair<Partition, Partition> decompose_type(const SL2Type& t);

/// Iterated lift chain realizing a set of distinct odd parts (ascending).
/// Starts at O_{1+l2} with type (1,l2) when there are several parts and the
/// least is 1, otherwise at Sp_{l1-1} with type (l1); each later step lifts
/// to the group of size running-sum, alternating family, appending the next
/// part. The part count must be odd for an Sp target and even for an O one.
std::vector<ChainStep> theta_chain(Family target_family, const std::vector<int>& odds);

/// Full realization of a valid Sp/O-even type.
RepRecipe build_recipe(const SL2Type& t);

/// Evaluates a recipe back to the type it realizes: the chain's final type
/// concatenated with every Levi block twice, normalized to the target
/// total. Throws Errc::inconsistent when the recipe's bookkeeping is off.
SL2Type recipe_type(const RepRecipe& r);

}  // namespace sl2calc
