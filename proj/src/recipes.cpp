#include "sl2calc/recipes.hpp"

#include <algorithm>
#include <numeric>

#include "sl2calc/mutation.hpp"

namespace sl2calc {

namespace {

using mutation::Knob;
using mutation::offset;

Family classical_family(const SL2Type& t, const char* what) {
  Family f = t.group().family;
  if (f != Family::Sp && f != Family::Oeven) {
    fail(Errc::unsupported_group,
         std::string(what) + " handles Sp and even O only, got " + t.group().name());
  }
  return f;
}

// Along a chain the symplectic stages carry odd running sums (2m+1) and
// the orthogonal stages even ones (2m).
GroupKind chain_group_of_size(int size) {
  if (size % 2 == 1) return sp((size - 1) / 2);
  return o_even(size / 2);
}

}  // namespace

std::pair<Partition, Partition> decompose_type(const SL2Type& t) {
  classical_family(t, "type decomposition");
  std::vector<int> odds;
  std::vector<int> doubled;
  for (const auto& [value, mult] : t.partition().multiplicities()) {
    if (value % 2 == 1 && mult % 2 == 1) odds.push_back(value);
    for (int i = 0; i < mult / 2; ++i) doubled.push_back(value);
  }
  return {Partition(std::move(odds)), Partition(std::move(doubled))};
}

std::vector<ChainStep> theta_chain(Family target_family, const std::vector<int>& odds) {
  if (target_family != Family::Sp && target_family != Family::Oeven)
    fail(Errc::unsupported_group, "lift chains target Sp or even O");
  if (odds.empty()) fail(Errc::empty_odds, "lift chain needs at least one part");
  for (size_t i = 0; i < odds.size(); ++i) {
    if (odds[i] % 2 == 0) fail(Errc::parity_mismatch, "chain parts must be odd");
    if (i > 0 && odds[i] <= odds[i - 1])
      fail(Errc::parity_mismatch, "chain parts must be distinct and ascending");
  }
  int k = static_cast<int>(odds.size());
  bool want_odd_count = target_family == Family::Sp;
  if ((k % 2 == 1) != want_odd_count) {
    fail(Errc::parity_mismatch, std::string("a chain into ") +
                                    family_name(target_family) + " needs an " +
                                    (want_odd_count ? "odd" : "even") + " number of parts");
  }

  std::vector<ChainStep> chain;
  size_t consumed;
  int running_sum;
  if (k != 1 && odds[0] == 1) {
    // Seed with a character of O_{1+l2}, type (1, l2).
    running_sum = 1 + odds[1] + offset(Knob::chain_seed_o);
    GroupKind seed = o_even(running_sum / 2);
    chain.push_back({seed, SL2Type::make(seed, Partition({odds[0], odds[1]}))});
    consumed = 2;
  } else {
    // Seed with a character of Sp_{l1-1}, type (l1).
    running_sum = odds[0] + offset(Knob::chain_seed_sp);
    GroupKind seed = sp((running_sum - 1) / 2);
    chain.push_back({seed, SL2Type::make(seed, Partition({odds[0]}))});
    consumed = 1;
  }

  std::vector<int> carried(odds.begin(), odds.begin() + consumed);
  for (size_t i = consumed; i < odds.size(); ++i) {
    running_sum += odds[i];
    carried.push_back(odds[i]);
    GroupKind next = chain_group_of_size(running_sum);
    if (next.family == chain.back().group.family)
      fail(Errc::internal, "lift chain failed to alternate families");
    chain.push_back({next, SL2Type::make(next, Partition(carried))});
  }
  if (chain.back().group.family != target_family)
    fail(Errc::internal, "lift chain ended in the wrong family");
  return chain;
}

RepRecipe build_recipe(const SL2Type& t) {
  Family f = classical_family(t, "recipe construction");
  auto [odds, doubled] = decompose_type(t);

  RepRecipe r;
  r.target = t.group();
  r.distinct_odds = odds;
  r.doubled = doubled;
  r.levi_blocks.assign(doubled.parts().begin(), doubled.parts().end());

  bool degenerate = odds.empty() || odds.parts() == std::vector<int>{1};
  if (degenerate) {
    // G' is the trivial group; only the Levi blocks remain.
    r.base = GroupKind{f, 0};
  } else {
    std::vector<int> ascending(odds.parts().rbegin(), odds.parts().rend());
    r.chain = theta_chain(f, ascending);
    r.base = r.chain.back().group;
  }

  int blocks_rank = std::accumulate(r.levi_blocks.begin(), r.levi_blocks.end(), 0);
  if (r.base.rank + blocks_rank != r.target.rank)
    fail(Errc::internal, "recipe rank bookkeeping failed for " + t.to_string());
  return r;
}

SL2Type recipe_type(const RepRecipe& r) {
  if (r.target.family != Family::Sp && r.target.family != Family::Oeven)
    fail(Errc::inconsistent, "recipe target must be Sp or even O");
  if (r.base.family != r.target.family)
    fail(Errc::inconsistent, "recipe base family must match the target");
  int blocks_rank = std::accumulate(r.levi_blocks.begin(), r.levi_blocks.end(), 0);
  if (r.base.rank + blocks_rank != r.target.rank)
    fail(Errc::inconsistent, "recipe ranks do not add up to the target rank");
  if (!r.chain.empty()) {
    if (!(r.chain.back().group == r.base))
      fail(Errc::inconsistent, "chain must end at the recipe base group");
    for (size_t i = 1; i < r.chain.size(); ++i) {
      if (r.chain[i].group.family == r.chain[i - 1].group.family)
        fail(Errc::inconsistent, "chain families must alternate");
    }
  } else if (r.base.rank != 0) {
    fail(Errc::inconsistent, "an empty chain needs the trivial base group");
  }

  std::vector<int> entries;
  if (!r.chain.empty()) {
    const auto& top = r.chain.back().type_after.partition().parts();
    entries.insert(entries.end(), top.begin(), top.end());
  }
  for (int block : r.levi_blocks) {
    if (block < 1) fail(Errc::inconsistent, "Levi blocks must be positive");
    entries.push_back(block);
    entries.push_back(block);
  }
  try {
    return SL2Type::make(r.target, normalize(entries, r.target.type_total()));
  } catch (const CalcError& e) {
    fail(Errc::inconsistent, std::string("recipe does not evaluate to a valid type: ") + e.what());
  }
}

}  // namespace sl2calc
