#include "sl2calc/sl2type.hpp"

#include "sl2calc/mutation.hpp"

namespace sl2calc {

const char* family_name(Family f) {
  switch (f) {
    case Family::GL: return "GL";
    case Family::Sp: return "Sp";
    case Family::Oeven: return "O";
    case Family::SOodd: return "SO";
  }
  return "?";
}

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::overflow: return "Overflow";
    case Errc::wrong_total: return "WrongTotal";
    case Errc::bad_parity: return "BadParity";
    case Errc::illegal_pair: return "IllegalPair";
    case Errc::rank_mismatch: return "RankMismatch";
    case Errc::rank_too_small: return "RankTooSmall";
    case Errc::undefined_case: return "UndefinedCase";
    case Errc::hypothesis_violated: return "HypothesisViolated";
    case Errc::bound_exceeded: return "BoundExceeded";
    case Errc::empty_odds: return "EmptyOdds";
    case Errc::parity_mismatch: return "ParityMismatch";
    case Errc::unsupported_group: return "UnsupportedGroup";
    case Errc::inconsistent: return "Inconsistent";
    case Errc::parse_error: return "ParseError";
    case Errc::internal: return "Internal";
  }
  return "?";
}

int GroupKind::size() const {
  switch (family) {
    case Family::GL: return rank;
    case Family::Sp: return 2 * rank;
    case Family::Oeven: return 2 * rank;
    case Family::SOodd: return 2 * rank + 1;
  }
  return 0;
}

int GroupKind::type_total() const {
  switch (family) {
    case Family::GL: return rank;
    case Family::Sp: return 2 * rank + 1;
    case Family::Oeven: return 2 * rank;
    case Family::SOodd: return 2 * rank;
  }
  return 0;
}

std::string GroupKind::name() const {
  return std::string(family_name(family)) + std::to_string(size());
}

GroupKind orthogonal_of_size(int n) {
  if (n < 2) fail(Errc::illegal_pair, "orthogonal group of size " + std::to_string(n));
  return n % 2 == 0 ? o_even(n / 2) : so_odd((n - 1) / 2);
}

namespace {

// Parity whose parts are forced to even multiplicity, or -1 for none.
int bad_parity_of(Family f) {
  switch (f) {
    case Family::GL: return -1;
    case Family::Sp: return 0;    // even parts restricted
    case Family::Oeven: return 0;
    case Family::SOodd: return 1; // odd parts restricted
  }
  return -1;
}

}  // namespace

SL2Type SL2Type::make(GroupKind group, Partition partition) {
  if (group.rank < 0) fail(Errc::internal, "negative rank");
  int want = group.type_total();
  if (partition.total() != want) {
    fail(Errc::wrong_total, group.name() + " needs a partition of " + std::to_string(want) +
                                ", got total " + std::to_string(partition.total()));
  }
  int bad = bad_parity_of(group.family);
  if (bad >= 0) {
    for (const auto& [value, mult] : partition.multiplicities()) {
      if (value % 2 == bad && mult % 2 != 0) {
        fail(Errc::bad_parity, "part " + std::to_string(value) + " occurs " +
                                   std::to_string(mult) + " times in a type for " + group.name());
      }
    }
  }
  return SL2Type(group, std::move(partition));
}

SL2Type validate(GroupKind group, Partition partition) {
  return SL2Type::make(group, std::move(partition));
}

bool is_valid_type(const GroupKind& group, const Partition& partition) {
  if (partition.total() != group.type_total()) return false;
  int bad = bad_parity_of(group.family);
  if (bad < 0) return true;
  for (const auto& [value, mult] : partition.multiplicities()) {
    if (value % 2 == bad && mult % 2 != 0) return false;
  }
  return true;
}

std::string SL2Type::to_string() const {
  return group_.name() + partition_.to_string();
}

SL2Type trivial_type(GroupKind group) {
  int n = group.rank;
  switch (group.family) {
    case Family::GL:
      return SL2Type::make(group, n == 0 ? Partition() : Partition({n}));
    case Family::Sp:
      // Rank 0 is the trivial-group marker; its character has type [1].
      return SL2Type::make(group,
                           Partition({2 * n + 1 + mutation::offset(mutation::Knob::trivial_sp_head)}));
    case Family::Oeven:
      return SL2Type::make(
          group, n == 0 ? Partition()
                        : Partition({2 * n - 1 + mutation::offset(mutation::Knob::trivial_o_head), 1}));
    case Family::SOodd:
      return SL2Type::make(group, n == 0 ? Partition() : Partition({2 * n}));
  }
  fail(Errc::internal, "unreachable");
}

SL2Type tempered_type(GroupKind group) {
  return SL2Type::make(group, Partition(std::vector<int>(group.type_total(), 1)));
}

std::vector<SL2Type> enumerate_types(GroupKind group, int guard) {
  int total = group.type_total();
  if (total > guard) {
    fail(Errc::bound_exceeded, group.name() + " has type total " + std::to_string(total) +
                                   " above the enumeration guard " + std::to_string(guard));
  }
  std::vector<SL2Type> out;
  for (auto& p : all_partitions(total)) {
    if (is_valid_type(group, p)) out.push_back(SL2Type::make(group, std::move(p)));
  }
  return out;
}

}  // namespace sl2calc
