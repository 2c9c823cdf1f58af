#pragma once

#include <string>
#include <vector>

#include "sl2calc/group.hpp"
#include "sl2calc/partition.hpp"

namespace sl2calc {

/// A parity-valid type: a group kind together with a partition of its
/// type total. The bad-parity rule is enforced at construction, so a live
/// SL2Type is always valid. Instances are immutable.
class SL2Type {
 public:
  /// Validates the (group, partition) pair. Throws Errc::wrong_total or
  /// Errc::bad_parity (message names the offending part).
  static SL2Type make(GroupKind group, Partition partition);

  const GroupKind& group() const { return group_; }
  const Partition& partition() const { return partition_; }

  bool operator==(const SL2Type& other) const {
    return group_ == other.group_ && partition_ == other.partition_;
  }
  bool operator!=(const SL2Type& other) const { return !(*this == other); }

  /// Canonical expression, e.g. "Sp10[7,2,2]".
  std::string to_string() const;

 private:
  SL2Type(GroupKind group, Partition partition)
      : group_(group), partition_(std::move(partition)) {}

  GroupKind group_;
  Partition partition_;
};

/// Alias for SL2Type::make.
SL2Type validate(GroupKind group, Partition partition);

/// True iff the pair would pass validate.
bool is_valid_type(const GroupKind& group, const Partition& partition);

/// Type of the one-dimensional unramified characters:
/// GL_n -> [n], Sp_{2n} -> [2n+1], O_{2n} -> [2n-1,1], O_{2n+1} -> [2n].
SL2Type trivial_type(GroupKind group);

/// All-ones type.
SL2Type tempered_type(GroupKind group);

inline constexpr int kEnumerationGuard = 40;

/// All valid types for the group, descending lexicographic, deterministic.
/// Throws Errc::bound_exceeded if the type total is above the guard.
std::vector<SL2Type> enumerate_types(GroupKind group, int guard = kEnumerationGuard);

}  // namespace sl2calc
