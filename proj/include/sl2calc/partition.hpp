#pragma once

#include <string>
#include <vector>

#include "sl2calc/error.hpp"

namespace sl2calc {

/// A partition of n: positive parts in canonical descending order.
/// Equality is multiset equality (both sides are canonical).
class Partition {
 public:
  Partition() = default;

  /// Canonicalizes (sorts descending). Throws if any part is < 1.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int total() const { return total_; }
  bool empty() const { return parts_.empty(); }
  int size() const { return static_cast<int>(parts_.size()); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int smallest() const { return parts_.empty() ? 0 : parts_.back(); }

  /// Multiplicity of a value among the parts.
  int count(int value) const;

  /// (value, multiplicity) pairs, values descending.
  std::vector<std::pair<int, int>> multiplicities() const;

  bool operator==(const Partition& other) const { return parts_ == other.parts_; }
  bool operator!=(const Partition& other) const { return parts_ != other.parts_; }
  bool operator<(const Partition& other) const { return parts_ < other.parts_; }

  /// "[5,3,1,1]"
  std::string to_string() const;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// The bracket normalization: keep the strictly positive entries of `seq`,
/// pad with 1's up to total `n`, sort descending. The positive entries must
/// not already exceed n; if they do the rule application has left its
/// domain and Errc::overflow is raised (never silent truncation).
Partition normalize(const std::vector<int>& seq, int n);

/// normalize((p_i - k)_i, n).
Partition shift(const Partition& p, int k, int n);

/// All partitions of n in descending lexicographic order (⟨n⟩ first,
/// all-ones last). Deterministic.
std::vector<Partition> all_partitions(int n);

}  // namespace sl2calc
