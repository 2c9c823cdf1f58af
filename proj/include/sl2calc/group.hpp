#pragma once

#include <string>

#include "sl2calc/error.hpp"

namespace sl2calc {

/// The four group families handled by the calculus. Ranks follow the usual
/// conventions: GL_n has rank n, Sp_{2n} and O_{2n} have rank n, and the
/// odd orthogonal groups O_{2n+1} (labelled SO below) have rank n.
enum class Family { GL, Sp, Oeven, SOodd };

const char* family_name(Family f);

struct GroupKind {
  Family family = Family::GL;
  int rank = 0;  // rank 0 is the trivial-group marker used in recipes

  bool operator==(const GroupKind&) const = default;

  /// Dimension of the defining space: n, 2n, 2n, 2n+1.
  int size() const;

  /// Total of a valid type partition: n, 2n+1, 2n, 2n.
  int type_total() const;

  bool is_orthogonal() const { return family == Family::Oeven || family == Family::SOodd; }

  /// "GL5", "Sp10", "O8", "SO7" — the defining-space size is embedded.
  std::string name() const;
};

inline GroupKind gl(int rank) { return {Family::GL, rank}; }
inline GroupKind sp(int rank) { return {Family::Sp, rank}; }
inline GroupKind o_even(int rank) { return {Family::Oeven, rank}; }
inline GroupKind so_odd(int rank) { return {Family::SOodd, rank}; }

/// Orthogonal group of an n-dimensional space, either parity of n.
GroupKind orthogonal_of_size(int n);

}  // namespace sl2calc
