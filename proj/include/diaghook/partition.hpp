#pragma once

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diaghook/error.hpp"

namespace diaghook {

/// An integer partition: weakly decreasing positive parts. The empty
/// partition is a regular value. Instances are immutable once built.
class Partition {
 public:
  Partition() = default;

  /// Validates `parts`; unsorted or non-positive input is rejected, never
  /// normalised. Throws NonMonotonic or NonPositivePart.
  explicit Partition(std::vector<Int> parts);
  Partition(std::initializer_list<Int> parts) : Partition(std::vector<Int>(parts)) {}

  std::span<const Int> parts() const noexcept { return parts_; }
  const std::vector<Int>& vector() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  Int weight() const noexcept { return weight_; }

  /// Part `i` (1-based); zero beyond the last part.
  Int part(std::size_t i) const noexcept {
    return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
  }

  /// Durfee square size: largest i with part(i) >= i.
  std::size_t durfee_size() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<Int> parts_;
  Int weight_ = 0;
};

/// Hook at the 1-based cell (row, col).
struct HookData {
  Int row = 0;
  Int col = 0;
  Int arm = 0;
  Int leg = 0;
  Int length = 0;

  friend bool operator==(const HookData&, const HookData&) = default;
};

/// Strictly decreasing positive odd integers: the diagonal hook lengths
/// of a symmetric partition.
class DeltaSet {
 public:
  DeltaSet() = default;
  /// Throws InvalidDeltaSet if not strictly decreasing, positive and odd.
  explicit DeltaSet(std::vector<Int> lengths);
  DeltaSet(std::initializer_list<Int> lengths) : DeltaSet(std::vector<Int>(lengths)) {}

  const std::vector<Int>& lengths() const noexcept { return lengths_; }
  std::size_t size() const noexcept { return lengths_.size(); }
  bool empty() const noexcept { return lengths_.empty(); }
  Int sum() const noexcept;
  std::string to_string() const;

  friend bool operator==(const DeltaSet&, const DeltaSet&) = default;

 private:
  std::vector<Int> lengths_;
};

/// Frobenius pair of one diagonal hook: (leg | arm).
struct LegArm {
  Int leg = 0;
  Int arm = 0;
  friend bool operator==(const LegArm&, const LegArm&) = default;
};

Partition new_partition(std::vector<Int> parts);

Partition conjugate(const Partition& lambda);

/// Throws CellOutOfDiagram unless (i,j) is a cell of [lambda].
HookData hook_at(const Partition& lambda, Int i, Int j);

bool is_symmetric(const Partition& lambda);

/// Hooks at the diagonal cells (i,i), i = 1..durfee_size, read straight off
/// the Young diagram. This is the brute-force reference every formula is
/// checked against.
std::vector<HookData> diagonal_hooks_oracle(const Partition& lambda);

/// Oracle hook lengths of a symmetric partition as a DeltaSet.
DeltaSet delta_oracle(const Partition& lambda);

/// Inverse of the Frobenius reading: the partition whose diagonal hooks have
/// exactly these (leg, arm) pairs. Throws NotStrictlyDecreasing.
Partition partition_from_delta(std::span<const LegArm> pairs);

/// Inverse with separate leg and arm lists. Throws LengthMismatch when the
/// lists differ in size.
Partition partition_from_delta(std::span<const Int> legs, std::span<const Int> arms);

/// The symmetric partition with the given diagonal hook lengths.
Partition symmetric_from_delta(const DeltaSet& delta);

/// Every partition of n exactly once, in reverse lexicographic order.
std::vector<Partition> enumerate_partitions(Int n, bool symmetric_only = false);

/// Streaming form of enumerate_partitions.
void for_each_partition(Int n, bool symmetric_only, const std::function<void(const Partition&)>& visit);

}  // namespace diaghook
