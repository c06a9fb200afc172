#pragma once

#include <span>
#include <string>
#include <vector>

#include "diaghook/bisequence.hpp"
#include "diaghook/partition.hpp"

namespace diaghook {

/// A finite set of bead positions on the non-negative integers. Positions
/// below zero are conceptually beads; positions past the last bead are
/// spaces. Shifting every bead right by one and adding a bead at 0 gives an
/// equivalent set for the same partition.
class BetaSet {
 public:
  BetaSet() = default;
  /// Sorts nothing: throws InvalidBetaSet unless strictly increasing and
  /// non-negative.
  explicit BetaSet(std::vector<Int> beads);
  BetaSet(std::initializer_list<Int> beads) : BetaSet(std::vector<Int>(beads)) {}

  const std::vector<Int>& beads() const noexcept { return beads_; }
  std::size_t size() const noexcept { return beads_.size(); }
  bool empty() const noexcept { return beads_.empty(); }
  /// Largest bead, or -1 for the empty set.
  Int max_bead() const noexcept { return beads_.empty() ? -1 : beads_.back(); }

  bool contains(Int x) const noexcept;

  /// The equivalent set shifted right by `by` positions.
  BetaSet shifted(Int by) const;
  /// Canonical representative: the leading run of beads at 0,1,... removed.
  BetaSet minimal() const;
  bool equivalent(const BetaSet& other) const { return minimal() == other.minimal(); }

  /// Moves the bead at x to the space y (removes the hook (y,x]).
  BetaSet move_bead(Int x, Int y) const;

  std::string to_string() const;

  friend bool operator==(const BetaSet&, const BetaSet&) = default;

 private:
  std::vector<Int> beads_;
};

/// Hook (y, x] of a beta-set: y a space, x a bead, y < x.
struct BetaHook {
  Int y = 0;
  Int x = 0;
  Int length() const noexcept { return x - y; }
  friend bool operator==(const BetaHook&, const BetaHook&) = default;
};

/// The half-integer axis, stored doubled so it stays an exact odd integer.
/// The empty bead set has its axis at -1/2.
struct Axis {
  Int two_theta = -1;

  bool right_of(Int position) const noexcept { return 2 * position > two_theta; }
  bool left_of(Int position) const noexcept { return 2 * position < two_theta; }
  /// theta - 1/2 and theta + 1/2, the nearest integers on either side.
  Int floor() const noexcept { return (two_theta - 1) / 2; }
  Int ceil() const noexcept { return (two_theta + 1) / 2; }

  friend bool operator==(const Axis&, const Axis&) = default;
};

/// First-column construction with k beads. Throws TooFewBeads.
BetaSet beta_of(const Partition& lambda, Int k);

Partition partition_of(const BetaSet& beads);

/// Every hook (y, x] of the set, ordered by bead then space.
std::vector<BetaHook> hooks_of(const BetaSet& beads);

/// Young-diagram cell and arm/leg of a beta-set hook, by counting beads and
/// spaces. Throws NotAPHook if h is not a hook of `beads`.
HookData young_hook_of(const BetaSet& beads, const BetaHook& h);

Axis axis_of(const BetaSet& beads);

struct PlusMinus {
  std::vector<Int> plus;   ///< beads right of the axis, descending
  std::vector<Int> minus;  ///< non-negative spaces left of the axis, ascending
};

PlusMinus plus_minus(const BetaSet& beads);

/// Diagonal legs/arms as distances of X_- and X_+ from the axis.
Bisequence bisequence_of(const BetaSet& beads);

/// True iff reflection through the axis swaps beads and spaces.
bool is_symmetric_beta(const BetaSet& beads);

}  // namespace diaghook
