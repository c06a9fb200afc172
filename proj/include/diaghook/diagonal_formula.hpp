#pragma once

#include <span>
#include <vector>

#include "diaghook/bisequence.hpp"
#include "diaghook/partition.hpp"

namespace diaghook {

/// Per-residue diagonal counts of a symmetric p-core and the residue sets
/// they induce.
struct CoreCounts {
  Int p = 0;
  std::vector<Int> d0;               ///< d0[g] = number of core diagonal arms = g (mod p)
  std::vector<Int> charged;          ///< residues with d0 > 0
  std::vector<Int> charged_dual;     ///< p-1-g for each charged g
  std::vector<Int> neutral;          ///< all other residues
};

/// The two index sets the d0-shift is built from.
struct ShiftSets {
  std::vector<Int> s;  ///< 0 <= s < d0 with s not among the entry's legs, descending
  std::vector<Int> t;  ///< legs of the entry that are >= d0, descending
};

struct ShiftResult {
  QuotientEntry entry;
  ShiftSets sets;
};

/// Empty core, quotient concentrated at {g, p-1-g} with g off-centre:
/// lengths 2(leg+1)p - 2g - 1 and 2*arm*p + 2g + 1 over the diagonal of
/// component. Throws BadResidue or CenterResidue.
DeltaSet delta_concentrated_pair(const Partition& component, Int residue, Int p);

/// Empty core, quotient concentrated at the self-dual runner (p-1)/2:
/// lengths (2m+1)p. Throws OddModulusRequired for even p and NotSymmetric
/// unless component is self-conjugate.
DeltaSet delta_concentrated_center(const Partition& component, Int p);

/// Empty core: disjoint union of the pair contributions and the centre
/// contribution. Throws WrongQuotientLength or NotSymmetricQuotient.
DeltaSet delta_empty_core(std::span<const Partition> quotient, Int p);

/// Throws NotSymmetric or NotACore.
CoreCounts core_counts(const Partition& core, Int p);

/// Re-measures a runner entry of the empty-core companion from a cut moved
/// d0 rows down:
///   arm a           -> arm a + d0
///   s in S          -> arm d0 - s - 1
///   t in T          -> leg t - d0
ShiftResult d0_shift(const QuotientEntry& entry, Int d0);

/// Full diagonal data of the symmetric partition with the given core and
/// quotient, together with the four contributions to its arm list.
struct GeneralBreakdown {
  CoreCounts counts;
  QuotientBisequence shifted;  ///< D'(lambda), one entry per residue
  std::vector<Int> o1, o2, o3, o4;  ///< arm values, each descending
  Bisequence diagonal;              ///< D(lambda)
  DeltaSet delta;
};

/// Throws NotACore, NotSymmetric, NotSymmetricQuotient, WrongQuotientLength,
/// or InternalInconsistency if two contributions collide.
GeneralBreakdown general_breakdown(const Partition& core, std::span<const Partition> quotient, Int p);

/// Diagonal hook lengths of the symmetric partition with this core and
/// quotient, computed from those alone.
DeltaSet delta_general(const Partition& core, std::span<const Partition> quotient, Int p);

}  // namespace diaghook
