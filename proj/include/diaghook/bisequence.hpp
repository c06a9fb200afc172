#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "diaghook/partition.hpp"

namespace diaghook {

/// The diagonal data (legs | arms) of a partition: two strictly decreasing
/// sequences of non-negative integers of the same length.
class Bisequence {
 public:
  Bisequence() = default;
  /// Throws LengthMismatch or NotStrictlyDecreasing.
  Bisequence(std::vector<Int> legs, std::vector<Int> arms);

  const std::vector<Int>& legs() const noexcept { return legs_; }
  const std::vector<Int>& arms() const noexcept { return arms_; }
  std::size_t size() const noexcept { return legs_.size(); }
  bool empty() const noexcept { return legs_.empty(); }
  bool is_symmetric() const noexcept { return legs_ == arms_; }
  Bisequence dual() const { return Bisequence(arms_, legs_); }
  std::string to_string() const;

  friend bool operator==(const Bisequence&, const Bisequence&) = default;

 private:
  std::vector<Int> legs_;
  std::vector<Int> arms_;
};

/// One residue entry of the quotient of a bisequence. Both sides hold
/// m-values in descending order and need not have equal sizes.
struct QuotientEntry {
  std::vector<Int> legs;
  std::vector<Int> arms;

  bool empty() const noexcept { return legs.empty() && arms.empty(); }
  bool balanced() const noexcept { return legs.size() == arms.size(); }
  friend bool operator==(const QuotientEntry&, const QuotientEntry&) = default;
};

/// The p-tuple of residue entries obtained by splitting legs and arms by
/// residue mod p; legs of residue g land in entry p-1-g.
struct QuotientBisequence {
  std::vector<QuotientEntry> entries;

  Int p() const noexcept { return static_cast<Int>(entries.size()); }
  friend bool operator==(const QuotientBisequence&, const QuotientBisequence&) = default;
};

/// D(lambda), read from the diagonal hooks of the Young diagram.
Bisequence d_of(const Partition& lambda);

/// Throws BadModulus for p < 2.
QuotientBisequence d_quotient(const Bisequence& d, Int p);

/// Inverse of d_quotient. Throws InconsistentQuotient when the reassembled
/// sides differ in size (or cannot be strictly decreasing).
Bisequence d_unquotient(const QuotientBisequence& q, Int p);

/// Legs and arms of residue `residue` mod p, in descending order.
std::pair<std::vector<Int>, std::vector<Int>> residue_class(const Bisequence& d, Int p, Int residue);

/// True iff the nonempty entries of d_quotient(d, p) are exactly `residues`.
bool is_concentrated(const Bisequence& d, Int p, const std::set<Int>& residues);

/// Residue-`residue` diagonal entries are exactly residue, residue+p, ...,
/// residue+rp with no gap (vacuously true when there are none). Requires a
/// symmetric bisequence.
bool is_gamma_packed(const Bisequence& d, Int p, Int residue);

/// Packing-and-exclusion criterion for a symmetric partition to be a p-core,
/// evaluated on its diagonal data alone.
bool is_symmetric_p_core(const Bisequence& d, Int p);

}  // namespace diaghook
