#pragma once

#include <span>
#include <string>
#include <vector>

#include "diaghook/beta_set.hpp"
#include "diaghook/partition.hpp"

namespace diaghook {

/// A beta-set laid out on p runners: position g + m*p sits at row m of
/// runner g.
class Abacus {
 public:
  /// Throws BadModulus for p < 2.
  Abacus(BetaSet beads, Int p);

  Int p() const noexcept { return p_; }
  const BetaSet& beads() const noexcept { return beads_; }
  /// Rows up to and including the one holding the last bead.
  Int rows() const noexcept { return beads_.empty() ? 0 : beads_.max_bead() / p_ + 1; }
  bool has_bead(Int row, Int runner) const noexcept { return beads_.contains(runner + row * p_); }

  /// The runner's own beta-set {m : runner + m*p is a bead}.
  BetaSet runner(Int g) const;
  Int runner_bead_count(Int g) const;

 private:
  BetaSet beads_;
  Int p_;
};

struct CoreQuotient {
  Partition core;
  std::vector<Partition> quotient;

  friend bool operator==(const CoreQuotient&, const CoreQuotient&) = default;
};

enum class PHookKind { Straddling, RightOfAxis, LeftOfAxis };

std::string_view to_string(PHookKind kind) noexcept;

/// Where a p-hook of a symmetric empty-core partition sits relative to the
/// axis, and the 1-hook (row-1, row] it becomes on its runner.
struct PHookClass {
  PHookKind kind = PHookKind::Straddling;
  Int runner = 0;
  Int runner_row = 0;        ///< k, where x = runner + k*p
  HookData quotient_cell;    ///< the 1-hook's cell in the runner's partition
};

/// Least multiple of p that is at least lambda.length().
Int canonical_bead_count(const Partition& lambda, Int p);

/// Throws BadModulus.
Abacus to_abacus(const Partition& lambda, Int p);

/// Direct check: no hook of length exactly p.
bool is_p_core(const Partition& lambda, Int p);

Partition p_core(const Partition& lambda, Int p);
std::vector<Partition> p_quotient(const Partition& lambda, Int p);
CoreQuotient core_and_quotient(const Partition& lambda, Int p);

/// Throws NotACore or WrongQuotientLength.
Partition from_core_and_quotient(const Partition& core, std::span<const Partition> quotient, Int p);

/// Every runner g satisfies quotient[g] == conjugate(quotient[p-1-g]).
bool is_symmetric_quotient(std::span<const Partition> quotient);
/// As above, but first checks the length against p (WrongQuotientLength).
bool is_symmetric_quotient(std::span<const Partition> quotient, Int p);

/// Every hook of length p in the canonical abacus of lambda.
std::vector<BetaHook> p_hooks_of(const Partition& lambda, Int p);

/// Classifies a p-hook (given in the canonical abacus of lambda). Throws
/// NotSymmetric, NonEmptyCore or NotAPHook.
PHookClass classify_p_hook(const Partition& lambda, Int p, const BetaHook& h);

/// Runners as columns, '●' for a bead and '·' for a space, one text row per
/// abacus row; a dashed line marks where the axis falls between rows.
std::string render_ascii(const Partition& lambda, Int p);

}  // namespace diaghook
