#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diaghook/partition.hpp"

namespace diaghook {

/// Outcome of checking one (lambda, p) cell.
struct CellCheck {
  Partition lambda;
  Int p = 0;
  bool formula_agrees = false;   ///< delta_general == oracle
  bool conserved = false;        ///< sum of delta == |lambda|
  bool roundtrip = false;        ///< core + quotient rebuild lambda
  bool criterion_agrees = false; ///< diagonal core criterion == direct check
  std::string error;             ///< set if an operation threw

  bool ok() const noexcept { return formula_agrees && conserved && roundtrip && criterion_agrees && error.empty(); }
};

CellCheck check_cell(const Partition& lambda, Int p);

struct VerifyReport {
  Int n_max = 0;
  std::vector<Int> primes;
  Int cells = 0;
  Int failures = 0;
  std::optional<CellCheck> first_failure;  ///< in (n, lambda, p) order
};

/// Checks every symmetric partition of every n <= n_max against every
/// modulus. Cells are spread over `threads` workers (0 = hardware
/// concurrency); the report does not depend on scheduling.
VerifyReport run_verify(Int n_max, const std::vector<Int>& moduli, unsigned threads = 0);

}  // namespace diaghook
