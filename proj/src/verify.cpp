#include "diaghook/verify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "diaghook/abacus.hpp"
#include "diaghook/bisequence.hpp"
#include "diaghook/diagonal_formula.hpp"

namespace diaghook {

CellCheck check_cell(const Partition& lambda, Int p) {
  CellCheck c;
  c.lambda = lambda;
  c.p = p;
  try {
    const auto cq = core_and_quotient(lambda, p);
    const DeltaSet oracle = delta_oracle(lambda);
    const DeltaSet formula = delta_general(cq.core, cq.quotient, p);
    c.formula_agrees = formula == oracle;
    c.conserved = formula.sum() == lambda.weight();
    c.roundtrip = from_core_and_quotient(cq.core, cq.quotient, p) == lambda;
    c.criterion_agrees = is_symmetric_p_core(d_of(lambda), p) == is_p_core(lambda, p);
  } catch (const Error& e) {
    c.error = e.what();
  }
  return c;
}

VerifyReport run_verify(Int n_max, const std::vector<Int>& moduli, unsigned threads) {
  VerifyReport report;
  report.n_max = n_max;
  report.primes = moduli;

  std::vector<std::pair<Partition, Int>> cells;
  for (Int n = 0; n <= n_max; ++n)
    for_each_partition(n, true, [&](const Partition& lambda) {
      for (Int p : moduli) cells.emplace_back(lambda, p);
    });

  std::vector<CellCheck> results(cells.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, cells.size())));
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w)
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) results[i] = check_cell(cells[i].first, cells[i].second);
      });
  }

  report.cells = static_cast<Int>(results.size());
  for (const auto& r : results) {
    if (r.ok()) continue;
    ++report.failures;
    if (!report.first_failure) report.first_failure = r;
  }
  return report;
}

}  // namespace diaghook
