#include "diaghook/abacus.hpp"

#include <algorithm>

namespace diaghook {

namespace {

void check_modulus(Int p) {
  if (p < 2) fail(ErrorCode::BadModulus, "p = " + std::to_string(p) + " must be at least 2");
}

}  // namespace

Abacus::Abacus(BetaSet beads, Int p) : beads_(std::move(beads)), p_(p) { check_modulus(p); }

BetaSet Abacus::runner(Int g) const {
  std::vector<Int> rows;
  for (Int b : beads_.beads())
    if (b % p_ == g) rows.push_back(b / p_);
  return BetaSet(std::move(rows));
}

Int Abacus::runner_bead_count(Int g) const {
  return static_cast<Int>(std::count_if(beads_.beads().begin(), beads_.beads().end(), [&](Int b) { return b % p_ == g; }));
}

std::string_view to_string(PHookKind kind) noexcept {
  switch (kind) {
    case PHookKind::Straddling: return "Straddling";
    case PHookKind::RightOfAxis: return "RightOfAxis";
    case PHookKind::LeftOfAxis: return "LeftOfAxis";
  }
  return "Unknown";
}

Int canonical_bead_count(const Partition& lambda, Int p) {
  check_modulus(p);
  const auto len = static_cast<Int>(lambda.length());
  return p * std::max<Int>(1, (len + p - 1) / p);
}

Abacus to_abacus(const Partition& lambda, Int p) { return Abacus(beta_of(lambda, canonical_bead_count(lambda, p)), p); }

bool is_p_core(const Partition& lambda, Int p) {
  const BetaSet x = beta_of(lambda, static_cast<Int>(lambda.length()));
  check_modulus(p);
  for (Int b : x.beads())
    if (b >= p && !x.contains(b - p)) return false;
  return true;
}

Partition p_core(const Partition& lambda, Int p) {
  const Abacus abacus = to_abacus(lambda, p);
  std::vector<Int> pushed;
  for (Int g = 0; g < p; ++g)
    for (Int m = 0; m < abacus.runner_bead_count(g); ++m) pushed.push_back(g + m * p);
  std::sort(pushed.begin(), pushed.end());
  return partition_of(BetaSet(std::move(pushed)));
}

std::vector<Partition> p_quotient(const Partition& lambda, Int p) {
  const Abacus abacus = to_abacus(lambda, p);
  std::vector<Partition> q;
  q.reserve(static_cast<std::size_t>(p));
  for (Int g = 0; g < p; ++g) q.push_back(partition_of(abacus.runner(g)));
  return q;
}

CoreQuotient core_and_quotient(const Partition& lambda, Int p) { return {p_core(lambda, p), p_quotient(lambda, p)}; }

Partition from_core_and_quotient(const Partition& core, std::span<const Partition> quotient, Int p) {
  check_modulus(p);
  if (static_cast<Int>(quotient.size()) != p)
    fail(ErrorCode::WrongQuotientLength,
         "expected " + std::to_string(p) + " quotient entries, got " + std::to_string(quotient.size()));
  if (!is_p_core(core, p)) fail(ErrorCode::NotACore, core.to_string() + " has a hook of length " + std::to_string(p));

  const Abacus base = to_abacus(core, p);
  Int extra_rows = 0;
  for (Int g = 0; g < p; ++g)
    extra_rows = std::max(extra_rows, static_cast<Int>(quotient[static_cast<std::size_t>(g)].length()) -
                                          base.runner_bead_count(g));
  // Adding a full row of beads at the top keeps the core and lengthens each
  // runner by one bead.
  const Abacus core_abacus(base.beads().shifted(extra_rows * p), p);

  std::vector<Int> beads;
  for (Int g = 0; g < p; ++g) {
    const BetaSet runner = beta_of(quotient[static_cast<std::size_t>(g)], core_abacus.runner_bead_count(g));
    for (Int m : runner.beads()) beads.push_back(g + m * p);
  }
  std::sort(beads.begin(), beads.end());
  return partition_of(BetaSet(std::move(beads)));
}

bool is_symmetric_quotient(std::span<const Partition> quotient) {
  const auto p = quotient.size();
  for (std::size_t g = 0; g < p; ++g)
    if (quotient[g] != conjugate(quotient[p - 1 - g])) return false;
  return true;
}

bool is_symmetric_quotient(std::span<const Partition> quotient, Int p) {
  if (static_cast<Int>(quotient.size()) != p)
    fail(ErrorCode::WrongQuotientLength,
         "expected " + std::to_string(p) + " quotient entries, got " + std::to_string(quotient.size()));
  return is_symmetric_quotient(quotient);
}

std::vector<BetaHook> p_hooks_of(const Partition& lambda, Int p) {
  const Abacus abacus = to_abacus(lambda, p);
  std::vector<BetaHook> hooks;
  for (Int x : abacus.beads().beads())
    if (x >= p && !abacus.beads().contains(x - p)) hooks.push_back({x - p, x});
  return hooks;
}

PHookClass classify_p_hook(const Partition& lambda, Int p, const BetaHook& h) {
  check_modulus(p);
  if (!is_symmetric(lambda)) fail(ErrorCode::NotSymmetric, lambda.to_string() + " is not self-conjugate");
  if (!p_core(lambda, p).empty()) fail(ErrorCode::NonEmptyCore, lambda.to_string() + " has a non-empty core");
  const Abacus abacus = to_abacus(lambda, p);
  const BetaSet& x = abacus.beads();
  if (h.length() != p || h.y < 0 || !x.contains(h.x) || x.contains(h.y))
    fail(ErrorCode::NotAPHook, "(" + std::to_string(h.y) + "," + std::to_string(h.x) + "] is not a " +
                                   std::to_string(p) + "-hook of " + x.to_string());

  const Axis axis = axis_of(x);
  PHookClass out;
  if (axis.right_of(h.y))
    out.kind = PHookKind::RightOfAxis;
  else if (axis.left_of(h.x))
    out.kind = PHookKind::LeftOfAxis;
  else
    out.kind = PHookKind::Straddling;
  out.runner = h.x % p;
  out.runner_row = h.x / p;
  out.quotient_cell = young_hook_of(abacus.runner(out.runner), BetaHook{out.runner_row - 1, out.runner_row});
  return out;
}

std::string render_ascii(const Partition& lambda, Int p) {
  const Abacus abacus = to_abacus(lambda, p);
  const Int axis_row = canonical_bead_count(lambda, p) / p;
  const Int rows = std::max(abacus.rows(), axis_row);
  std::string out;
  for (Int m = 0; m < rows; ++m) {
    for (Int g = 0; g < p; ++g) {
      if (g) out += ' ';
      out += abacus.has_bead(m, g) ? "●" : "·";
    }
    out += '\n';
    if (m + 1 == axis_row) out += std::string(static_cast<std::size_t>(2 * p - 1), '-') + '\n';
  }
  return out;
}

}  // namespace diaghook
