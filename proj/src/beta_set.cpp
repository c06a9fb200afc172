#include "diaghook/beta_set.hpp"

#include <algorithm>
#include <sstream>

namespace diaghook {

BetaSet::BetaSet(std::vector<Int> beads) : beads_(std::move(beads)) {
  for (std::size_t i = 0; i < beads_.size(); ++i) {
    if (beads_[i] < 0) fail(ErrorCode::InvalidBetaSet, "negative bead position");
    if (i + 1 < beads_.size() && beads_[i] >= beads_[i + 1])
      fail(ErrorCode::InvalidBetaSet, "bead positions must be strictly increasing");
  }
}

bool BetaSet::contains(Int x) const noexcept { return std::binary_search(beads_.begin(), beads_.end(), x); }

BetaSet BetaSet::shifted(Int by) const {
  if (by < 0) fail(ErrorCode::InvalidBetaSet, "shift must be non-negative");
  std::vector<Int> out;
  out.reserve(beads_.size() + static_cast<std::size_t>(by));
  for (Int i = 0; i < by; ++i) out.push_back(i);
  for (Int b : beads_) out.push_back(b + by);
  return BetaSet(std::move(out));
}

BetaSet BetaSet::minimal() const {
  Int run = 0;
  while (static_cast<std::size_t>(run) < beads_.size() && beads_[static_cast<std::size_t>(run)] == run) ++run;
  std::vector<Int> out;
  for (auto it = beads_.begin() + run; it != beads_.end(); ++it) out.push_back(*it - run);
  return BetaSet(std::move(out));
}

BetaSet BetaSet::move_bead(Int x, Int y) const {
  if (!contains(x) || y < 0 || contains(y))
    fail(ErrorCode::NotAPHook, "(" + std::to_string(y) + "," + std::to_string(x) + "] is not a hook");
  std::vector<Int> out;
  for (Int b : beads_)
    if (b != x) out.push_back(b);
  out.insert(std::upper_bound(out.begin(), out.end(), y), y);
  return BetaSet(std::move(out));
}

std::string BetaSet::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < beads_.size(); ++i) {
    if (i) out << ',';
    out << beads_[i];
  }
  out << '}';
  return out.str();
}

BetaSet beta_of(const Partition& lambda, Int k) {
  if (k < static_cast<Int>(lambda.length()))
    fail(ErrorCode::TooFewBeads,
         std::to_string(k) + " beads cannot encode " + std::to_string(lambda.length()) + " parts");
  std::vector<Int> beads;
  beads.reserve(static_cast<std::size_t>(k));
  for (Int i = k; i >= 1; --i) beads.push_back(lambda.part(static_cast<std::size_t>(i)) + k - i);
  return BetaSet(std::move(beads));
}

Partition partition_of(const BetaSet& beads) {
  const auto& b = beads.beads();
  const auto k = static_cast<Int>(b.size());
  std::vector<Int> parts;
  for (Int i = 1; i <= k; ++i) {
    const Int part = b[static_cast<std::size_t>(k - i)] - (k - i);
    if (part == 0) break;
    parts.push_back(part);
  }
  return Partition(std::move(parts));
}

std::vector<BetaHook> hooks_of(const BetaSet& beads) {
  std::vector<BetaHook> hooks;
  for (Int x : beads.beads())
    for (Int y = 0; y < x; ++y)
      if (!beads.contains(y)) hooks.push_back({y, x});
  return hooks;
}

HookData young_hook_of(const BetaSet& beads, const BetaHook& h) {
  if (h.y < 0 || h.y >= h.x || !beads.contains(h.x) || beads.contains(h.y))
    fail(ErrorCode::NotAPHook, "(" + std::to_string(h.y) + "," + std::to_string(h.x) + "] is not a hook");
  HookData out;
  for (Int z : beads.beads())
    if (z >= h.x) ++out.row;
  for (Int z = 0; z <= h.y; ++z)
    if (!beads.contains(z)) ++out.col;
  for (Int z = h.y + 1; z < h.x; ++z) (beads.contains(z) ? out.leg : out.arm) += 1;
  out.length = h.length();
  return out;
}

Axis axis_of(const BetaSet& beads) {
  Int smallest_space = 0;
  while (beads.contains(smallest_space)) ++smallest_space;
  // Walk a half-integer cursor right from just before the first space; each
  // step either gains a space on the left or loses a bead on the right.
  Int two_theta = 2 * smallest_space - 1;
  Int spaces_left = 0;
  auto beads_right = static_cast<Int>(beads.beads().end() -
                                      std::upper_bound(beads.beads().begin(), beads.beads().end(), smallest_space - 1));
  while (beads_right != spaces_left) {
    const Int next = (two_theta + 1) / 2;
    if (beads.contains(next))
      --beads_right;
    else
      ++spaces_left;
    two_theta += 2;
  }
  return Axis{two_theta};
}

PlusMinus plus_minus(const BetaSet& beads) {
  const Axis axis = axis_of(beads);
  PlusMinus out;
  for (auto it = beads.beads().rbegin(); it != beads.beads().rend() && axis.right_of(*it); ++it)
    out.plus.push_back(*it);
  for (Int z = 0; axis.left_of(z); ++z)
    if (!beads.contains(z)) out.minus.push_back(z);
  if (out.plus.size() != out.minus.size())
    fail(ErrorCode::InternalInconsistency, "axis does not balance beads and spaces");
  return out;
}

Bisequence bisequence_of(const BetaSet& beads) {
  const Axis axis = axis_of(beads);
  const auto pm = plus_minus(beads);
  std::vector<Int> legs, arms;
  for (Int y : pm.minus) legs.push_back(axis.floor() - y);
  for (Int y : pm.plus) arms.push_back(y - axis.ceil());
  return Bisequence(std::move(legs), std::move(arms));
}

bool is_symmetric_beta(const BetaSet& beads) {
  const Axis axis = axis_of(beads);
  const Int last = std::max(beads.max_bead(), axis.two_theta);
  for (Int z = 0; z <= last; ++z) {
    const Int mirror = axis.two_theta - z;
    const bool mirror_is_bead = mirror < 0 || beads.contains(mirror);
    if (beads.contains(z) == mirror_is_bead) return false;
  }
  return true;
}

}  // namespace diaghook
