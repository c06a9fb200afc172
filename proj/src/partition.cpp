#include "diaghook/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace diaghook {

namespace {

std::string join(std::span<const Int> xs) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ',';
    out << xs[i];
  }
  out << ')';
  return out.str();
}

void require_strictly_decreasing(std::span<const Int> xs, const char* what) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] < 0) fail(ErrorCode::NotStrictlyDecreasing, std::string(what) + " has a negative entry");
    if (i + 1 < xs.size() && xs[i] <= xs[i + 1])
      fail(ErrorCode::NotStrictlyDecreasing, std::string(what) + " " + join(xs) + " is not strictly decreasing");
  }
}

}  // namespace

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      fail(ErrorCode::NonPositivePart, "part " + std::to_string(i + 1) + " of " + join(parts_) + " is not positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      fail(ErrorCode::NonMonotonic, "parts " + join(parts_) + " increase at position " + std::to_string(i + 1));
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), Int{0});
}

std::size_t Partition::durfee_size() const noexcept {
  std::size_t t = 0;
  while (t < parts_.size() && parts_[t] >= static_cast<Int>(t + 1)) ++t;
  return t;
}

std::string Partition::to_string() const { return join(parts_); }

DeltaSet::DeltaSet(std::vector<Int> lengths) : lengths_(std::move(lengths)) {
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (lengths_[i] <= 0 || lengths_[i] % 2 == 0)
      fail(ErrorCode::InvalidDeltaSet, "entry " + std::to_string(lengths_[i]) + " is not a positive odd integer");
    if (i + 1 < lengths_.size() && lengths_[i] <= lengths_[i + 1])
      fail(ErrorCode::InvalidDeltaSet, join(lengths_) + " is not strictly decreasing");
  }
}

Int DeltaSet::sum() const noexcept { return std::accumulate(lengths_.begin(), lengths_.end(), Int{0}); }

std::string DeltaSet::to_string() const { return join(lengths_); }

Partition new_partition(std::vector<Int> parts) { return Partition(std::move(parts)); }

Partition conjugate(const Partition& lambda) {
  std::vector<Int> cols;
  if (lambda.empty()) return {};
  cols.reserve(static_cast<std::size_t>(lambda.part(1)));
  for (Int j = 1; j <= lambda.part(1); ++j) {
    Int height = 0;
    while (lambda.part(static_cast<std::size_t>(height + 1)) >= j) ++height;
    cols.push_back(height);
  }
  return Partition(std::move(cols));
}

HookData hook_at(const Partition& lambda, Int i, Int j) {
  if (i < 1 || j < 1 || i > static_cast<Int>(lambda.length()) || j > lambda.part(static_cast<std::size_t>(i)))
    fail(ErrorCode::CellOutOfDiagram,
         "(" + std::to_string(i) + "," + std::to_string(j) + ") is not a cell of " + lambda.to_string());
  const Int arm = lambda.part(static_cast<std::size_t>(i)) - j;
  Int below = 0;
  while (lambda.part(static_cast<std::size_t>(i + below + 1)) >= j) ++below;
  return HookData{i, j, arm, below, arm + below + 1};
}

bool is_symmetric(const Partition& lambda) { return conjugate(lambda) == lambda; }

std::vector<HookData> diagonal_hooks_oracle(const Partition& lambda) {
  std::vector<HookData> hooks;
  const auto t = static_cast<Int>(lambda.durfee_size());
  hooks.reserve(static_cast<std::size_t>(t));
  for (Int i = 1; i <= t; ++i) hooks.push_back(hook_at(lambda, i, i));
  return hooks;
}

DeltaSet delta_oracle(const Partition& lambda) {
  if (!is_symmetric(lambda)) fail(ErrorCode::NotSymmetric, lambda.to_string() + " is not self-conjugate");
  std::vector<Int> lengths;
  for (const auto& h : diagonal_hooks_oracle(lambda)) lengths.push_back(h.length);
  return DeltaSet(std::move(lengths));
}

Partition partition_from_delta(std::span<const Int> legs, std::span<const Int> arms) {
  if (legs.size() != arms.size())
    fail(ErrorCode::LengthMismatch, std::to_string(legs.size()) + " legs vs " + std::to_string(arms.size()) + " arms");
  require_strictly_decreasing(legs, "legs");
  require_strictly_decreasing(arms, "arms");
  const auto t = static_cast<Int>(legs.size());
  std::vector<Int> parts;
  for (Int i = 1; i <= t; ++i) parts.push_back(arms[static_cast<std::size_t>(i - 1)] + i);
  // Rows below the Durfee square are read off the first t column lengths.
  for (Int r = t + 1;; ++r) {
    Int width = 0;
    for (Int j = 1; j <= t; ++j)
      if (legs[static_cast<std::size_t>(j - 1)] + j >= r) ++width;
    if (width == 0) break;
    parts.push_back(width);
  }
  return Partition(std::move(parts));
}

Partition partition_from_delta(std::span<const LegArm> pairs) {
  std::vector<Int> legs, arms;
  for (const auto& [leg, arm] : pairs) {
    legs.push_back(leg);
    arms.push_back(arm);
  }
  return partition_from_delta(legs, arms);
}

Partition symmetric_from_delta(const DeltaSet& delta) {
  std::vector<Int> half;
  for (Int d : delta.lengths()) half.push_back((d - 1) / 2);
  return partition_from_delta(half, half);
}

void for_each_partition(Int n, bool symmetric_only, const std::function<void(const Partition&)>& visit) {
  if (n < 0) return;
  if (n == 0) {
    visit(Partition{});
    return;
  }
  // Reverse lexicographic order: start from (n), repeatedly split the last
  // part greater than one.
  std::vector<Int> a{n};
  for (;;) {
    Partition lambda(a);
    if (!symmetric_only || is_symmetric(lambda)) visit(lambda);
    Int ones = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++ones;
    }
    if (a.empty()) return;
    const Int k = --a.back();
    Int rest = ones + 1;
    while (rest > k) {
      a.push_back(k);
      rest -= k;
    }
    if (rest > 0) a.push_back(rest);
  }
}

std::vector<Partition> enumerate_partitions(Int n, bool symmetric_only) {
  std::vector<Partition> out;
  for_each_partition(n, symmetric_only, [&](const Partition& p) { out.push_back(p); });
  return out;
}

}  // namespace diaghook
