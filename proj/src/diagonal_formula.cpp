#include "diaghook/diagonal_formula.hpp"

#include <algorithm>
#include <functional>

#include "diaghook/abacus.hpp"

namespace diaghook {

namespace {

void check_modulus(Int p) {
  if (p < 2) fail(ErrorCode::BadModulus, "p = " + std::to_string(p) + " must be at least 2");
}

void check_quotient(std::span<const Partition> quotient, Int p) {
  if (!is_symmetric_quotient(quotient, p))
    fail(ErrorCode::NotSymmetricQuotient, "quotient entries g and p-1-g are not conjugate");
}

/// Sorts arm values descending, rejecting collisions, and maps them to
/// hook lengths 2*arm + 1.
DeltaSet lengths_from_arms(std::vector<Int> arms) {
  std::sort(arms.begin(), arms.end(), std::greater<>());
  if (std::adjacent_find(arms.begin(), arms.end()) != arms.end())
    fail(ErrorCode::InternalInconsistency, "two contributions produced the same diagonal hook");
  std::vector<Int> lengths;
  lengths.reserve(arms.size());
  for (Int a : arms) lengths.push_back(2 * a + 1);
  return DeltaSet(std::move(lengths));
}

QuotientEntry entry_of(const Partition& component) {
  const Bisequence d = d_of(component);
  return {d.legs(), d.arms()};
}

}  // namespace

DeltaSet delta_concentrated_pair(const Partition& component, Int residue, Int p) {
  check_modulus(p);
  if (residue < 0 || residue >= p)
    fail(ErrorCode::BadResidue, "residue " + std::to_string(residue) + " outside [0," + std::to_string(p) + ")");
  if (residue == p - 1 - residue)
    fail(ErrorCode::CenterResidue, "residue " + std::to_string(residue) + " is self-dual; use the centre formula");
  const Bisequence d = d_of(component);
  std::vector<Int> lengths;
  for (Int leg : d.legs()) lengths.push_back(2 * (leg + 1) * p - 2 * residue - 1);
  for (Int arm : d.arms()) lengths.push_back(2 * arm * p + 2 * residue + 1);
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return DeltaSet(std::move(lengths));
}

DeltaSet delta_concentrated_center(const Partition& component, Int p) {
  check_modulus(p);
  if (p % 2 == 0) fail(ErrorCode::OddModulusRequired, "p = " + std::to_string(p) + " has no self-dual runner");
  if (!is_symmetric(component))
    fail(ErrorCode::NotSymmetric, component.to_string() + " cannot sit on the self-dual runner");
  const Bisequence d = d_of(component);
  std::vector<Int> lengths;
  for (Int m : d.arms()) lengths.push_back((2 * m + 1) * p);
  return DeltaSet(std::move(lengths));
}

DeltaSet delta_empty_core(std::span<const Partition> quotient, Int p) {
  check_modulus(p);
  check_quotient(quotient, p);
  std::vector<Int> lengths;
  for (Int g = 0; g < p - 1 - g; ++g) {
    const auto part = delta_concentrated_pair(quotient[static_cast<std::size_t>(g)], g, p);
    lengths.insert(lengths.end(), part.lengths().begin(), part.lengths().end());
  }
  if (p % 2 == 1) {
    const auto centre = delta_concentrated_center(quotient[static_cast<std::size_t>((p - 1) / 2)], p);
    lengths.insert(lengths.end(), centre.lengths().begin(), centre.lengths().end());
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  if (std::adjacent_find(lengths.begin(), lengths.end()) != lengths.end())
    fail(ErrorCode::InternalInconsistency, "residue contributions are not disjoint");
  return DeltaSet(std::move(lengths));
}

CoreCounts core_counts(const Partition& core, Int p) {
  check_modulus(p);
  if (!is_symmetric(core)) fail(ErrorCode::NotSymmetric, core.to_string() + " is not self-conjugate");
  if (!is_p_core(core, p)) fail(ErrorCode::NotACore, core.to_string() + " has a hook of length " + std::to_string(p));
  const Bisequence d = d_of(core);
  CoreCounts out;
  out.p = p;
  out.d0.assign(static_cast<std::size_t>(p), 0);
  for (Int arm : d.arms()) ++out.d0[static_cast<std::size_t>(arm % p)];
  for (Int g = 0; g < p; ++g)
    if (out.d0[static_cast<std::size_t>(g)] > 0) out.charged.push_back(g);
  for (Int g : out.charged) out.charged_dual.push_back(p - 1 - g);
  std::sort(out.charged_dual.begin(), out.charged_dual.end());
  for (Int g = 0; g < p; ++g) {
    const bool in_charged = std::binary_search(out.charged.begin(), out.charged.end(), g);
    const bool in_dual = std::binary_search(out.charged_dual.begin(), out.charged_dual.end(), g);
    if (in_charged && in_dual)
      fail(ErrorCode::InternalInconsistency, "residue " + std::to_string(g) + " is charged on both sides");
    if (!in_charged && !in_dual) out.neutral.push_back(g);
  }
  return out;
}

ShiftResult d0_shift(const QuotientEntry& entry, Int d0) {
  if (d0 < 0) fail(ErrorCode::InconsistentQuotient, "negative shift");
  ShiftResult out;
  for (Int s = d0 - 1; s >= 0; --s)
    if (std::find(entry.legs.begin(), entry.legs.end(), s) == entry.legs.end()) out.sets.s.push_back(s);
  for (Int t : entry.legs)
    if (t >= d0) out.sets.t.push_back(t);

  for (Int a : entry.arms) out.entry.arms.push_back(a + d0);
  for (Int s : out.sets.s) out.entry.arms.push_back(d0 - s - 1);
  for (Int t : out.sets.t) out.entry.legs.push_back(t - d0);
  std::sort(out.entry.arms.begin(), out.entry.arms.end(), std::greater<>());
  if (std::adjacent_find(out.entry.arms.begin(), out.entry.arms.end()) != out.entry.arms.end())
    fail(ErrorCode::InternalInconsistency, "shifted arms collide");
  return out;
}

GeneralBreakdown general_breakdown(const Partition& core, std::span<const Partition> quotient, Int p) {
  check_modulus(p);
  if (static_cast<Int>(quotient.size()) != p)
    fail(ErrorCode::WrongQuotientLength,
         "expected " + std::to_string(p) + " quotient entries, got " + std::to_string(quotient.size()));
  GeneralBreakdown out;
  out.counts = core_counts(core, p);
  check_quotient(quotient, p);

  const auto& counts = out.counts;
  out.shifted.entries.resize(static_cast<std::size_t>(p));
  for (Int g : counts.charged) {
    const Int d0 = counts.d0[static_cast<std::size_t>(g)];
    const QuotientEntry companion = entry_of(quotient[static_cast<std::size_t>(g)]);
    const ShiftResult shift = d0_shift(companion, d0);
    out.shifted.entries[static_cast<std::size_t>(g)] = shift.entry;
    for (Int a : companion.arms) out.o1.push_back(g + (a + d0) * p);
    for (Int s : shift.sets.s) out.o2.push_back(g + (d0 - s - 1) * p);
    for (Int t : shift.sets.t) out.o3.push_back((p - 1 - g) + (t - d0) * p);
  }
  // A charged runner's dual entry is its mirror image.
  for (Int g : counts.charged) {
    const auto& e = out.shifted.entries[static_cast<std::size_t>(g)];
    out.shifted.entries[static_cast<std::size_t>(p - 1 - g)] = QuotientEntry{e.arms, e.legs};
  }
  for (Int g : counts.neutral) {
    const QuotientEntry companion = entry_of(quotient[static_cast<std::size_t>(g)]);
    out.shifted.entries[static_cast<std::size_t>(g)] = companion;
    for (Int mu : companion.arms) out.o4.push_back(g + mu * p);
  }
  for (auto* o : {&out.o1, &out.o2, &out.o3, &out.o4}) std::sort(o->begin(), o->end(), std::greater<>());

  std::vector<Int> arms;
  for (const auto* o : {&out.o1, &out.o2, &out.o3, &out.o4}) arms.insert(arms.end(), o->begin(), o->end());
  out.delta = lengths_from_arms(arms);
  std::sort(arms.begin(), arms.end(), std::greater<>());
  out.diagonal = Bisequence(arms, arms);

  try {
    if (d_unquotient(out.shifted, p) != out.diagonal)
      fail(ErrorCode::InternalInconsistency, "shifted quotient does not reassemble to a symmetric bisequence");
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InternalInconsistency) throw;
    fail(ErrorCode::InternalInconsistency, e.what());
  }
  return out;
}

DeltaSet delta_general(const Partition& core, std::span<const Partition> quotient, Int p) {
  return general_breakdown(core, quotient, p).delta;
}

}  // namespace diaghook
