#include "diaghook/bisequence.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace diaghook {

namespace {

void check_modulus(Int p) {
  if (p < 2) fail(ErrorCode::BadModulus, "p = " + std::to_string(p) + " must be at least 2");
}

void check_residue(Int p, Int residue) {
  if (residue < 0 || residue >= p)
    fail(ErrorCode::BadResidue, "residue " + std::to_string(residue) + " outside [0," + std::to_string(p) + ")");
}

void check_decreasing(const std::vector<Int>& xs, const char* side) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] < 0) fail(ErrorCode::NotStrictlyDecreasing, std::string(side) + " has a negative entry");
    if (i + 1 < xs.size() && xs[i] <= xs[i + 1])
      fail(ErrorCode::NotStrictlyDecreasing, std::string(side) + " is not strictly decreasing");
  }
}

void print_list(std::ostream& out, const std::vector<Int>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ',';
    out << xs[i];
  }
}

}  // namespace

Bisequence::Bisequence(std::vector<Int> legs, std::vector<Int> arms) : legs_(std::move(legs)), arms_(std::move(arms)) {
  if (legs_.size() != arms_.size())
    fail(ErrorCode::LengthMismatch, std::to_string(legs_.size()) + " legs vs " + std::to_string(arms_.size()) + " arms");
  check_decreasing(legs_, "legs");
  check_decreasing(arms_, "arms");
}

std::string Bisequence::to_string() const {
  std::ostringstream out;
  out << '(';
  print_list(out, legs_);
  out << '|';
  print_list(out, arms_);
  out << ')';
  return out.str();
}

Bisequence d_of(const Partition& lambda) {
  std::vector<Int> legs, arms;
  for (const auto& h : diagonal_hooks_oracle(lambda)) {
    legs.push_back(h.leg);
    arms.push_back(h.arm);
  }
  return Bisequence(std::move(legs), std::move(arms));
}

QuotientBisequence d_quotient(const Bisequence& d, Int p) {
  check_modulus(p);
  QuotientBisequence q;
  q.entries.resize(static_cast<std::size_t>(p));
  // Inputs are descending, so pushing in order keeps every entry descending.
  for (Int alpha : d.legs()) q.entries[static_cast<std::size_t>(p - 1 - alpha % p)].legs.push_back(alpha / p);
  for (Int beta : d.arms()) q.entries[static_cast<std::size_t>(beta % p)].arms.push_back(beta / p);
  return q;
}

Bisequence d_unquotient(const QuotientBisequence& q, Int p) {
  check_modulus(p);
  if (q.p() != p)
    fail(ErrorCode::InconsistentQuotient, "expected " + std::to_string(p) + " entries, got " + std::to_string(q.p()));
  std::vector<Int> legs, arms;
  for (Int g = 0; g < p; ++g) {
    const auto& e = q.entries[static_cast<std::size_t>(g)];
    for (Int m : e.legs) {
      if (m < 0) fail(ErrorCode::InconsistentQuotient, "negative m-value");
      legs.push_back((p - 1 - g) + m * p);
    }
    for (Int m : e.arms) {
      if (m < 0) fail(ErrorCode::InconsistentQuotient, "negative m-value");
      arms.push_back(g + m * p);
    }
  }
  if (legs.size() != arms.size())
    fail(ErrorCode::InconsistentQuotient,
         std::to_string(legs.size()) + " legs vs " + std::to_string(arms.size()) + " arms after reassembly");
  std::sort(legs.begin(), legs.end(), std::greater<>());
  std::sort(arms.begin(), arms.end(), std::greater<>());
  if (std::adjacent_find(legs.begin(), legs.end()) != legs.end() ||
      std::adjacent_find(arms.begin(), arms.end()) != arms.end())
    fail(ErrorCode::InconsistentQuotient, "an entry repeats an m-value");
  return Bisequence(std::move(legs), std::move(arms));
}

std::pair<std::vector<Int>, std::vector<Int>> residue_class(const Bisequence& d, Int p, Int residue) {
  check_modulus(p);
  check_residue(p, residue);
  std::pair<std::vector<Int>, std::vector<Int>> out;
  for (Int a : d.legs())
    if (a % p == residue) out.first.push_back(a);
  for (Int b : d.arms())
    if (b % p == residue) out.second.push_back(b);
  return out;
}

bool is_concentrated(const Bisequence& d, Int p, const std::set<Int>& residues) {
  const auto q = d_quotient(d, p);
  for (Int g = 0; g < p; ++g)
    if (q.entries[static_cast<std::size_t>(g)].empty() == residues.contains(g)) return false;
  for (Int g : residues)
    if (g < 0 || g >= p) return false;
  return true;
}

bool is_gamma_packed(const Bisequence& d, Int p, Int residue) {
  if (!d.is_symmetric()) fail(ErrorCode::NotSymmetricBisequence, d.to_string() + " has legs != arms");
  const auto cls = residue_class(d, p, residue).second;
  // cls is descending; packed means it equals residue + (r..0)p.
  const auto r = static_cast<Int>(cls.size());
  for (Int i = 0; i < r; ++i)
    if (cls[static_cast<std::size_t>(i)] != residue + (r - 1 - i) * p) return false;
  return true;
}

bool is_symmetric_p_core(const Bisequence& d, Int p) {
  if (!d.is_symmetric()) fail(ErrorCode::NotSymmetricBisequence, d.to_string() + " has legs != arms");
  check_modulus(p);
  for (Int g = 0; g < p; ++g) {
    if (residue_class(d, p, g).second.empty()) continue;
    if (!is_gamma_packed(d, p, g)) return false;
    if (!residue_class(d, p, p - 1 - g).second.empty()) return false;
  }
  return true;
}

}  // namespace diaghook
