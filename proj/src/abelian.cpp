#include "xmod/abelian.hpp"

#include <algorithm>
#include <numeric>

#include "xmod/error.hpp"

namespace xmod {

FGAbelianGroup FGAbelianGroup::from_cyclic_orders(
    std::span<const std::int64_t> orders, std::size_t extra_rank) {
  FGAbelianGroup out;
  out.rank_ = extra_rank;
  std::vector<std::int64_t> t;
  for (std::int64_t d : orders) {
    if (d < 0) d = -d;
    if (d == 0)
      ++out.rank_;
    else if (d > 1)
      t.push_back(d);
  }
  // Replace pairs by (gcd, lcm) until the chain divides.
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(t.begin(), t.end());
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = i + 1; j < t.size(); ++j) {
        if (t[j] % t[i] == 0) continue;
        const std::int64_t g = std::gcd(t[i], t[j]);
        const std::int64_t l = t[i] / g * t[j];
        t[i] = g;
        t[j] = l;
        changed = true;
      }
    }
    t.erase(std::remove(t.begin(), t.end(), std::int64_t{1}), t.end());
  }
  out.torsion_ = std::move(t);
  return out;
}

std::int64_t FGAbelianGroup::torsion_order() const {
  std::int64_t n = 1;
  for (auto d : torsion_) n *= d;
  return n;
}

std::string FGAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string s;
  if (rank_ == 1)
    s = "Z";
  else if (rank_ > 1)
    s = "Z^" + std::to_string(rank_);
  for (auto d : torsion_) {
    if (!s.empty()) s += " + ";
    s += "Z/" + std::to_string(d);
  }
  return s;
}

FGAbelianGroup schur_multiplier_abelian(
    std::span<const std::int64_t> invariants) {
  std::vector<std::int64_t> parts;
  for (std::size_t i = 0; i < invariants.size(); ++i) {
    if (invariants[i] < 2)
      throw ArgumentError("invariant factors must be >= 2");
    for (std::size_t j = i + 1; j < invariants.size(); ++j)
      parts.push_back(std::gcd(invariants[i], invariants[j]));
  }
  return FGAbelianGroup::from_cyclic_orders(parts);
}

}  // namespace xmod
