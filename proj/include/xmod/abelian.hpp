// Finitely generated abelian groups in invariant-factor form.

#ifndef XMOD_ABELIAN_HPP_
#define XMOD_ABELIAN_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace xmod {

/// Z^rank + Z/d1 + ... + Z/dk with d1 | d2 | ... | dk and every di >= 2.
/// The representation is canonical, so == is isomorphism.
class FGAbelianGroup {
 public:
  FGAbelianGroup() = default;

  /// Accepts any list of cyclic orders; entries equal to 1 are dropped and
  /// entries equal to 0 count as infinite cyclic factors.
  static FGAbelianGroup from_cyclic_orders(std::span<const std::int64_t> orders,
                                           std::size_t extra_rank = 0);

  std::size_t rank() const { return rank_; }
  const std::vector<std::int64_t>& torsion() const { return torsion_; }

  bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }
  bool is_finite() const { return rank_ == 0; }
  /// Order of the torsion subgroup.
  std::int64_t torsion_order() const;

  /// e.g. "Z^2 + Z/2 + Z/4"; the trivial group prints as "0".
  std::string to_string() const;

  friend bool operator==(const FGAbelianGroup&, const FGAbelianGroup&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<std::int64_t> torsion_;
};

/// Schur multiplier of Z/n1 + ... + Z/nk: the sum over i < j of
/// Z/gcd(ni, nj).  Closed formula, no matrix reduction involved.
FGAbelianGroup schur_multiplier_abelian(std::span<const std::int64_t> invariants);

}  // namespace xmod

#endif  // XMOD_ABELIAN_HPP_
