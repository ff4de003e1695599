// Finite groups stored as full multiplication tables, together with
// homomorphisms, actions, subgroups, quotients and semidirect products.
//
// Elements are indices 0..order-1 and the identity is always 0.  All values
// are immutable once constructed and every constructor validates its axioms
// exhaustively.

#ifndef XMOD_GROUP_HPP_
#define XMOD_GROUP_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "xmod/abelian.hpp"
#include "xmod/limits.hpp"

namespace xmod {

using Elem = std::uint32_t;
/// Sorted, duplicate-free list of element indices.
using ElementSet = std::vector<Elem>;

class FiniteGroup {
 public:
  static constexpr Elem identity = 0;

  /// Validates closure, identity at 0, Latin-square rows/columns and
  /// associativity.  `generators` may be empty, in which case a greedy
  /// generating set is computed.
  static FiniteGroup from_table(std::size_t order, std::vector<Elem> table,
                                std::vector<std::string> labels = {},
                                std::vector<Elem> generators = {});

  std::size_t order() const { return order_; }
  Elem mul(Elem a, Elem b) const { return table_[a * order_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inverse_[g]); }
  Elem commutator(Elem a, Elem b) const {
    return mul(mul(a, b), mul(inverse_[a], inverse_[b]));
  }
  Elem pow(Elem a, std::int64_t k) const;
  std::size_t element_order(Elem a) const { return element_orders_[a]; }

  std::span<const Elem> table() const { return table_; }
  std::span<const Elem> inverses() const { return inverse_; }
  /// Generating set: the input generators when the group was built from
  /// generators, otherwise the greedy set (smallest index not yet covered).
  const std::vector<Elem>& generators() const { return generators_; }
  std::string label(Elem a) const;
  bool has_labels() const { return !labels_.empty(); }
  bool is_abelian() const { return abelian_; }

  bool same_table(const FiniteGroup& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::size_t> element_orders_;
  std::vector<Elem> generators_;
  std::vector<std::string> labels_;
  bool abelian_ = false;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A validated homomorphism, stored as the full image array.
class GroupHom {
 public:
  /// Exhaustive O(n^2) validation; throws NotHomomorphismError with the first
  /// failing pair.
  static GroupHom from_images(GroupPtr source, GroupPtr target,
                              std::vector<Elem> images);

  Elem operator()(Elem x) const { return images_[x]; }
  const GroupPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }
  std::span<const Elem> images() const { return images_; }

  bool is_injective() const;
  bool is_surjective() const;
  bool operator==(const GroupHom& o) const { return images_ == o.images_; }

 private:
  GroupHom() = default;
  GroupPtr source_, target_;
  std::vector<Elem> images_;
};

/// Left action of `actor` on `space` by automorphisms.
class GroupAction {
 public:
  /// `table[g * |space| + t]` is the image of t under g.
  static GroupAction from_table(GroupPtr actor, GroupPtr space,
                                std::vector<Elem> table);

  Elem operator()(Elem g, Elem t) const { return table_[g * space_order_ + t]; }
  const GroupPtr& actor() const { return actor_; }
  const GroupPtr& space() const { return space_; }
  std::span<const Elem> table() const { return table_; }
  bool is_trivial() const;

 private:
  GroupAction() = default;
  GroupPtr actor_, space_;
  std::size_t space_order_ = 0;
  std::vector<Elem> table_;
};

// -- construction ----------------------------------------------------------

/// Closure of permutations given as 1-based image arrays.  Elements are
/// numbered in BFS order from the identity, generators applied in input
/// order; the product is composition, (p*q)(i) = p(q(i)).
GroupPtr group_from_permutations(std::size_t degree,
                                 const std::vector<std::vector<std::size_t>>& generators,
                                 const Limits& limits = {});

/// Direct sum of cyclic groups; elements are residue tuples in
/// lexicographic order (first factor most significant).
GroupPtr abelian_group(std::span<const std::int64_t> invariant_factors,
                       const Limits& limits = {});
GroupPtr cyclic_group(std::size_t n);
GroupPtr trivial_group();

/// Residue tuple of an element of abelian_group(factors).
std::vector<std::int64_t> abelian_coordinates(std::span<const std::int64_t> factors,
                                              Elem e);
Elem abelian_element(std::span<const std::int64_t> factors,
                     std::span<const std::int64_t> coords);

// -- homomorphisms ---------------------------------------------------------

/// Extends generator images along BFS words and validates the result.
GroupHom make_hom(GroupPtr source, GroupPtr target,
                  const std::vector<std::pair<Elem, Elem>>& generator_images);
GroupHom identity_hom(GroupPtr g);
GroupHom zero_hom(GroupPtr source, GroupPtr target);
/// outer after inner.
GroupHom compose(const GroupHom& outer, const GroupHom& inner);
/// Inverse of a bijective homomorphism.
GroupHom inverse_hom(const GroupHom& iso);

ElementSet kernel(const GroupHom& h);
ElementSet image(const GroupHom& h);

// -- actions ---------------------------------------------------------------

GroupAction trivial_action(GroupPtr actor, GroupPtr space);
GroupAction conjugation_action(GroupPtr g);
/// Conjugation of `actor_subset` elements of g on the subgroup `space` of g,
/// both given as subgroup embeddings.
GroupAction conjugation_action(const GroupHom& actor_incl, const GroupHom& space_incl);
/// Action of `actor` through a homomorphism `phi: actor -> action.actor()`.
GroupAction pullback_action(const GroupAction& action, const GroupHom& phi);

// -- subgroups -------------------------------------------------------------

ElementSet subgroup_closure(const FiniteGroup& g, std::span<const Elem> seed);
ElementSet normal_closure(const FiniteGroup& g, std::span<const Elem> seed);
/// Normal closure of the seed inside the subgroup `within`, i.e. conjugating
/// only by elements of `within`.
ElementSet normal_closure_in(const FiniteGroup& g, std::span<const Elem> within,
                             std::span<const Elem> seed);
/// Normal closure of {a b a^-1 b^-1} inside <A u B>.
ElementSet commutator_subgroup(const FiniteGroup& g, std::span<const Elem> a,
                               std::span<const Elem> b);
ElementSet derived_subgroup(const FiniteGroup& g);
ElementSet all_elements(const FiniteGroup& g);
ElementSet set_union(std::span<const Elem> a, std::span<const Elem> b);
bool contains(std::span<const Elem> set, Elem x);
bool is_subset(std::span<const Elem> a, std::span<const Elem> b);
bool is_subgroup(const FiniteGroup& g, std::span<const Elem> s);
bool is_normal(const FiniteGroup& g, std::span<const Elem> s);
/// Elementwise products {a b}; for normal subgroups this is again a subgroup.
ElementSet product_set(const FiniteGroup& g, std::span<const Elem> a,
                       std::span<const Elem> b);

struct Subgroup {
  GroupPtr group;
  GroupHom inclusion;  // group -> ambient
};

/// Promotes an element set to a group; element i is the i-th smallest member.
Subgroup as_group(const GroupPtr& ambient, std::span<const Elem> subset);

/// Greedy generating set of a subgroup given as a sorted element set.
std::vector<Elem> greedy_generators(const FiniteGroup& g, std::span<const Elem> subset);

struct Quotient {
  GroupPtr group;
  GroupHom projection;
  std::vector<Elem> representatives;  // minimal representative per coset
};

/// Cosets of a normal subgroup, ordered by minimal representative.
Quotient quotient(const GroupPtr& g, std::span<const Elem> normal_subgroup);

struct Abelianization {
  GroupPtr group;
  GroupHom projection;
  FGAbelianGroup invariants;
};

Abelianization abelianization(const GroupPtr& g);

/// Invariant factors of a finite abelian group, read off from the number of
/// solutions of x^(p^k) = 1 for each prime p.
FGAbelianGroup abelian_invariants(const FiniteGroup& g);

struct SemidirectProduct {
  GroupPtr group;                 // pairs (t, g), index t * |actor| + g
  GroupHom space_injection;       // t -> (t, 1)
  GroupHom actor_injection;       // g -> (1, g)
  GroupHom projection;            // (t, g) -> g
};

/// Product (t', g')(t, g) = (t' * g'(t), g' g).
SemidirectProduct semidirect_product(const GroupAction& action,
                                     const Limits& limits = {});
SemidirectProduct direct_product(GroupPtr space, GroupPtr actor,
                                 const Limits& limits = {});

/// Element (t, g) of a semidirect product.
inline Elem pair_index(std::size_t actor_order, Elem t, Elem g) {
  return static_cast<Elem>(t * actor_order + g);
}

}  // namespace xmod

#endif  // XMOD_GROUP_HPP_
