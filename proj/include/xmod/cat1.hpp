// Cat1-groups: a group G with endomorphisms d0, d1 such that
//   d0 d1 = d1,  d1 d0 = d0,  [ker d0, ker d1] = 1,
// and the functors to and from crossed modules.

#ifndef XMOD_CAT1_HPP_
#define XMOD_CAT1_HPP_

#include <optional>

#include "xmod/crossed_module.hpp"

namespace xmod {

class Cat1Group {
 public:
  /// Throws AxiomError("d0d1", {x}), ("d1d0", {x}) or ("kernel-commutator",
  /// {a, b}) with the first failing element or pair.
  static Cat1Group make(GroupHom d0, GroupHom d1);

  const GroupPtr& group() const { return d0_.source(); }
  const GroupHom& d0() const { return d0_; }
  const GroupHom& d1() const { return d1_; }

 private:
  Cat1Group(GroupHom d0, GroupHom d1) : d0_(std::move(d0)), d1_(std::move(d1)) {}
  GroupHom d0_, d1_;
};

Cat1Group make_cat1(const GroupPtr& g, GroupHom d0, GroupHom d1);

/// Cheap structural test used when enumerating candidates; never throws.
bool is_cat1_pair(const GroupHom& d0, const GroupHom& d1);

struct Cat1OfXMod {
  Cat1Group cat1;
  SemidirectProduct product;  // the underlying T x| G
};

/// T x| G with d0(t, g) = (1, g) and d1(t, g) = (1, mu(t) g).
Cat1OfXMod cm_to_cat1(const CrossedModule& x, const Limits& limits = {});

struct XModOfCat1 {
  CrossedModule xmod;
  Subgroup top;     // ker d0
  Subgroup bottom;  // im d1
};

/// (ker d0, im d1, d1 restricted) with conjugation inside G.
XModOfCat1 cat1_to_cm(const Cat1Group& c);

/// First isomorphism phi with phi d_i = d_i' phi, in lexicographic order of
/// generator images.
std::optional<GroupHom> cat1_iso(const Cat1Group& a, const Cat1Group& b);

/// [G, G]; asserted to be stable under d0 and d1.
ElementSet cat1_commutator_subobject(const Cat1Group& c);

struct Cat1Quotient {
  Cat1Group cat1;
  Quotient quotient;
};

/// G / [G, G] with the induced endomorphisms.
Cat1Quotient cat1_abelianization(const Cat1Group& c);

/// All cat1 structures on g, optionally keeping one per orbit under
/// conjugation by Aut(g).  Ordered by the positions of d0, d1 among the
/// endomorphisms of g.
std::vector<Cat1Group> enumerate_cat1(const GroupPtr& g, bool up_to_automorphism,
                                      const Limits& limits = {});

}  // namespace xmod

#endif  // XMOD_CAT1_HPP_
