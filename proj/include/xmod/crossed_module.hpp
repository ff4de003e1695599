// Crossed modules of finite groups and their morphisms.
//
// A crossed module is mu : T -> G with a left action of G on T such that
//   mu(g.t) = g mu(t) g^-1            (equivariance)
//   mu(t).t' = t t' t^-1              (Peiffer identity)
// Both are checked on every pair at construction.

#ifndef XMOD_CROSSED_MODULE_HPP_
#define XMOD_CROSSED_MODULE_HPP_

#include <optional>

#include "xmod/group.hpp"
#include "xmod/kernels.hpp"

namespace xmod {

class CrossedModule {
 public:
  /// Throws AxiomError("equivariance", {g, t}) or AxiomError("peiffer", {t, t'})
  /// with the first failing pair in element order.
  static CrossedModule make(GroupHom boundary, GroupAction action,
                            kernels::Exec exec = kernels::Exec::parallel);

  const GroupPtr& top() const { return boundary_.source(); }
  const GroupPtr& bottom() const { return boundary_.target(); }
  const GroupHom& boundary() const { return boundary_; }
  const GroupAction& action() const { return action_; }
  Elem act(Elem g, Elem t) const { return action_(g, t); }
  Elem mu(Elem t) const { return boundary_(t); }

 private:
  CrossedModule(GroupHom b, GroupAction a) : boundary_(std::move(b)), action_(std::move(a)) {}
  GroupHom boundary_;
  GroupAction action_;
};

/// Checks that mu and the action fit T and G, then validates both axioms.
CrossedModule make_crossed_module(const GroupPtr& t, const GroupPtr& g, GroupHom mu,
                                  GroupAction action);

/// (G, G, id, conjugation).
CrossedModule identity_xmod(const GroupPtr& g);
/// (N, G, inclusion, conjugation) for a normal subgroup N.
CrossedModule normal_inclusion_xmod(const GroupPtr& g, std::span<const Elem> normal_subgroup);
/// (M, 1, 0) for abelian M.
CrossedModule point_xmod(const GroupPtr& m);
/// (1, G, 0).
CrossedModule trivial_top_xmod(const GroupPtr& g);
/// (T, T/Z, projection, conjugation through representatives) for a central
/// subgroup Z of T.
CrossedModule central_quotient_xmod(const GroupPtr& t, std::span<const Elem> central);

class XModMorphism {
 public:
  /// Throws AxiomError("square", {t}) when mu' f(t) != h mu(t) and
  /// AxiomError("action", {g, t}) when f(g.t) != h(g).f(t).
  static XModMorphism make(const CrossedModule& source, const CrossedModule& target, GroupHom f,
                           GroupHom h);

  const CrossedModule& source() const { return source_; }
  const CrossedModule& target() const { return target_; }
  const GroupHom& top() const { return f_; }
  const GroupHom& bottom() const { return h_; }

  bool is_injective() const { return f_.is_injective() && h_.is_injective(); }
  bool is_surjective() const { return f_.is_surjective() && h_.is_surjective(); }
  bool is_isomorphism() const { return is_injective() && is_surjective(); }

 private:
  XModMorphism(CrossedModule s, CrossedModule t, GroupHom f, GroupHom h)
      : source_(std::move(s)), target_(std::move(t)), f_(std::move(f)), h_(std::move(h)) {}
  CrossedModule source_, target_;
  GroupHom f_, h_;
};

XModMorphism make_xmod_morphism(const CrossedModule& source, const CrossedModule& target,
                                GroupHom f, GroupHom h);
XModMorphism identity_morphism(const CrossedModule& x);
XModMorphism compose(const XModMorphism& outer, const XModMorphism& inner);

struct SubXMod {
  CrossedModule sub;
  XModMorphism inclusion;
};

/// Sub-crossed module on subgroups S <= T, H <= G with mu(S) <= H and S
/// stable under H.
SubXMod sub_xmod(const CrossedModule& x, std::span<const Elem> sub_t, std::span<const Elem> sub_g);

/// (ker f, ker h) with the restricted boundary and action.
SubXMod kernel_xmod(const XModMorphism& m);
/// (im f, im h) inside the target.
SubXMod image_xmod(const XModMorphism& m);

/// Normality in the sense of Norrie: H normal in G, S stable under G,
/// mu(S) <= H, and b.t t^-1 in S for all b in H, t in T.
bool is_normal_subxmod(const CrossedModule& x, std::span<const Elem> sub_t,
                       std::span<const Elem> sub_g);

struct XModQuotient {
  CrossedModule quotient;
  XModMorphism projection;
  std::vector<Elem> top_representatives, bottom_representatives;
};

/// Throws NormalityError unless is_normal_subxmod holds.
XModQuotient quotient_xmod(const CrossedModule& x, std::span<const Elem> sub_t,
                           std::span<const Elem> sub_g);

/// T and G abelian and the action trivial.
bool is_abelian_xmod(const CrossedModule& x);

/// First isomorphism (f, h) in lexicographic order of generator images of
/// G, then of T.
std::optional<XModMorphism> find_xmod_isomorphism(const CrossedModule& a, const CrossedModule& b);

}  // namespace xmod

#endif  // XMOD_CROSSED_MODULE_HPP_
