// Extensions of crossed modules over a point (M, 1, 0), their
// abelianization (T/J, G_ab, mu-bar) with J = [G, N][T, T], derivations into
// (M, 1, 0)-modules and the three-term sequence
//   (N/[G,N], G_ab, nu-bar) -> (T/J, G_ab, mu-bar) ->> (M, 1, 0).

#ifndef XMOD_DERIVED_HPP_
#define XMOD_DERIVED_HPP_

#include <string>
#include <vector>

#include "xmod/action.hpp"
#include "xmod/cat1.hpp"

namespace xmod {

/// (N, G, nu) >-> (T, G, mu) --(f, 0)->> (M, 1, 0).
struct XModExtension {
  CrossedModule kernel, total, quotient;
  XModMorphism incl, proj;
};

/// incl injective with image ker proj, incl bijective on G, proj surjective,
/// quotient of the form (M, 1, 0).  Throws ArgumentError.
void validate_extension(const XModExtension& e);

/// Extension with N = ker f for a surjection f : T ->> M onto an abelian
/// group with f(g.t) = f(t).
XModExtension make_extension(const CrossedModule& total, const GroupHom& f);

struct NamedExtension {
  std::string name;
  XModExtension ext;
};

/// Small extensions used by tests and the acceptance run.
std::vector<NamedExtension> extension_catalog();

/// The (M, 1, 0)-module D(T, G, mu) = (T/J, G_ab, mu-bar).  The coefficient
/// crossed module has trivial action; the G-action on T survives as
///   eps'(m)[g] = [t] - [g.t],  f(t) = m.
struct PointAbelianization {
  ElementSet j;             // J in T
  Quotient top;             // T ->> T/J
  Abelianization bottom;    // G ->> G_ab
  XModModule module;
};

/// eps' is checked to be independent of the choice of t and of g within
/// its class; a failure is an InvariantViolation.
PointAbelianization abelianize_over_point(const XModExtension& e, const Limits& limits = {});

/// The (M, 1, 0)-action on the abelianized cat1-group of (N, G, nu), in the
/// form N/[G,N] x G_ab with u0([n],[g]) = [g], u1([n],[g]) = [nu(n) g] and
///   m.([n], [g]) = ([t n g.t^-1], [g]),  f(t) = m.
struct CommutatorAction {
  Quotient n_top;                      // N ->> N/[G,N]
  Abelianization g_ab;                 // G ->> G_ab
  Cat1Group source;                    // on N/[G,N] x G_ab
  Cat1Quotient target;                 // (N x| G)_ab
  GroupHom phi;                        // ([n],[g]) -> [(n, g)], a cat1 isomorphism
  std::vector<std::vector<Elem>> action;  // m -> automorphism of source.group()
};

/// Checks that phi is a well-defined cat1 isomorphism and that the action
/// agrees with conjugation by (t, 1) inside T x| G.
CommutatorAction commutator_action_on_quotient(const XModExtension& e,
                                               const Limits& limits = {});

struct DerivationPair {
  std::vector<Elem> d1;  // T -> A
  std::vector<Elem> d2;  // G -> B
  friend bool operator==(const DerivationPair&, const DerivationPair&) = default;
};

/// Pairs with D1, D2 homomorphisms (the actions through (f, 0) are
/// trivial), D2 mu = delta D1 and D1(g.t) = D1(t) - eps(f(t))(D2(g)).
/// Ordered by D1, then D2, each in all_homs order.
std::vector<DerivationPair> derivation_pairs(const CrossedModule& base,
                                             const XModModule& module, const GroupHom& f,
                                             const Limits& limits = {});

struct DerivationBijection {
  std::vector<DerivationPair> pairs;
  std::vector<std::pair<GroupHom, GroupHom>> module_homs;  // (nu1, nu2)
  std::vector<std::size_t> phi;  // pair index -> module hom index
  std::vector<std::size_t> psi;  // module hom index -> pair index
};

/// phi(D1, D2) = (nu1, nu2) with nu1[t] = D1(t), nu2[g] = D2(g), and psi
/// the reverse.  Both composites are checked to be identities; a failure
/// is an InvariantViolation.
DerivationBijection derivation_bijection(const XModExtension& e, const XModModule& module,
                                         const Limits& limits = {});

struct ThreeTermSequence {
  XModModule left, mid, right;
  Quotient left_top;            // N ->> N/[G,N]
  PointAbelianization mid_data;
  XModMorphism u_map;           // (u, id)
  XModMorphism f_map;           // (f-bar, 0)
};

/// eps''(m)[g] = [t g.t^-1]; u([n]) = [n]; f-bar([t]) = f(t).  Both maps
/// are validated as module morphisms.
ThreeTermSequence three_term(const XModExtension& e, const Limits& limits = {});

struct ExactnessReport {
  bool right_surjective = false;
  bool middle_exact = false;
  bool u_injective = false;
};

ExactnessReport exactness_report(const ThreeTermSequence& s);

}  // namespace xmod

#endif  // XMOD_DERIVED_HPP_
