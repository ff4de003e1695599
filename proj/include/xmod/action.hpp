// Whitehead derivations, automorphisms of crossed modules, the actor
// crossed module and actions of one crossed module on another.
//
// A derivation of X = (T, G, mu) is a map d : G -> T with
//   d(gh) = d(g) . g.d(h).
// Under the Whitehead product
//   (d1 o d2)(g) = d1(sigma2(g)) d2(g),  sigma2(g) = mu(d2(g)) g
// they form a monoid with the zero derivation as identity; its units form
// D(G, T).  Act(X) = (D(G, T), Aut(X), (theta, sigma)) where
//   theta(d)(t) = d(mu t) t,  sigma(d)(g) = mu(d(g)) g
// and Aut(X) acts on derivations by (alpha, phi).d = alpha o d o phi^-1.
//
// An action of a crossed module B = (T, G, mu) on C = (A, B, delta) is a
// crossed module morphism (eps, rho) : (T, G, mu) -> Act(A, B, delta).

#ifndef XMOD_ACTION_HPP_
#define XMOD_ACTION_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xmod/crossed_module.hpp"
#include "xmod/error.hpp"

namespace xmod {

/// Map G -> T, indexed by G-elements.  The crossed module it belongs to is
/// passed alongside.
struct Derivation {
  std::vector<Elem> map;
  friend bool operator==(const Derivation&, const Derivation&) = default;
};

/// First (g, h) with d(gh) != d(g) . g.d(h), if any.
std::optional<std::pair<Elem, Elem>> derivation_law_failure(const CrossedModule& x,
                                                            std::span<const Elem> map);

/// All derivations, ordered lexicographically by the images of G's
/// generators (each image running over T in element order).
std::vector<Derivation> derivation_set(const CrossedModule& x, const Limits& limits = {});

Derivation zero_derivation(const CrossedModule& x);
Derivation whitehead_product(const CrossedModule& x, const Derivation& d1,
                             const Derivation& d2);
/// sigma(d)(g) = mu(d(g)) g, an endomorphism of G.
std::vector<Elem> whitehead_sigma(const CrossedModule& x, const Derivation& d);
/// theta(d)(t) = d(mu t) t, an endomorphism of T.
std::vector<Elem> whitehead_theta(const CrossedModule& x, const Derivation& d);

struct WhiteheadGroup {
  GroupPtr group;                     // element i is units[i]; 0 is the zero derivation
  std::vector<Derivation> units;
  std::vector<std::size_t> monoid_index;  // position of units[i] in derivation_set
  std::vector<std::vector<Elem>> theta, sigma;
  std::map<std::vector<Elem>, Elem> index;  // derivation map -> unit
};

/// Units of the Whitehead monoid, found from the full monoid table.  The
/// criterion "d is a unit iff sigma(d) is bijective" is asserted.
WhiteheadGroup whitehead_group(const CrossedModule& x, const Limits& limits = {});

/// Automorphism of a crossed module: alpha on T, phi on G.
struct AutPair {
  std::vector<Elem> top, bottom;
  friend bool operator==(const AutPair&, const AutPair&) = default;
  friend auto operator<=>(const AutPair&, const AutPair&) = default;
};

AutPair identity_pair(const CrossedModule& x);
/// First failing condition of phi mu = mu alpha and alpha(g.t) = phi(g).alpha(t)
/// (bijectivity and the homomorphism property included), as text.
std::optional<std::string> aut_pair_failure(const CrossedModule& x, const AutPair& p);

struct XModAutGroup {
  GroupPtr group;              // element i is pairs[i]; 0 is the identity pair
  std::vector<AutPair> pairs;
  std::map<AutPair, Elem> index;
};

/// Pairs (alpha, phi) in Aut T x Aut G compatible with mu and the action,
/// under componentwise composition.  Throws SizeLimitError when the search
/// space exceeds limits.enum_bound or the group exceeds limits.order_bound.
XModAutGroup xmod_aut_group(const CrossedModule& x, const Limits& limits = {});

struct Actor {
  CrossedModule xmod;   // (D(G, T), Aut(X), (theta, sigma))
  WhiteheadGroup whitehead;
  XModAutGroup aut;
};

Actor actor(const CrossedModule& x, const Limits& limits = {});

/// Action data of base = (T, G, mu) on coeff = (A, B, delta): eps(t) is a
/// derivation B -> A of coeff and rho(g) an automorphism pair of coeff.
/// Not validated.
struct ActionData {
  std::vector<std::vector<Elem>> epsilon;  // t -> (b -> a)
  std::vector<AutPair> rho;                // g -> pair
  friend bool operator==(const ActionData&, const ActionData&) = default;
};

/// eps = 0, rho = identity.
ActionData zero_action(const CrossedModule& base, const CrossedModule& coeff);

/// Validated action: (eps, rho) is a crossed-module morphism into
/// Act(coeff).
class XModAction {
 public:
  /// Throws AxiomError naming the first failure ("epsilon-unit",
  /// "rho-automorphism", "epsilon-hom", "rho-hom", "square", "action").
  static XModAction make(const CrossedModule& base, const CrossedModule& coeff,
                         ActionData data, const Limits& limits = {});
  /// Same, reusing a precomputed actor of coeff.
  static XModAction make(const CrossedModule& base, const CrossedModule& coeff,
                         ActionData data, const Actor& act);

  const CrossedModule& base() const { return base_; }
  const CrossedModule& coeff() const { return coeff_; }
  const ActionData& data() const { return data_; }
  /// eps(t)(b)
  Elem eps(Elem t, Elem b) const { return data_.epsilon[t][b]; }
  /// rho(g) applied to a in A, resp. b in B.
  Elem rho_top(Elem g, Elem a) const { return data_.rho[g].top[a]; }
  Elem rho_bottom(Elem g, Elem b) const { return data_.rho[g].bottom[b]; }
  /// (eps, rho) as a morphism into the actor.
  const XModMorphism& morphism() const { return *morphism_; }

 private:
  XModAction(CrossedModule b, CrossedModule c, ActionData d, XModMorphism m)
      : base_(std::move(b)), coeff_(std::move(c)), data_(std::move(d)),
        morphism_(std::make_shared<XModMorphism>(std::move(m))) {}
  CrossedModule base_, coeff_;
  ActionData data_;
  std::shared_ptr<const XModMorphism> morphism_;
};

/// Split short exact sequence kernel >-> total ->> base with section.
struct SplitExtension {
  CrossedModule kernel, total, base;
  XModMorphism inclusion, projection, section;
};

/// Validates injectivity, surjectivity, exactness and projection o section = id.
void validate_split_extension(const SplitExtension& e);

/// (A x| T, B x| G, (delta, mu)) with T acting on A through rho o mu and
///   (b, g).(a, t) = (b.(g.a) . eps(g.t)(b)^-1, g.t),
/// which for an abelian coeff is (g.a - eps(g.t)(b), g.t).  Element (a, t)
/// has index a * |T| + t, likewise (b, g).
SplitExtension semidirect_xmod(const XModAction& action, const Limits& limits = {});

/// Same construction for unvalidated data; returns nullopt when some
/// group, action or crossed-module axiom fails.
std::optional<SplitExtension> try_semidirect_xmod(const CrossedModule& base,
                                                  const CrossedModule& coeff,
                                                  const ActionData& data,
                                                  const Limits& limits = {});

struct RecoveredAction {
  XModAction action;
  // Both a (b.a)^-1 and (b.a)^-1 a satisfied the derivation law and differ.
  bool order_ambiguous = false;
};

/// eps(t)(b) = s(t) (b.s(t))^-1 and rho(g) = (a -> g.a, b -> g b g^-1),
/// read through the inclusion and section.  Throws ComplementError unless
/// the kernel is normal, total = kernel . section and the intersections
/// are trivial.
RecoveredAction split_extension_to_action(const SplitExtension& e, const Limits& limits = {});

struct XModModule {
  CrossedModule base, coeff;
  XModAction action;
};

/// The three characterizations of "coeff is a base-module".
struct ModuleRoutes {
  bool singular_cat1 = false;   // A x| B abelian and the cat1 semidirect product splits
  bool split_extension = false; // coeff abelian and semidirect_xmod validates
  bool actor_morphism = false;  // coeff abelian and (eps, rho) maps into Act(coeff)
  std::string reason;           // why the first rejecting route rejected
};

ModuleRoutes module_routes(const CrossedModule& base, const CrossedModule& coeff,
                           const ActionData& data, const Limits& limits = {});

/// Runs all three routes.  Disagreement is an InvariantViolation; common
/// rejection throws ArgumentError.
XModModule module_check(const CrossedModule& base, const CrossedModule& coeff,
                        const ActionData& data, const Limits& limits = {});

/// Checks delta' r = s delta and
///   r(g.a) - r(eps(g.t)(b)) = g.r(a) - eps'(g.t)(s(b)).
/// Returns the failing condition and witness, or nullopt.
std::optional<AxiomError> module_hom_failure(const XModModule& m1, const XModModule& m2,
                                             const GroupHom& r, const GroupHom& s,
                                             const Limits& limits = {});
/// Throws the failure of module_hom_failure.
void module_hom_check(const XModModule& m1, const XModModule& m2, const GroupHom& r,
                      const GroupHom& s, const Limits& limits = {});

}  // namespace xmod

#endif  // XMOD_ACTION_HPP_
