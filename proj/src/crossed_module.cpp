#include "xmod/crossed_module.hpp"

#include "xmod/error.hpp"
#include "xmod/group_search.hpp"

namespace xmod {

namespace {

std::string pair_text(Elem a, Elem b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

// Restricts an action of `actor` on `space` to subgroups given as
// inclusions.  The subgroup of space must be stable.
GroupAction restrict_action(const GroupAction& action, const GroupHom& actor_incl,
                            const GroupHom& space_incl) {
  const std::size_t na = actor_incl.source()->order(), ns = space_incl.source()->order();
  constexpr Elem unset = ~Elem{0};
  std::vector<Elem> back(action.space()->order(), unset);
  for (std::size_t t = 0; t < ns; ++t) back[space_incl(static_cast<Elem>(t))] = static_cast<Elem>(t);
  std::vector<Elem> table(na * ns);
  for (std::size_t g = 0; g < na; ++g)
    for (std::size_t t = 0; t < ns; ++t) {
      const Elem y = back[action(actor_incl(static_cast<Elem>(g)), space_incl(static_cast<Elem>(t)))];
      if (y == unset) throw ArgumentError("subgroup is not stable under the action");
      table[g * ns + t] = y;
    }
  return GroupAction::from_table(actor_incl.source(), space_incl.source(), std::move(table));
}

// Map a -> b between subgroups, from a map on the ambient groups.
GroupHom restrict_hom(const GroupHom& h, const GroupHom& src_incl, const GroupHom& dst_incl) {
  constexpr Elem unset = ~Elem{0};
  std::vector<Elem> back(dst_incl.target()->order(), unset);
  for (std::size_t y = 0; y < dst_incl.source()->order(); ++y)
    back[dst_incl(static_cast<Elem>(y))] = static_cast<Elem>(y);
  std::vector<Elem> img(src_incl.source()->order());
  for (std::size_t x = 0; x < img.size(); ++x) {
    const Elem y = back[h(src_incl(static_cast<Elem>(x)))];
    if (y == unset) throw ArgumentError("image leaves the target subgroup");
    img[x] = y;
  }
  return GroupHom::from_images(src_incl.source(), dst_incl.source(), std::move(img));
}

}  // namespace

// -- CrossedModule ---------------------------------------------------------

CrossedModule CrossedModule::make(GroupHom boundary, GroupAction action, kernels::Exec exec) {
  const auto& t = *boundary.source();
  const auto& g = *boundary.target();
  if (!action.actor()->same_table(g) || !action.space()->same_table(t))
    throw ArgumentError("action does not match the groups of the boundary map");
  const std::size_t nt = t.order(), ng = g.order();
  if (auto bad = kernels::first_failure_2d(
          ng, nt,
          [&](std::size_t a, std::size_t x) {
            const Elem ga = static_cast<Elem>(a), tx = static_cast<Elem>(x);
            return boundary(action(ga, tx)) == g.conj(ga, boundary(tx));
          },
          exec)) {
    const Elem a = static_cast<Elem>(bad->first), x = static_cast<Elem>(bad->second);
    throw AxiomError("equivariance", {a, x},
                     "equivariance fails at (g, t) = " + pair_text(a, x) +
                         ": mu(g.t) != g mu(t) g^-1");
  }
  if (auto bad = kernels::first_failure_2d(
          nt, nt,
          [&](std::size_t a, std::size_t b) {
            const Elem x = static_cast<Elem>(a), y = static_cast<Elem>(b);
            return action(boundary(x), y) == t.conj(x, y);
          },
          exec)) {
    const Elem a = static_cast<Elem>(bad->first), b = static_cast<Elem>(bad->second);
    throw AxiomError("peiffer", {a, b},
                     "Peiffer identity fails at (t, t') = " + pair_text(a, b) +
                         ": mu(t).t' != t t' t^-1");
  }
  return CrossedModule(std::move(boundary), std::move(action));
}

CrossedModule make_crossed_module(const GroupPtr& t, const GroupPtr& g, GroupHom mu,
                                  GroupAction action) {
  if (!mu.source()->same_table(*t) || !mu.target()->same_table(*g))
    throw ArgumentError("boundary map does not go from T to G");
  return CrossedModule::make(std::move(mu), std::move(action));
}

CrossedModule identity_xmod(const GroupPtr& g) {
  return CrossedModule::make(identity_hom(g), conjugation_action(g));
}

CrossedModule normal_inclusion_xmod(const GroupPtr& g, std::span<const Elem> normal_subgroup) {
  if (!is_normal(*g, normal_subgroup)) throw NormalityError("subgroup is not normal");
  Subgroup n = as_group(g, normal_subgroup);
  auto action = conjugation_action(identity_hom(g), n.inclusion);
  return CrossedModule::make(n.inclusion, std::move(action));
}

CrossedModule point_xmod(const GroupPtr& m) {
  if (!m->is_abelian()) throw ArgumentError("(M, 1, 0) needs an abelian M");
  auto one = trivial_group();
  return CrossedModule::make(zero_hom(m, one), trivial_action(one, m));
}

CrossedModule trivial_top_xmod(const GroupPtr& g) {
  auto one = trivial_group();
  return CrossedModule::make(zero_hom(one, g), trivial_action(g, one));
}

CrossedModule central_quotient_xmod(const GroupPtr& t, std::span<const Elem> central) {
  for (Elem z : central)
    for (std::size_t x = 0; x < t->order(); ++x)
      if (t->mul(z, static_cast<Elem>(x)) != t->mul(static_cast<Elem>(x), z))
        throw ArgumentError("subgroup is not central");
  Quotient q = quotient(t, central);
  const std::size_t ng = q.group->order(), nt = t->order();
  std::vector<Elem> table(ng * nt);
  for (std::size_t c = 0; c < ng; ++c)
    for (std::size_t x = 0; x < nt; ++x)
      table[c * nt + x] = t->conj(q.representatives[c], static_cast<Elem>(x));
  auto action = GroupAction::from_table(q.group, t, std::move(table));
  return CrossedModule::make(q.projection, std::move(action));
}

// -- morphisms -------------------------------------------------------------

XModMorphism XModMorphism::make(const CrossedModule& source, const CrossedModule& target,
                                GroupHom f, GroupHom h) {
  if (!f.source()->same_table(*source.top()) || !f.target()->same_table(*target.top()) ||
      !h.source()->same_table(*source.bottom()) || !h.target()->same_table(*target.bottom()))
    throw ArgumentError("morphism components do not match the crossed modules");
  const std::size_t nt = source.top()->order(), ng = source.bottom()->order();
  for (std::size_t x = 0; x < nt; ++x) {
    const Elem tx = static_cast<Elem>(x);
    if (target.mu(f(tx)) != h(source.mu(tx)))
      throw AxiomError("square", {tx},
                       "mu' f(t) != h mu(t) at t = " + std::to_string(tx));
  }
  if (auto bad = kernels::first_failure_2d(ng, nt, [&](std::size_t a, std::size_t x) {
        const Elem ga = static_cast<Elem>(a), tx = static_cast<Elem>(x);
        return f(source.act(ga, tx)) == target.act(h(ga), f(tx));
      })) {
    const Elem a = static_cast<Elem>(bad->first), x = static_cast<Elem>(bad->second);
    throw AxiomError("action", {a, x},
                     "f(g.t) != h(g).f(t) at (g, t) = " + pair_text(a, x));
  }
  return XModMorphism(source, target, std::move(f), std::move(h));
}

XModMorphism make_xmod_morphism(const CrossedModule& source, const CrossedModule& target,
                                GroupHom f, GroupHom h) {
  return XModMorphism::make(source, target, std::move(f), std::move(h));
}

XModMorphism identity_morphism(const CrossedModule& x) {
  return XModMorphism::make(x, x, identity_hom(x.top()), identity_hom(x.bottom()));
}

XModMorphism compose(const XModMorphism& outer, const XModMorphism& inner) {
  return XModMorphism::make(inner.source(), outer.target(), compose(outer.top(), inner.top()),
                            compose(outer.bottom(), inner.bottom()));
}

// -- subobjects ------------------------------------------------------------

SubXMod sub_xmod(const CrossedModule& x, std::span<const Elem> sub_t, std::span<const Elem> sub_g) {
  if (!is_subgroup(*x.top(), sub_t) || !is_subgroup(*x.bottom(), sub_g))
    throw ArgumentError("sub crossed module needs subgroups");
  Subgroup s = as_group(x.top(), sub_t);
  Subgroup h = as_group(x.bottom(), sub_g);
  GroupHom mu = restrict_hom(x.boundary(), s.inclusion, h.inclusion);
  GroupAction act = restrict_action(x.action(), h.inclusion, s.inclusion);
  CrossedModule sub = CrossedModule::make(std::move(mu), std::move(act));
  XModMorphism incl = XModMorphism::make(sub, x, s.inclusion, h.inclusion);
  return SubXMod{std::move(sub), std::move(incl)};
}

SubXMod kernel_xmod(const XModMorphism& m) {
  return sub_xmod(m.source(), kernel(m.top()), kernel(m.bottom()));
}

SubXMod image_xmod(const XModMorphism& m) {
  return sub_xmod(m.target(), image(m.top()), image(m.bottom()));
}

bool is_normal_subxmod(const CrossedModule& x, std::span<const Elem> sub_t,
                       std::span<const Elem> sub_g) {
  const auto& t = *x.top();
  const auto& g = *x.bottom();
  if (!is_subgroup(t, sub_t) || !is_subgroup(g, sub_g))
    throw ArgumentError("normality test needs subgroups");
  if (!is_normal(g, sub_g)) return false;
  if (!is_normal(t, sub_t)) return false;
  for (Elem a : sub_t)
    if (!contains(sub_g, x.mu(a))) return false;
  for (std::size_t b = 0; b < g.order(); ++b)
    for (Elem a : sub_t)
      if (!contains(sub_t, x.act(static_cast<Elem>(b), a))) return false;
  for (Elem b : sub_g)
    for (std::size_t s = 0; s < t.order(); ++s) {
      const Elem ts = static_cast<Elem>(s);
      if (!contains(sub_t, t.mul(x.act(b, ts), t.inv(ts)))) return false;
    }
  return true;
}

XModQuotient quotient_xmod(const CrossedModule& x, std::span<const Elem> sub_t,
                           std::span<const Elem> sub_g) {
  if (!is_normal_subxmod(x, sub_t, sub_g))
    throw NormalityError("not a normal sub crossed module");
  Quotient qt = quotient(x.top(), sub_t);
  Quotient qg = quotient(x.bottom(), sub_g);
  std::vector<Elem> mu(qt.group->order());
  for (std::size_t c = 0; c < mu.size(); ++c)
    mu[c] = qg.projection(x.mu(qt.representatives[c]));
  const std::size_t nqt = qt.group->order(), nqg = qg.group->order();
  std::vector<Elem> table(nqg * nqt);
  for (std::size_t a = 0; a < nqg; ++a)
    for (std::size_t c = 0; c < nqt; ++c)
      table[a * nqt + c] = qt.projection(x.act(qg.representatives[a], qt.representatives[c]));
  auto mu_bar = GroupHom::from_images(qt.group, qg.group, std::move(mu));
  auto act = GroupAction::from_table(qg.group, qt.group, std::move(table));
  CrossedModule q = CrossedModule::make(std::move(mu_bar), std::move(act));
  XModMorphism proj = XModMorphism::make(x, q, qt.projection, qg.projection);
  return XModQuotient{std::move(q), std::move(proj), std::move(qt.representatives),
                      std::move(qg.representatives)};
}

bool is_abelian_xmod(const CrossedModule& x) {
  return x.top()->is_abelian() && x.bottom()->is_abelian() && x.action().is_trivial();
}

std::optional<XModMorphism> find_xmod_isomorphism(const CrossedModule& a, const CrossedModule& b) {
  if (a.top()->order() != b.top()->order() || a.bottom()->order() != b.bottom()->order())
    return std::nullopt;
  const std::size_t nt = a.top()->order(), ng = a.bottom()->order();
  std::optional<GroupHom> f_found;
  auto h = find_isomorphism(a.bottom(), b.bottom(), [&](const std::vector<Elem>& h_img) {
    auto f = find_isomorphism(a.top(), b.top(), [&](const std::vector<Elem>& f_img) {
      for (std::size_t t = 0; t < nt; ++t)
        if (b.mu(f_img[t]) != h_img[a.mu(static_cast<Elem>(t))]) return false;
      for (std::size_t g = 0; g < ng; ++g)
        for (std::size_t t = 0; t < nt; ++t)
          if (f_img[a.act(static_cast<Elem>(g), static_cast<Elem>(t))] !=
              b.act(h_img[g], f_img[t]))
            return false;
      return true;
    });
    if (!f) return false;
    f_found = std::move(f);
    return true;
  });
  if (!h) return std::nullopt;
  return XModMorphism::make(a, b, std::move(*f_found), std::move(*h));
}

}  // namespace xmod
