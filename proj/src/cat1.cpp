#include "xmod/cat1.hpp"

#include <map>
#include <unordered_set>

#include "xmod/error.hpp"
#include "xmod/group_search.hpp"

namespace xmod {

namespace {

ElementSet idempotent_kernel(const FiniteGroup& g, const GroupHom& d) {
  // For an idempotent d, ker d = {d(x) x^-1}.
  ElementSet out;
  for (std::size_t x = 0; x < g.order(); ++x)
    out.push_back(g.mul(d(static_cast<Elem>(x)), g.inv(static_cast<Elem>(x))));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Cat1Group Cat1Group::make(GroupHom d0, GroupHom d1) {
  const auto& g = *d0.source();
  if (!d0.target()->same_table(g) || !d1.source()->same_table(g) || !d1.target()->same_table(g))
    throw ArgumentError("d0 and d1 must be endomorphisms of one group");
  const std::size_t n = g.order();
  for (std::size_t x = 0; x < n; ++x) {
    const Elem e = static_cast<Elem>(x);
    if (d0(d1(e)) != d1(e))
      throw AxiomError("d0d1", {e}, "d0 d1 != d1 at x = " + std::to_string(e));
  }
  for (std::size_t x = 0; x < n; ++x) {
    const Elem e = static_cast<Elem>(x);
    if (d1(d0(e)) != d0(e))
      throw AxiomError("d1d0", {e}, "d1 d0 != d0 at x = " + std::to_string(e));
  }
  const ElementSet k0 = kernel(d0), k1 = kernel(d1);
  const auto sub = kernels::find_noncommuting_pair(g.table(), n, k0, k1);
  // Elementwise form: d0(x) x^-1 commutes with d1(y) y^-1 for all x, y.
  const auto elem = kernels::first_failure_2d(n, n, [&](std::size_t x, std::size_t y) {
    const Elem a = g.mul(d0(static_cast<Elem>(x)), g.inv(static_cast<Elem>(x)));
    const Elem b = g.mul(d1(static_cast<Elem>(y)), g.inv(static_cast<Elem>(y)));
    return g.mul(a, b) == g.mul(b, a);
  });
  if (sub.has_value() != elem.has_value())
    invariant_failed("kernel commutator and elementwise commutator tests disagree");
  if (sub)
    throw AxiomError("kernel-commutator", {(*sub)[0], (*sub)[1]},
                     "[ker d0, ker d1] != 1: " + std::to_string((*sub)[0]) + " and " +
                         std::to_string((*sub)[1]) + " do not commute");
  if (idempotent_kernel(g, d0) != k0 || idempotent_kernel(g, d1) != k1)
    invariant_failed("kernel of an idempotent differs from {d(x) x^-1}");
  if (image(d0) != image(d1)) invariant_failed("im d0 != im d1 in a cat1-group");
  return Cat1Group(std::move(d0), std::move(d1));
}

Cat1Group make_cat1(const GroupPtr& g, GroupHom d0, GroupHom d1) {
  if (!d0.source()->same_table(*g)) throw ArgumentError("d0 is not an endomorphism of G");
  return Cat1Group::make(std::move(d0), std::move(d1));
}

bool is_cat1_pair(const GroupHom& d0, const GroupHom& d1) {
  const auto& g = *d0.source();
  const std::size_t n = g.order();
  for (std::size_t x = 0; x < n; ++x) {
    const Elem e = static_cast<Elem>(x);
    if (d0(d1(e)) != d1(e) || d1(d0(e)) != d0(e)) return false;
  }
  const ElementSet k0 = kernel(d0), k1 = kernel(d1);
  return !kernels::find_noncommuting_pair(g.table(), n, k0, k1, kernels::Exec::serial);
}

Cat1OfXMod cm_to_cat1(const CrossedModule& x, const Limits& limits) {
  SemidirectProduct sp = semidirect_product(x.action(), limits);
  const std::size_t ng = x.bottom()->order(), n = sp.group->order();
  std::vector<Elem> d0(n), d1(n);
  for (std::size_t a = 0; a < n; ++a) {
    const Elem t = static_cast<Elem>(a / ng), g = static_cast<Elem>(a % ng);
    d0[a] = pair_index(ng, 0, g);
    d1[a] = pair_index(ng, 0, x.bottom()->mul(x.mu(t), g));
  }
  try {
    Cat1Group c = Cat1Group::make(GroupHom::from_images(sp.group, sp.group, std::move(d0)),
                                  GroupHom::from_images(sp.group, sp.group, std::move(d1)));
    return Cat1OfXMod{std::move(c), std::move(sp)};
  } catch (const Error& e) {
    invariant_failed(std::string("crossed module gave an invalid cat1-group: ") + e.what());
  }
}

XModOfCat1 cat1_to_cm(const Cat1Group& c) {
  const GroupPtr& g = c.group();
  Subgroup top = as_group(g, kernel(c.d0()));
  Subgroup bottom = as_group(g, image(c.d1()));
  if (image(c.d0()) != image(c.d1())) invariant_failed("im d0 != im d1");
  try {
    constexpr Elem unset = ~Elem{0};
    std::vector<Elem> back(g->order(), unset);
    for (std::size_t i = 0; i < bottom.group->order(); ++i)
      back[bottom.inclusion(static_cast<Elem>(i))] = static_cast<Elem>(i);
    std::vector<Elem> mu(top.group->order());
    for (std::size_t t = 0; t < mu.size(); ++t) mu[t] = back[c.d1()(top.inclusion(static_cast<Elem>(t)))];
    auto boundary = GroupHom::from_images(top.group, bottom.group, std::move(mu));
    auto action = conjugation_action(bottom.inclusion, top.inclusion);
    CrossedModule x = CrossedModule::make(std::move(boundary), std::move(action));
    return XModOfCat1{std::move(x), std::move(top), std::move(bottom)};
  } catch (const Error& e) {
    invariant_failed(std::string("cat1-group gave an invalid crossed module: ") + e.what());
  }
}

std::optional<GroupHom> cat1_iso(const Cat1Group& a, const Cat1Group& b) {
  if (a.group()->order() != b.group()->order()) return std::nullopt;
  if (kernel(a.d0()).size() != kernel(b.d0()).size() ||
      kernel(a.d1()).size() != kernel(b.d1()).size())
    return std::nullopt;
  const std::size_t n = a.group()->order();
  return find_isomorphism(a.group(), b.group(), [&](const std::vector<Elem>& phi) {
    for (std::size_t x = 0; x < n; ++x) {
      const Elem e = static_cast<Elem>(x);
      if (phi[a.d0()(e)] != b.d0()(phi[e]) || phi[a.d1()(e)] != b.d1()(phi[e])) return false;
    }
    return true;
  });
}

ElementSet cat1_commutator_subobject(const Cat1Group& c) {
  ElementSet d = derived_subgroup(*c.group());
  for (Elem x : d)
    if (!contains(d, c.d0()(x)) || !contains(d, c.d1()(x)))
      invariant_failed("derived subgroup is not stable under d0, d1");
  return d;
}

Cat1Quotient cat1_abelianization(const Cat1Group& c) {
  Quotient q = quotient(c.group(), cat1_commutator_subobject(c));
  const std::size_t n = q.group->order();
  std::vector<Elem> d0(n), d1(n);
  for (std::size_t k = 0; k < n; ++k) {
    d0[k] = q.projection(c.d0()(q.representatives[k]));
    d1[k] = q.projection(c.d1()(q.representatives[k]));
  }
  Cat1Group a = Cat1Group::make(GroupHom::from_images(q.group, q.group, std::move(d0)),
                                GroupHom::from_images(q.group, q.group, std::move(d1)));
  return Cat1Quotient{std::move(a), std::move(q)};
}

std::vector<Cat1Group> enumerate_cat1(const GroupPtr& g, bool up_to_automorphism,
                                      const Limits& limits) {
  const std::size_t n = g->order();
  std::vector<GroupHom> idem;
  for (auto& e : all_homs(g, g, limits)) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = e(e(static_cast<Elem>(x))) == e(static_cast<Elem>(x));
    if (ok) idem.push_back(std::move(e));
  }
  std::map<std::vector<Elem>, std::size_t> pos;
  for (std::size_t i = 0; i < idem.size(); ++i)
    pos.emplace(std::vector<Elem>(idem[i].images().begin(), idem[i].images().end()), i);
  std::vector<GroupHom> auts;
  if (up_to_automorphism) auts = automorphisms(g, limits);
  std::vector<std::vector<Elem>> inv_auts;
  for (const auto& a : auts) {
    std::vector<Elem> inv(n);
    for (std::size_t x = 0; x < n; ++x) inv[a(static_cast<Elem>(x))] = static_cast<Elem>(x);
    inv_auts.push_back(std::move(inv));
  }
  std::unordered_set<std::size_t> seen;
  std::vector<Cat1Group> out;
  for (std::size_t i = 0; i < idem.size(); ++i) {
    for (std::size_t j = 0; j < idem.size(); ++j) {
      if (seen.count(i * idem.size() + j)) continue;
      if (!is_cat1_pair(idem[i], idem[j])) continue;
      out.push_back(Cat1Group::make(idem[i], idem[j]));
      if (!up_to_automorphism) continue;
      // Mark the orbit a d a^-1.
      std::vector<Elem> c0(n), c1(n);
      for (std::size_t k = 0; k < auts.size(); ++k) {
        for (std::size_t x = 0; x < n; ++x) {
          c0[x] = auts[k](idem[i](inv_auts[k][x]));
          c1[x] = auts[k](idem[j](inv_auts[k][x]));
        }
        seen.insert(pos.at(c0) * idem.size() + pos.at(c1));
      }
    }
  }
  return out;
}

}  // namespace xmod
