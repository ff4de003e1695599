#include "xmod/action.hpp"

#include "xmod/cat1.hpp"
#include "xmod/error.hpp"
#include "xmod/group_search.hpp"

namespace xmod {

namespace {

std::vector<Elem> invert_map(std::span<const Elem> f) {
  std::vector<Elem> inv(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) inv[f[x]] = static_cast<Elem>(x);
  return inv;
}

bool is_bijection(std::span<const Elem> f) {
  std::vector<char> hit(f.size(), 0);
  for (Elem y : f) {
    if (y >= f.size() || hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

// Partial inverse of an injective hom: ambient element -> preimage.
std::vector<Elem> preimage_table(const GroupHom& incl) {
  std::vector<Elem> back(incl.target()->order(), ~Elem{0});
  for (std::size_t x = 0; x < incl.source()->order(); ++x)
    back[incl(static_cast<Elem>(x))] = static_cast<Elem>(x);
  return back;
}

bool same_xmod(const CrossedModule& a, const CrossedModule& b) {
  return a.top()->same_table(*b.top()) && a.bottom()->same_table(*b.bottom()) &&
         a.boundary() == b.boundary() &&
         std::ranges::equal(a.action().table(), b.action().table());
}

ElementSet intersect(std::span<const Elem> a, std::span<const Elem> b) {
  ElementSet out;
  std::ranges::set_intersection(a, b, std::back_inserter(out));
  return out;
}

}  // namespace

std::optional<std::pair<Elem, Elem>> derivation_law_failure(const CrossedModule& x,
                                                            std::span<const Elem> map) {
  const auto& g = *x.bottom();
  const auto& t = *x.top();
  if (map.size() != g.order()) throw ArgumentError("derivation map has wrong size");
  const auto bad = kernels::first_failure_2d(g.order(), g.order(), [&](std::size_t a, std::size_t b) {
    const Elem ea = static_cast<Elem>(a), eb = static_cast<Elem>(b);
    return map[g.mul(ea, eb)] == t.mul(map[a], x.act(ea, map[b]));
  });
  if (!bad) return std::nullopt;
  return std::make_pair(static_cast<Elem>(bad->first), static_cast<Elem>(bad->second));
}

std::vector<Derivation> derivation_set(const CrossedModule& x, const Limits& limits) {
  const auto& g = *x.bottom();
  const auto& t = *x.top();
  const std::vector<Elem>& gens = g.generators();
  std::size_t total = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    total *= t.order();
    if (total > limits.enum_bound)
      throw SizeLimitError("derivation enumeration exceeds bound " +
                           std::to_string(limits.enum_bound));
  }
  auto decode = [&](std::size_t idx) {
    std::vector<Elem> im(gens.size());
    for (std::size_t i = gens.size(); i-- > 0;) {
      im[i] = static_cast<Elem>(idx % t.order());
      idx /= t.order();
    }
    return im;
  };
  // d(x s) = d(x) . x.d(s) determines d from its values on generators.
  auto extend = [&](const std::vector<Elem>& im) {
    return extend_along_generators(
        g, gens, [&](Elem at, Elem d_at, std::size_t k) { return t.mul(d_at, x.act(at, im[k])); });
  };
  const auto keep = kernels::filter_indices(total, [&](std::size_t idx) {
    auto d = extend(decode(idx));
    return d && !derivation_law_failure(x, *d);
  });
  std::vector<Derivation> out;
  out.reserve(keep.size());
  for (std::size_t idx : keep) out.push_back({*extend(decode(idx))});
  return out;
}

Derivation zero_derivation(const CrossedModule& x) {
  return {std::vector<Elem>(x.bottom()->order(), 0)};
}

std::vector<Elem> whitehead_sigma(const CrossedModule& x, const Derivation& d) {
  const auto& g = *x.bottom();
  std::vector<Elem> s(g.order());
  for (std::size_t a = 0; a < g.order(); ++a)
    s[a] = g.mul(x.mu(d.map[a]), static_cast<Elem>(a));
  return s;
}

std::vector<Elem> whitehead_theta(const CrossedModule& x, const Derivation& d) {
  const auto& t = *x.top();
  std::vector<Elem> th(t.order());
  for (std::size_t a = 0; a < t.order(); ++a)
    th[a] = t.mul(d.map[x.mu(static_cast<Elem>(a))], static_cast<Elem>(a));
  return th;
}

Derivation whitehead_product(const CrossedModule& x, const Derivation& d1,
                             const Derivation& d2) {
  const auto& t = *x.top();
  const std::vector<Elem> s2 = whitehead_sigma(x, d2);
  Derivation out{std::vector<Elem>(s2.size())};
  for (std::size_t a = 0; a < s2.size(); ++a) out.map[a] = t.mul(d1.map[s2[a]], d2.map[a]);
  if (derivation_law_failure(x, out.map))
    invariant_failed("Whitehead product of derivations is not a derivation");
  return out;
}

WhiteheadGroup whitehead_group(const CrossedModule& x, const Limits& limits) {
  const std::vector<Derivation> ders = derivation_set(x, limits);
  if (ders.empty() || ders.front() != zero_derivation(x))
    invariant_failed("zero derivation is not first in the derivation set");
  WhiteheadGroup w;
  for (std::size_t i = 0; i < ders.size(); ++i) {
    if (!is_bijection(whitehead_sigma(x, ders[i]))) continue;
    if (w.units.size() >= limits.order_bound)
      throw SizeLimitError("Whitehead group exceeds order bound " +
                           std::to_string(limits.order_bound));
    w.index.emplace(ders[i].map, static_cast<Elem>(w.units.size()));
    w.units.push_back(ders[i]);
    w.monoid_index.push_back(i);
  }
  const std::size_t n = w.units.size();
  std::vector<Elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto it = w.index.find(whitehead_product(x, w.units[i], w.units[j]).map);
      if (it == w.index.end()) invariant_failed("product of Whitehead units is not a unit");
      table[i * n + j] = it->second;
    }
  }
  // Cross-check the unit criterion against two-sided inverses in the whole
  // monoid when the table is small enough.
  const std::size_t m = ders.size();
  if (m * m <= limits.enum_bound) {
    std::map<std::vector<Elem>, std::size_t> pos;
    for (std::size_t i = 0; i < m; ++i) pos.emplace(ders[i].map, i);
    std::vector<std::size_t> prod(m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        auto it = pos.find(whitehead_product(x, ders[i], ders[j]).map);
        if (it == pos.end()) invariant_failed("derivation monoid is not closed");
        prod[i * m + j] = it->second;
      }
    std::vector<std::size_t> units;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (prod[i * m + j] == 0 && prod[j * m + i] == 0) {
          units.push_back(i);
          break;
        }
    if (units != w.monoid_index)
      invariant_failed("units of the Whitehead monoid differ from derivations with bijective sigma");
  }
  w.group = std::make_shared<const FiniteGroup>(FiniteGroup::from_table(n, std::move(table)));
  for (const auto& d : w.units) {
    w.theta.push_back(whitehead_theta(x, d));
    w.sigma.push_back(whitehead_sigma(x, d));
  }
  return w;
}

AutPair identity_pair(const CrossedModule& x) {
  return {all_elements(*x.top()), all_elements(*x.bottom())};
}

std::optional<std::string> aut_pair_failure(const CrossedModule& x, const AutPair& p) {
  const auto& t = *x.top();
  const auto& g = *x.bottom();
  if (p.top.size() != t.order() || p.bottom.size() != g.order())
    return "automorphism pair has wrong size";
  if (!is_bijection(p.top) || !is_bijection(p.bottom)) return "map is not bijective";
  if (kernels::find_hom_failure(t.table(), t.order(), t.table(), t.order(), p.top))
    return "top map is not a homomorphism";
  if (kernels::find_hom_failure(g.table(), g.order(), g.table(), g.order(), p.bottom))
    return "bottom map is not a homomorphism";
  for (std::size_t a = 0; a < t.order(); ++a)
    if (p.bottom[x.mu(static_cast<Elem>(a))] != x.mu(p.top[a]))
      return "phi mu != mu alpha at t = " + std::to_string(a);
  const auto bad = kernels::first_failure_2d(g.order(), t.order(), [&](std::size_t b, std::size_t a) {
    const Elem eb = static_cast<Elem>(b), ea = static_cast<Elem>(a);
    return p.top[x.act(eb, ea)] == x.act(p.bottom[b], p.top[a]);
  });
  if (bad)
    return "alpha(g.t) != phi(g).alpha(t) at g = " + std::to_string(bad->first) +
           ", t = " + std::to_string(bad->second);
  return std::nullopt;
}

XModAutGroup xmod_aut_group(const CrossedModule& x, const Limits& limits) {
  const auto aut_t = automorphisms(x.top(), limits);
  const auto aut_g = automorphisms(x.bottom(), limits);
  if (aut_t.size() * aut_g.size() > limits.enum_bound)
    throw SizeLimitError("automorphism pair search exceeds bound " +
                         std::to_string(limits.enum_bound));
  XModAutGroup out;
  const std::size_t nt = x.top()->order();
  std::vector<std::vector<Elem>> maps;
  for (const auto& phi : aut_g) {
    for (const auto& alpha : aut_t) {
      AutPair p{std::vector<Elem>(alpha.images().begin(), alpha.images().end()),
                std::vector<Elem>(phi.images().begin(), phi.images().end())};
      if (aut_pair_failure(x, p)) continue;
      if (out.pairs.size() >= limits.order_bound)
        throw SizeLimitError("automorphism group exceeds order bound " +
                             std::to_string(limits.order_bound));
      // T and G side by side, G shifted past T, so composition is componentwise.
      std::vector<Elem> joint = p.top;
      for (Elem y : p.bottom) joint.push_back(static_cast<Elem>(y + nt));
      maps.push_back(std::move(joint));
      out.index.emplace(p, static_cast<Elem>(out.pairs.size()));
      out.pairs.push_back(std::move(p));
    }
  }
  if (out.pairs.empty() || out.pairs.front() != identity_pair(x))
    invariant_failed("identity pair is not the first automorphism");
  out.group = group_of_maps(maps);
  return out;
}

Actor actor(const CrossedModule& x, const Limits& limits) {
  WhiteheadGroup w = whitehead_group(x, limits);
  XModAutGroup aut = xmod_aut_group(x, limits);
  const std::size_t nd = w.units.size(), na = aut.pairs.size();
  std::vector<Elem> delta(nd);
  for (std::size_t i = 0; i < nd; ++i) {
    auto it = aut.index.find(AutPair{w.theta[i], w.sigma[i]});
    if (it == aut.index.end()) invariant_failed("(theta, sigma) of a unit is not an automorphism");
    delta[i] = it->second;
  }
  std::vector<Elem> table(na * nd);
  for (std::size_t a = 0; a < na; ++a) {
    const AutPair& p = aut.pairs[a];
    const std::vector<Elem> phi_inv = invert_map(p.bottom);
    for (std::size_t i = 0; i < nd; ++i) {
      std::vector<Elem> d(phi_inv.size());
      for (std::size_t g = 0; g < d.size(); ++g) d[g] = p.top[w.units[i].map[phi_inv[g]]];
      auto it = w.index.find(d);
      if (it == w.index.end()) invariant_failed("automorphism does not preserve Whitehead units");
      table[a * nd + i] = it->second;
    }
  }
  try {
    CrossedModule act = CrossedModule::make(
        GroupHom::from_images(w.group, aut.group, std::move(delta)),
        GroupAction::from_table(aut.group, w.group, std::move(table)));
    return Actor{std::move(act), std::move(w), std::move(aut)};
  } catch (const Error& e) {
    invariant_failed(std::string("actor fails the crossed-module axioms: ") + e.what());
  }
}

ActionData zero_action(const CrossedModule& base, const CrossedModule& coeff) {
  ActionData d;
  d.epsilon.assign(base.top()->order(), std::vector<Elem>(coeff.bottom()->order(), 0));
  d.rho.assign(base.bottom()->order(), identity_pair(coeff));
  return d;
}

XModAction XModAction::make(const CrossedModule& base, const CrossedModule& coeff,
                            ActionData data, const Limits& limits) {
  return make(base, coeff, std::move(data), actor(coeff, limits));
}

XModAction XModAction::make(const CrossedModule& base, const CrossedModule& coeff,
                            ActionData data, const Actor& act) {
  const std::size_t nt = base.top()->order(), ng = base.bottom()->order();
  if (data.epsilon.size() != nt || data.rho.size() != ng)
    throw ArgumentError("action data does not match the base crossed module");
  std::vector<Elem> f(nt), h(ng);
  for (std::size_t t = 0; t < nt; ++t) {
    auto it = act.whitehead.index.find(data.epsilon[t]);
    if (it == act.whitehead.index.end())
      throw AxiomError("epsilon-unit", {static_cast<Elem>(t)},
                       "eps(" + std::to_string(t) + ") is not a Whitehead unit");
    f[t] = it->second;
  }
  for (std::size_t g = 0; g < ng; ++g) {
    auto it = act.aut.index.find(data.rho[g]);
    if (it == act.aut.index.end())
      throw AxiomError("rho-automorphism", {static_cast<Elem>(g)},
                       "rho(" + std::to_string(g) + ") is not an automorphism pair");
    h[g] = it->second;
  }
  auto as_hom = [](const GroupPtr& src, const GroupPtr& dst, std::vector<Elem> im,
                   const char* what) {
    try {
      return GroupHom::from_images(src, dst, std::move(im));
    } catch (const NotHomomorphismError& e) {
      throw AxiomError(what, {}, std::string(what) + ": " + e.what());
    }
  };
  GroupHom fh = as_hom(base.top(), act.xmod.top(), std::move(f), "epsilon-hom");
  GroupHom hh = as_hom(base.bottom(), act.xmod.bottom(), std::move(h), "rho-hom");
  XModMorphism m = XModMorphism::make(base, act.xmod, std::move(fh), std::move(hh));
  return XModAction(base, coeff, std::move(data), std::move(m));
}

void validate_split_extension(const SplitExtension& e) {
  auto check_ends = [](const XModMorphism& m, const CrossedModule& s, const CrossedModule& t,
                       const char* name) {
    if (!same_xmod(m.source(), s) || !same_xmod(m.target(), t))
      throw ArgumentError(std::string(name) + " does not connect the expected crossed modules");
  };
  check_ends(e.inclusion, e.kernel, e.total, "inclusion");
  check_ends(e.projection, e.total, e.base, "projection");
  check_ends(e.section, e.base, e.total, "section");
  if (!e.inclusion.is_injective()) throw ArgumentError("inclusion is not injective");
  if (!e.projection.is_surjective()) throw ArgumentError("projection is not surjective");
  const XModMorphism ps = compose(e.projection, e.section);
  if (ps.top() != identity_hom(e.base.top()) || ps.bottom() != identity_hom(e.base.bottom()))
    throw ArgumentError("projection o section is not the identity");
  if (image(e.inclusion.top()) != kernel(e.projection.top()) ||
      image(e.inclusion.bottom()) != kernel(e.projection.bottom()))
    throw ArgumentError("image of the inclusion is not the kernel of the projection");
}

std::optional<SplitExtension> try_semidirect_xmod(const CrossedModule& base,
                                                  const CrossedModule& coeff,
                                                  const ActionData& data,
                                                  const Limits& limits) {
  const auto& tg = *base.top();
  const auto& ag = *coeff.top();
  const std::size_t nt = tg.order(), ng = base.bottom()->order();
  const std::size_t na = ag.order(), nb = coeff.bottom()->order();
  if (data.epsilon.size() != nt || data.rho.size() != ng) return std::nullopt;
  for (const auto& e : data.epsilon)
    if (e.size() != nb) return std::nullopt;
  for (const auto& p : data.rho)
    if (p.top.size() != na || p.bottom.size() != nb) return std::nullopt;
  try {
    std::vector<Elem> ta(nt * na), gb(ng * nb);
    for (std::size_t t = 0; t < nt; ++t)
      for (std::size_t a = 0; a < na; ++a)
        ta[t * na + a] = data.rho[base.mu(static_cast<Elem>(t))].top[a];
    for (std::size_t g = 0; g < ng; ++g)
      for (std::size_t b = 0; b < nb; ++b) gb[g * nb + b] = data.rho[g].bottom[b];
    SemidirectProduct tp =
        semidirect_product(GroupAction::from_table(base.top(), coeff.top(), std::move(ta)), limits);
    SemidirectProduct gp = semidirect_product(
        GroupAction::from_table(base.bottom(), coeff.bottom(), std::move(gb)), limits);
    const std::size_t ntp = tp.group->order(), ngp = gp.group->order();
    std::vector<Elem> bnd(ntp);
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t t = 0; t < nt; ++t)
        bnd[a * nt + t] = pair_index(ng, coeff.mu(static_cast<Elem>(a)), base.mu(static_cast<Elem>(t)));
    std::vector<Elem> act(ngp * ntp);
    for (std::size_t b = 0; b < nb; ++b)
      for (std::size_t g = 0; g < ng; ++g)
        for (std::size_t a = 0; a < na; ++a)
          for (std::size_t t = 0; t < nt; ++t) {
            const Elem eg = static_cast<Elem>(g), eb = static_cast<Elem>(b);
            const Elem gt = base.act(eg, static_cast<Elem>(t));
            const Elem ga = coeff.act(eb, data.rho[g].top[a]);
            const Elem a2 = ag.mul(ga, ag.inv(data.epsilon[gt][b]));
            act[(b * ng + g) * ntp + a * nt + t] = pair_index(nt, a2, gt);
          }
    CrossedModule total = CrossedModule::make(
        GroupHom::from_images(tp.group, gp.group, std::move(bnd)),
        GroupAction::from_table(gp.group, tp.group, std::move(act)));
    XModMorphism incl =
        XModMorphism::make(coeff, total, tp.space_injection, gp.space_injection);
    XModMorphism proj = XModMorphism::make(total, base, tp.projection, gp.projection);
    XModMorphism sec = XModMorphism::make(base, total, tp.actor_injection, gp.actor_injection);
    SplitExtension e{coeff, std::move(total), base, std::move(incl), std::move(proj), std::move(sec)};
    validate_split_extension(e);
    return e;
  } catch (const SizeLimitError&) {
    throw;
  } catch (const Error&) {
    return std::nullopt;
  }
}

SplitExtension semidirect_xmod(const XModAction& action, const Limits& limits) {
  auto e = try_semidirect_xmod(action.base(), action.coeff(), action.data(), limits);
  if (!e) invariant_failed("semidirect product of a valid action is not a split extension");
  return std::move(*e);
}

RecoveredAction split_extension_to_action(const SplitExtension& e, const Limits& limits) {
  validate_split_extension(e);
  const auto& tp = *e.total.top();
  const auto& gp = *e.total.bottom();
  const GroupHom& ia = e.inclusion.top();
  const GroupHom& ib = e.inclusion.bottom();
  const GroupHom& st = e.section.top();
  const GroupHom& sg = e.section.bottom();
  const ElementSet a_img = image(ia), b_img = image(ib), t_img = image(st), g_img = image(sg);
  if (!is_normal_subxmod(e.total, a_img, b_img))
    throw ComplementError("kernel is not a normal sub-crossed module");
  if (product_set(tp, a_img, t_img) != all_elements(tp) ||
      product_set(gp, b_img, g_img) != all_elements(gp))
    throw ComplementError("total is not the product of kernel and section image");
  if (intersect(a_img, t_img) != ElementSet{0} || intersect(b_img, g_img) != ElementSet{0})
    throw ComplementError("kernel meets the section image nontrivially");

  const std::vector<Elem> back_a = preimage_table(ia), back_b = preimage_table(ib);
  const std::size_t nt = e.base.top()->order(), ng = e.base.bottom()->order();
  const std::size_t na = e.kernel.top()->order(), nb = e.kernel.bottom()->order();
  auto pull_a = [&](Elem y) {
    if (back_a[y] == ~Elem{0}) invariant_failed("element expected in the kernel is not there");
    return back_a[y];
  };
  // eps(t)(b) read in both orders: s(t) (b.s(t))^-1 and (b.s(t))^-1 s(t).
  std::vector<std::vector<Elem>> left(nt, std::vector<Elem>(nb)), right = left;
  for (std::size_t t = 0; t < nt; ++t)
    for (std::size_t b = 0; b < nb; ++b) {
      const Elem s = st(static_cast<Elem>(t));
      const Elem bs = e.total.act(ib(static_cast<Elem>(b)), s);
      left[t][b] = pull_a(tp.mul(s, tp.inv(bs)));
      right[t][b] = pull_a(tp.mul(tp.inv(bs), s));
    }
  auto all_derivations = [&](const std::vector<std::vector<Elem>>& eps) {
    for (const auto& m : eps)
      if (derivation_law_failure(e.kernel, m)) return false;
    return true;
  };
  const bool left_ok = all_derivations(left), right_ok = all_derivations(right);
  if (!left_ok && !right_ok) invariant_failed("neither reading of eps is a derivation");
  ActionData data;
  data.epsilon = left_ok ? left : right;
  data.rho.resize(ng);
  for (std::size_t g = 0; g < ng; ++g) {
    const Elem s = sg(static_cast<Elem>(g));
    AutPair& p = data.rho[g];
    p.top.resize(na);
    p.bottom.resize(nb);
    for (std::size_t a = 0; a < na; ++a) p.top[a] = pull_a(e.total.act(s, ia(static_cast<Elem>(a))));
    for (std::size_t b = 0; b < nb; ++b) {
      const Elem y = gp.conj(s, ib(static_cast<Elem>(b)));
      if (back_b[y] == ~Elem{0}) invariant_failed("kernel of G' is not normal");
      p.bottom[b] = back_b[y];
    }
  }
  RecoveredAction out{XModAction::make(e.base, e.kernel, std::move(data), limits),
                      left_ok && right_ok && left != right};
  return out;
}

namespace {

// A x| B acted on by T x| G through
//   (t, g).(a, b) = (t.(g.a - eps(t^-1)(g.b)), g.b),
// the conjugation (t, g)(a, b)(t, g)^-1 inside the semidirect total; then
// (K x| H, (e0, d0), (e1, d1)) must be a cat1-group.
std::optional<std::string> cat1_route(const CrossedModule& base, const CrossedModule& coeff,
                                      const ActionData& data, const Limits& limits) {
  const auto& ag = *coeff.top();
  const std::size_t nt = base.top()->order(), ng = base.bottom()->order();
  const std::size_t na = ag.order(), nb = coeff.bottom()->order();
  if (data.epsilon.size() != nt || data.rho.size() != ng) return "action data has wrong shape";
  for (const auto& e : data.epsilon)
    if (e.size() != nb) return "action data has wrong shape";
  for (const auto& p : data.rho)
    if (p.top.size() != na || p.bottom.size() != nb) return "action data has wrong shape";
  const Cat1OfXMod k = cm_to_cat1(coeff, limits);
  if (!k.cat1.group()->is_abelian()) return "cat1-group of the coefficients is not abelian";
  const Cat1OfXMod h = cm_to_cat1(base, limits);
  const std::size_t nk = k.cat1.group()->order(), nh = h.cat1.group()->order();
  try {
    std::vector<Elem> act(nh * nk);
    for (std::size_t t = 0; t < nt; ++t)
      for (std::size_t g = 0; g < ng; ++g) {
        const Elem tinv = base.top()->inv(static_cast<Elem>(t));
        const AutPair& rt = data.rho[base.mu(static_cast<Elem>(t))];
        const AutPair& rg = data.rho[g];
        for (std::size_t a = 0; a < na; ++a)
          for (std::size_t b = 0; b < nb; ++b) {
            const Elem gb = rg.bottom[b];
            const Elem inner = ag.mul(rg.top[a], ag.inv(data.epsilon[tinv][gb]));
            act[(t * ng + g) * nk + a * nb + b] = pair_index(nb, rt.top[inner], gb);
          }
      }
    // The element (1, g) must act on A and B exactly as rho(g); the formula
    // alone only sees rho(1) through rho(1) o rho(g).
    for (std::size_t g = 0; g < ng; ++g) {
      for (std::size_t a = 0; a < na; ++a)
        if (act[g * nk + a * nb] != pair_index(nb, data.rho[g].top[a], 0))
          return "conjugation by G does not restrict to rho on A";
      for (std::size_t b = 0; b < nb; ++b)
        if (act[g * nk + b] / nb != 0 || act[g * nk + b] % nb != data.rho[g].bottom[b])
          return "conjugation by G does not restrict to rho on B";
    }
    SemidirectProduct kh = semidirect_product(
        GroupAction::from_table(h.cat1.group(), k.cat1.group(), std::move(act)), limits);
    const std::size_t n = kh.group->order();
    std::vector<Elem> d0(n), d1(n);
    for (std::size_t x = 0; x < nk; ++x)
      for (std::size_t y = 0; y < nh; ++y) {
        const Elem ex = static_cast<Elem>(x), ey = static_cast<Elem>(y);
        d0[x * nh + y] = pair_index(nh, k.cat1.d0()(ex), h.cat1.d0()(ey));
        d1[x * nh + y] = pair_index(nh, k.cat1.d1()(ex), h.cat1.d1()(ey));
      }
    Cat1Group c = Cat1Group::make(GroupHom::from_images(kh.group, kh.group, std::move(d0)),
                                  GroupHom::from_images(kh.group, kh.group, std::move(d1)));
    // The split sequence K >-> K x| H ->> H commutes with the endomorphisms.
    for (std::size_t x = 0; x < nk; ++x) {
      const Elem ex = static_cast<Elem>(x);
      if (c.d0()(kh.space_injection(ex)) != kh.space_injection(k.cat1.d0()(ex)) ||
          c.d1()(kh.space_injection(ex)) != kh.space_injection(k.cat1.d1()(ex)))
        return "inclusion is not a cat1 morphism";
    }
    for (std::size_t y = 0; y < nh; ++y) {
      const Elem ey = static_cast<Elem>(y);
      if (c.d0()(kh.actor_injection(ey)) != kh.actor_injection(h.cat1.d0()(ey)) ||
          c.d1()(kh.actor_injection(ey)) != kh.actor_injection(h.cat1.d1()(ey)))
        return "section is not a cat1 morphism";
    }
    return std::nullopt;
  } catch (const SizeLimitError&) {
    throw;
  } catch (const Error& e) {
    return std::string("cat1 semidirect product fails: ") + e.what();
  }
}

}  // namespace

ModuleRoutes module_routes(const CrossedModule& base, const CrossedModule& coeff,
                           const ActionData& data, const Limits& limits) {
  ModuleRoutes r;
  auto note = [&](const std::string& why) {
    if (r.reason.empty()) r.reason = why;
  };
  const auto c1 = cat1_route(base, coeff, data, limits);
  r.singular_cat1 = !c1;
  if (c1) note(*c1);
  const bool abelian = is_abelian_xmod(coeff);
  if (!abelian) note("coefficient crossed module is not abelian");
  r.split_extension = abelian && try_semidirect_xmod(base, coeff, data, limits).has_value();
  if (abelian && !r.split_extension) note("semidirect product is not a split extension");
  if (abelian) {
    try {
      XModAction::make(base, coeff, data, limits);
      r.actor_morphism = true;
    } catch (const SizeLimitError&) {
      throw;
    } catch (const Error& e) {
      note(std::string("not a morphism into the actor: ") + e.what());
    }
  }
  return r;
}

XModModule module_check(const CrossedModule& base, const CrossedModule& coeff,
                        const ActionData& data, const Limits& limits) {
  const ModuleRoutes r = module_routes(base, coeff, data, limits);
  if (r.singular_cat1 != r.split_extension || r.split_extension != r.actor_morphism)
    invariant_failed("module characterizations disagree (cat1 " +
                     std::to_string(r.singular_cat1) + ", split " +
                     std::to_string(r.split_extension) + ", actor " +
                     std::to_string(r.actor_morphism) + ")");
  if (!r.actor_morphism) throw ArgumentError("not a module: " + r.reason);
  return XModModule{base, coeff, XModAction::make(base, coeff, data, limits)};
}

std::optional<AxiomError> module_hom_failure(const XModModule& m1, const XModModule& m2,
                                             const GroupHom& r, const GroupHom& s,
                                             const Limits& limits) {
  if (!same_xmod(m1.base, m2.base)) throw ArgumentError("modules over different bases");
  const auto& a1 = *m1.coeff.top();
  const auto& a2 = *m2.coeff.top();
  const auto& b1 = *m1.coeff.bottom();
  if (!r.source()->same_table(a1) || !r.target()->same_table(a2) ||
      !s.source()->same_table(b1) || !s.target()->same_table(*m2.coeff.bottom()))
    throw ArgumentError("(r, s) does not map between the module coefficients");
  for (std::size_t a = 0; a < a1.order(); ++a) {
    const Elem ea = static_cast<Elem>(a);
    if (m2.coeff.mu(r(ea)) != s(m1.coeff.mu(ea)))
      return AxiomError("boundary-square", {ea},
                        "delta' r != s delta at a = " + std::to_string(a));
  }
  const auto& base = m1.base;
  const std::size_t ng = base.bottom()->order(), nt = base.top()->order();
  const std::size_t na = a1.order(), nb = b1.order();
  const XModAction& e1 = m1.action;
  const XModAction& e2 = m2.action;
  auto diff = [&](Elem x, Elem y) { return a2.mul(x, a2.inv(y)); };
  auto fail = [](Elem g, Elem t, Elem a, Elem b) {
    return AxiomError("module-action", {g, t, a, b},
                      "r(g.a) - r(eps(g.t)(b)) != g.r(a) - eps'(g.t)(s(b)) at g = " +
                          std::to_string(g) + ", t = " + std::to_string(t) + ", a = " +
                          std::to_string(a) + ", b = " + std::to_string(b));
  };
  if (ng * nt * na * nb <= limits.enum_bound) {
    const auto bad = kernels::first_failure_2d(ng * nt, na * nb, [&](std::size_t gt, std::size_t ab) {
      const Elem g = static_cast<Elem>(gt / nt), t = static_cast<Elem>(gt % nt);
      const Elem a = static_cast<Elem>(ab / nb), b = static_cast<Elem>(ab % nb);
      const Elem x = base.act(g, t);
      return diff(r(e1.rho_top(g, a)), r(e1.eps(x, b))) ==
             diff(e2.rho_top(g, r(a)), e2.eps(x, s(b)));
    });
    if (!bad) return std::nullopt;
    return fail(static_cast<Elem>(bad->first / nt), static_cast<Elem>(bad->first % nt),
                static_cast<Elem>(bad->second / nb), static_cast<Elem>(bad->second % nb));
  }
  // For abelian coefficients the identity splits at b = 0 and at a = 0.
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t a = 0; a < na; ++a) {
      const Elem eg = static_cast<Elem>(g), ea = static_cast<Elem>(a);
      if (r(e1.rho_top(eg, ea)) != e2.rho_top(eg, r(ea))) return fail(eg, 0, ea, 0);
    }
  for (std::size_t t = 0; t < nt; ++t)
    for (std::size_t b = 0; b < nb; ++b) {
      const Elem et = static_cast<Elem>(t), eb = static_cast<Elem>(b);
      if (r(e1.eps(et, eb)) != e2.eps(et, s(eb))) return fail(0, et, 0, eb);
    }
  return std::nullopt;
}

void module_hom_check(const XModModule& m1, const XModModule& m2, const GroupHom& r,
                      const GroupHom& s, const Limits& limits) {
  if (auto f = module_hom_failure(m1, m2, r, s, limits)) throw *f;
}

}  // namespace xmod
