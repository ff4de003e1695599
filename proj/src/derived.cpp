#include "xmod/derived.hpp"

#include <map>

#include "xmod/catalog.hpp"
#include "xmod/error.hpp"
#include "xmod/group_search.hpp"

namespace xmod {

namespace {

constexpr Elem kUnset = ~Elem{0};

// Records value v at slot k, aborting if a different value is already there.
void assign_once(std::vector<Elem>& slots, std::size_t k, Elem v, const char* what) {
  if (slots[k] == kUnset) {
    slots[k] = v;
  } else if (slots[k] != v) {
    invariant_failed(std::string(what) + " is not well defined");
  }
}

// Abelian crossed module (A, B, delta) with trivial action.
CrossedModule trivial_action_xmod(const GroupPtr& a, const GroupPtr& b, std::vector<Elem> delta) {
  return make_crossed_module(a, b, GroupHom::from_images(a, b, std::move(delta)),
                             trivial_action(b, a));
}

// ker incl-bottom is trivial and incl-bottom is onto, so G of the kernel
// and G of the total can be identified; this returns kernel-G -> total-G.
std::vector<Elem> preimages(const GroupHom& h) {
  std::vector<Elem> back(h.target()->order(), kUnset);
  for (std::size_t x = 0; x < h.source()->order(); ++x)
    back[h(static_cast<Elem>(x))] = static_cast<Elem>(x);
  return back;
}

// [G, N] inside N: generated by g.n n^-1.
ElementSet g_n_commutators(const CrossedModule& k) {
  const auto& n = *k.top();
  std::vector<Elem> seed;
  for (std::size_t g = 0; g < k.bottom()->order(); ++g)
    for (std::size_t x = 0; x < n.order(); ++x)
      seed.push_back(n.mul(k.act(static_cast<Elem>(g), static_cast<Elem>(x)),
                           n.inv(static_cast<Elem>(x))));
  ElementSet s = subgroup_closure(n, seed);
  if (!is_normal(n, s)) invariant_failed("[G, N] is not normal in N");
  return s;
}

// A module the lemmas guarantee; rejection means the library is wrong.
XModModule guaranteed_module(const CrossedModule& base, const CrossedModule& coeff,
                             ActionData data, const Limits& limits, const char* what) {
  try {
    return module_check(base, coeff, std::move(data), limits);
  } catch (const SizeLimitError&) {
    throw;
  } catch (const Error& err) {
    invariant_failed(std::string(what) + " is not an (M, 1, 0)-module: " + err.what());
  }
}

}  // namespace

void validate_extension(const XModExtension& e) {
  const auto& q = e.quotient;
  if (q.bottom()->order() != 1) throw ArgumentError("quotient must have trivial G");
  if (!q.top()->is_abelian()) throw ArgumentError("quotient must have abelian top");
  if (!e.incl.source().top()->same_table(*e.kernel.top()) ||
      !e.incl.target().top()->same_table(*e.total.top()) ||
      !e.proj.source().top()->same_table(*e.total.top()) ||
      !e.proj.target().top()->same_table(*e.quotient.top()))
    throw ArgumentError("extension maps do not connect the given crossed modules");
  if (!e.incl.is_injective()) throw ArgumentError("inclusion is not injective");
  if (!e.incl.bottom().is_surjective()) throw ArgumentError("inclusion is not onto G");
  if (!e.proj.is_surjective()) throw ArgumentError("projection is not surjective");
  if (image(e.incl.top()) != kernel(e.proj.top()))
    throw ArgumentError("image of the inclusion is not the kernel of the projection");
}

XModExtension make_extension(const CrossedModule& total, const GroupHom& f) {
  if (!f.source()->same_table(*total.top())) throw ArgumentError("f is not defined on T");
  if (!f.target()->is_abelian()) throw ArgumentError("f must map onto an abelian group");
  if (!f.is_surjective()) throw ArgumentError("f is not surjective");
  CrossedModule q = point_xmod(f.target());
  XModMorphism proj = make_xmod_morphism(total, q, f, zero_hom(total.bottom(), q.bottom()));
  SubXMod k = kernel_xmod(proj);
  XModExtension e{k.sub, total, q, k.inclusion, proj};
  validate_extension(e);
  return e;
}

std::vector<NamedExtension> extension_catalog() {
  std::vector<NamedExtension> out;
  auto add = [&](std::string name, const CrossedModule& x, const GroupHom& f) {
    out.push_back({std::move(name), make_extension(x, f)});
  };
  auto c2 = cyclic_group(2), c4 = cyclic_group(4);
  auto v4 = product_group(c2, c2);
  add("(C4,1,0) over C2", point_xmod(c4), make_hom(c4, c2, {{1, 1}}));
  add("(C4,C4,id) over C2", identity_xmod(c4), make_hom(c4, c2, {{1, 1}}));
  auto s3 = symmetric_group(3);
  add("(S3,S3,id) over 1", identity_xmod(s3), zero_hom(s3, trivial_group()));
  auto sign = abelianization(s3);
  add("(S3,S3,id) over C2", identity_xmod(s3), sign.projection);
  add("(C2^2,1,0) over C2^2", point_xmod(v4), identity_hom(v4));
  const std::int64_t f24[] = {2, 4};
  auto c2c4 = abelian_group(f24);  // (a, b) has index 4a + b
  add("(C2xC4,1,0) over C4", point_xmod(c2c4), make_hom(c2c4, c4, {{4, 0}, {1, 1}}));
  auto d4 = dihedral_group(4);
  add("(D4,D4,id) over D4_ab", identity_xmod(d4), abelianization(d4).projection);
  auto q8 = quaternion_group();
  add("(Q8,Q8,id) over Q8_ab", identity_xmod(q8), abelianization(q8).projection);
  ElementSet centre{0};
  for (Elem x = 1; x < q8->order(); ++x)
    if (q8->element_order(x) == 2) centre.push_back(x);
  add("(Q8,Q8/Z,proj) over Q8_ab", central_quotient_xmod(q8, centre), abelianization(q8).projection);
  auto a4 = alternating_group(4);
  ElementSet klein{0};
  for (Elem x = 1; x < a4->order(); ++x)
    if (a4->element_order(x) == 2) klein.push_back(x);
  auto kx = normal_inclusion_xmod(a4, klein);
  add("(V4,A4,incl) over 1", kx, zero_hom(kx.top(), trivial_group()));
  return out;
}

PointAbelianization abelianize_over_point(const XModExtension& e, const Limits& limits) {
  validate_extension(e);
  const auto& x = e.total;
  const auto& t = *x.top();
  const auto& g = *x.bottom();
  const GroupHom& f = e.proj.top();
  // J = [G, N][T, T]; N is the kernel of f.
  const ElementSet n = kernel(f);
  std::vector<Elem> seed = derived_subgroup(t);
  for (std::size_t a = 0; a < g.order(); ++a)
    for (Elem y : n) seed.push_back(t.mul(x.act(static_cast<Elem>(a), y), t.inv(y)));
  ElementSet j = subgroup_closure(t, seed);
  if (!is_normal(t, j)) invariant_failed("J is not normal in T");
  Quotient tq = quotient(x.top(), j);
  Abelianization gab = abelianization(x.bottom());
  const auto& tj = *tq.group;
  const auto& m = *e.quotient.top();

  std::vector<Elem> mu_bar(tj.order(), kUnset);
  for (std::size_t a = 0; a < t.order(); ++a)
    assign_once(mu_bar, tq.projection(static_cast<Elem>(a)),
                gab.projection(x.mu(static_cast<Elem>(a))), "mu-bar");
  CrossedModule coeff = trivial_action_xmod(tq.group, gab.group, std::move(mu_bar));

  // eps'(f(t))[g] = [t] - [g.t], checked over every t and every g.
  const std::size_t ngab = gab.group->order();
  std::vector<Elem> eps(m.order() * ngab, kUnset);
  for (std::size_t a = 0; a < t.order(); ++a) {
    const Elem ta = static_cast<Elem>(a);
    for (std::size_t b = 0; b < g.order(); ++b) {
      const Elem gb = static_cast<Elem>(b);
      const Elem v = tj.mul(tq.projection(ta), tj.inv(tq.projection(x.act(gb, ta))));
      assign_once(eps, f(ta) * ngab + gab.projection(gb), v, "eps'");
    }
  }
  ActionData data;
  data.epsilon.resize(m.order());
  for (std::size_t k = 0; k < m.order(); ++k)
    data.epsilon[k].assign(eps.begin() + k * ngab, eps.begin() + (k + 1) * ngab);
  data.rho = {identity_pair(coeff)};
  XModModule mod = guaranteed_module(e.quotient, coeff, std::move(data), limits, "(T/J, G_ab, mu-bar)");
  return PointAbelianization{std::move(j), std::move(tq), std::move(gab), std::move(mod)};
}

CommutatorAction commutator_action_on_quotient(const XModExtension& e, const Limits& limits) {
  validate_extension(e);
  const CrossedModule& k = e.kernel;
  const auto& ng = *k.top();
  const auto& gk = *k.bottom();
  const ElementSet gn = g_n_commutators(k);
  Quotient nq = quotient(k.top(), gn);
  Abelianization gab = abelianization(k.bottom());
  const std::size_t nn = nq.group->order(), na = gab.group->order();

  // N/[G,N] x G_ab with u0, u1.
  SemidirectProduct src = direct_product(nq.group, gab.group, limits);
  std::vector<Elem> nu_bar(nn, kUnset);
  for (std::size_t a = 0; a < ng.order(); ++a)
    assign_once(nu_bar, nq.projection(static_cast<Elem>(a)),
                gab.projection(k.mu(static_cast<Elem>(a))), "nu-bar");
  const std::size_t ns = src.group->order();
  std::vector<Elem> u0(ns), u1(ns);
  for (std::size_t a = 0; a < nn; ++a)
    for (std::size_t b = 0; b < na; ++b) {
      u0[a * na + b] = pair_index(na, 0, static_cast<Elem>(b));
      u1[a * na + b] = pair_index(na, 0, gab.group->mul(nu_bar[a], static_cast<Elem>(b)));
    }
  Cat1Group source = Cat1Group::make(GroupHom::from_images(src.group, src.group, u0),
                                     GroupHom::from_images(src.group, src.group, u1));

  const Cat1OfXMod kc = cm_to_cat1(k, limits);
  Cat1Quotient target = cat1_abelianization(kc.cat1);
  const std::size_t ngk = gk.order();
  std::vector<Elem> phi(ns, kUnset);
  for (std::size_t a = 0; a < ng.order(); ++a)
    for (std::size_t b = 0; b < ngk; ++b) {
      const Elem ea = static_cast<Elem>(a), eb = static_cast<Elem>(b);
      assign_once(phi, pair_index(na, nq.projection(ea), gab.projection(eb)),
                  target.quotient.projection(pair_index(ngk, ea, eb)), "phi");
    }
  GroupHom phi_hom = [&] {
    try {
      return GroupHom::from_images(src.group, target.cat1.group(), phi);
    } catch (const Error& err) {
      invariant_failed(std::string("phi is not a homomorphism: ") + err.what());
    }
  }();
  if (!phi_hom.is_injective() || !phi_hom.is_surjective()) invariant_failed("phi is not bijective");
  for (std::size_t z = 0; z < ns; ++z) {
    const Elem ez = static_cast<Elem>(z);
    if (phi_hom(source.d0()(ez)) != target.cat1.d0()(phi_hom(ez)) ||
        phi_hom(source.d1()(ez)) != target.cat1.d1()(phi_hom(ez)))
      invariant_failed("phi does not commute with the cat1 structure maps");
  }

  // m.([n],[g]) = ([t n g.t^-1], [g]).
  const auto& t = *e.total.top();
  const GroupHom& f = e.proj.top();
  const GroupHom& in = e.incl.top();
  const GroupHom& ig = e.incl.bottom();
  const std::vector<Elem> back_n = preimages(in);
  const auto& m = *e.quotient.top();
  std::vector<std::vector<Elem>> action(m.order(), std::vector<Elem>(ns, kUnset));
  for (std::size_t c = 0; c < t.order(); ++c) {
    const Elem tc = static_cast<Elem>(c);
    auto& row = action[f(tc)];
    for (std::size_t a = 0; a < ng.order(); ++a)
      for (std::size_t b = 0; b < ngk; ++b) {
        const Elem gt = e.total.act(ig(static_cast<Elem>(b)), tc);
        const Elem y = t.mul(t.mul(tc, in(static_cast<Elem>(a))), t.inv(gt));
        if (back_n[y] == kUnset) invariant_failed("t n g.t^-1 is not in N");
        const Elem gb = gab.projection(static_cast<Elem>(b));
        assign_once(row, pair_index(na, nq.projection(static_cast<Elem>(a)), gb),
                    pair_index(na, nq.projection(back_n[y]), gb), "m.([n],[g])");
      }
  }
  // Cross-check against conjugation by (t, 1) inside T x| G, read in
  // (N x| G)_ab through phi.
  const Cat1OfXMod tc = cm_to_cat1(e.total, limits);
  const auto& tg = *tc.cat1.group();
  const std::size_t ngt = e.total.bottom()->order();
  const std::vector<Elem> ig_back = preimages(ig);
  for (std::size_t c = 0; c < t.order(); ++c) {
    const Elem tt = pair_index(ngt, static_cast<Elem>(c), 0);
    for (std::size_t a = 0; a < ng.order(); ++a)
      for (std::size_t b = 0; b < ngk; ++b) {
        const Elem inner = pair_index(ngt, in(static_cast<Elem>(a)), ig(static_cast<Elem>(b)));
        const Elem conj = tg.conj(tt, inner);
        const Elem cn = conj / static_cast<Elem>(ngt), cg = conj % static_cast<Elem>(ngt);
        if (back_n[cn] == kUnset) invariant_failed("conjugate leaves N x| G");
        const Elem got = target.quotient.projection(pair_index(ngk, back_n[cn], ig_back[cg]));
        const Elem z = pair_index(na, nq.projection(static_cast<Elem>(a)),
                                  gab.projection(static_cast<Elem>(b)));
        if (phi_hom(action[f(static_cast<Elem>(c))][z]) != got)
          invariant_failed("action on the abelianized cat1-group disagrees with conjugation");
      }
  }
  for (const auto& row : action) {
    try {
      GroupHom h = GroupHom::from_images(src.group, src.group, row);
      if (!h.is_injective()) invariant_failed("M acts by a non-bijective map");
      for (std::size_t z = 0; z < ns; ++z) {
        const Elem ez = static_cast<Elem>(z);
        // d_i(m) = 1 in (M, 0, 0), so u_i(m.z) = u_i(z).
        if (source.d0()(h(ez)) != source.d0()(ez) || source.d1()(h(ez)) != source.d1()(ez))
          invariant_failed("M-action does not commute with u0, u1");
      }
    } catch (const NotHomomorphismError&) {
      invariant_failed("M does not act by homomorphisms");
    }
  }
  return CommutatorAction{std::move(nq), std::move(gab), std::move(source),
                          std::move(target), std::move(phi_hom), std::move(action)};
}

std::vector<DerivationPair> derivation_pairs(const CrossedModule& base, const XModModule& module,
                                             const GroupHom& f, const Limits& limits) {
  const CrossedModule& c = module.coeff;
  if (module.base.bottom()->order() != 1 || !f.target()->same_table(*module.base.top()))
    throw ArgumentError("module must be over (M, 1, 0) with M the target of f");
  if (!f.source()->same_table(*base.top())) throw ArgumentError("f is not defined on T");
  for (Elem g = 0; g < base.bottom()->order(); ++g)
    for (Elem tt = 0; tt < base.top()->order(); ++tt)
      if (f(base.act(g, tt)) != f(tt)) throw ArgumentError("(f, 0) is not a morphism");
  const auto h1 = all_homs(base.top(), c.top(), limits);
  const auto h2 = all_homs(base.bottom(), c.bottom(), limits);
  if (h1.size() * h2.size() > limits.enum_bound)
    throw SizeLimitError("derivation pair enumeration exceeds bound " +
                         std::to_string(limits.enum_bound));
  const auto& a = *c.top();
  std::vector<DerivationPair> out;
  for (const auto& d1 : h1)
    for (const auto& d2 : h2) {
      bool ok = true;
      for (Elem tt = 0; ok && tt < base.top()->order(); ++tt)
        ok = d2(base.mu(tt)) == c.mu(d1(tt));
      for (Elem g = 0; ok && g < base.bottom()->order(); ++g)
        for (Elem tt = 0; ok && tt < base.top()->order(); ++tt)
          ok = d1(base.act(g, tt)) == a.mul(d1(tt), a.inv(module.action.eps(f(tt), d2(g))));
      if (ok)
        out.push_back({{d1.images().begin(), d1.images().end()},
                       {d2.images().begin(), d2.images().end()}});
    }
  return out;
}

DerivationBijection derivation_bijection(const XModExtension& e, const XModModule& module,
                                         const Limits& limits) {
  const PointAbelianization ab = abelianize_over_point(e, limits);
  const XModModule& mid = ab.module;
  DerivationBijection out;
  out.pairs = derivation_pairs(e.total, module, e.proj.top(), limits);
  const auto r_all = all_homs(mid.coeff.top(), module.coeff.top(), limits);
  const auto s_all = all_homs(mid.coeff.bottom(), module.coeff.bottom(), limits);
  for (const auto& r : r_all)
    for (const auto& s : s_all)
      if (!module_hom_failure(mid, module, r, s, limits)) out.module_homs.emplace_back(r, s);

  std::map<std::pair<std::vector<Elem>, std::vector<Elem>>, std::size_t> hom_index, pair_index_of;
  for (std::size_t i = 0; i < out.module_homs.size(); ++i) {
    const auto& [r, s] = out.module_homs[i];
    hom_index.emplace(std::make_pair(std::vector<Elem>(r.images().begin(), r.images().end()),
                                     std::vector<Elem>(s.images().begin(), s.images().end())),
                      i);
  }
  for (std::size_t i = 0; i < out.pairs.size(); ++i)
    pair_index_of.emplace(std::make_pair(out.pairs[i].d1, out.pairs[i].d2), i);

  const std::size_t nt = e.total.top()->order(), ng = e.total.bottom()->order();
  for (const auto& p : out.pairs) {
    std::vector<Elem> nu1(ab.top.group->order(), kUnset), nu2(ab.bottom.group->order(), kUnset);
    for (std::size_t a = 0; a < nt; ++a)
      assign_once(nu1, ab.top.projection(static_cast<Elem>(a)), p.d1[a], "nu1");
    for (std::size_t b = 0; b < ng; ++b)
      assign_once(nu2, ab.bottom.projection(static_cast<Elem>(b)), p.d2[b], "nu2");
    auto it = hom_index.find({nu1, nu2});
    if (it == hom_index.end()) invariant_failed("phi of a derivation pair is not a module morphism");
    out.phi.push_back(it->second);
  }
  for (const auto& [r, s] : out.module_homs) {
    DerivationPair p{std::vector<Elem>(nt), std::vector<Elem>(ng)};
    for (std::size_t a = 0; a < nt; ++a) p.d1[a] = r(ab.top.projection(static_cast<Elem>(a)));
    for (std::size_t b = 0; b < ng; ++b) p.d2[b] = s(ab.bottom.projection(static_cast<Elem>(b)));
    auto it = pair_index_of.find({p.d1, p.d2});
    if (it == pair_index_of.end()) invariant_failed("psi of a module morphism is not a derivation");
    out.psi.push_back(it->second);
  }
  for (std::size_t i = 0; i < out.pairs.size(); ++i)
    if (out.psi[out.phi[i]] != i) invariant_failed("psi phi != id");
  for (std::size_t j = 0; j < out.module_homs.size(); ++j)
    if (out.phi[out.psi[j]] != j) invariant_failed("phi psi != id");
  return out;
}

ThreeTermSequence three_term(const XModExtension& e, const Limits& limits) {
  PointAbelianization mid = abelianize_over_point(e, limits);
  const CrossedModule& k = e.kernel;
  const auto& t = *e.total.top();
  const GroupHom& f = e.proj.top();
  const GroupHom& in = e.incl.top();
  const std::vector<Elem> back_n = preimages(in);
  Quotient nq = quotient(k.top(), g_n_commutators(k));
  const auto& gab = mid.bottom;
  const std::size_t na = gab.group->order();

  std::vector<Elem> nu_bar(nq.group->order(), kUnset);
  for (std::size_t a = 0; a < k.top()->order(); ++a)
    assign_once(nu_bar, nq.projection(static_cast<Elem>(a)),
                gab.projection(e.total.mu(in(static_cast<Elem>(a)))), "nu-bar");
  CrossedModule left_coeff = trivial_action_xmod(nq.group, gab.group, std::move(nu_bar));

  // eps''(f(t))[g] = [t g.t^-1].
  const auto& m = *e.quotient.top();
  std::vector<Elem> eps(m.order() * na, kUnset);
  for (std::size_t c = 0; c < t.order(); ++c)
    for (std::size_t b = 0; b < e.total.bottom()->order(); ++b) {
      const Elem tc = static_cast<Elem>(c), gb = static_cast<Elem>(b);
      const Elem y = t.mul(tc, t.inv(e.total.act(gb, tc)));
      if (back_n[y] == kUnset) invariant_failed("t g.t^-1 is not in N");
      assign_once(eps, f(tc) * na + gab.projection(gb), nq.projection(back_n[y]), "eps''");
    }
  ActionData data;
  data.epsilon.resize(m.order());
  for (std::size_t c = 0; c < m.order(); ++c)
    data.epsilon[c].assign(eps.begin() + c * na, eps.begin() + (c + 1) * na);
  data.rho = {identity_pair(left_coeff)};
  XModModule left =
      guaranteed_module(e.quotient, left_coeff, std::move(data), limits, "(N/[G,N], G_ab, nu-bar)");
  XModModule right = guaranteed_module(e.quotient, e.quotient, zero_action(e.quotient, e.quotient),
                                        limits, "(M, 1, 0)");

  const auto& tj = *mid.top.group;
  std::vector<Elem> u(nq.group->order(), kUnset);
  for (std::size_t a = 0; a < k.top()->order(); ++a)
    assign_once(u, nq.projection(static_cast<Elem>(a)), mid.top.projection(in(static_cast<Elem>(a))),
                "u");
  std::vector<Elem> fbar(tj.order(), kUnset);
  for (std::size_t c = 0; c < t.order(); ++c)
    assign_once(fbar, mid.top.projection(static_cast<Elem>(c)), f(static_cast<Elem>(c)), "f-bar");
  GroupHom u_hom = GroupHom::from_images(nq.group, mid.top.group, std::move(u));
  GroupHom f_hom = GroupHom::from_images(mid.top.group, e.quotient.top(), std::move(fbar));
  GroupHom id_ab = identity_hom(gab.group);
  GroupHom zero_ab = zero_hom(gab.group, e.quotient.bottom());
  try {
    module_hom_check(left, mid.module, u_hom, id_ab, limits);
    module_hom_check(mid.module, right, f_hom, zero_ab, limits);
  } catch (const AxiomError& err) {
    invariant_failed(std::string("three-term map is not a module morphism: ") + err.what());
  }
  XModMorphism u_map = make_xmod_morphism(left.coeff, mid.module.coeff, u_hom, id_ab);
  XModMorphism f_map = make_xmod_morphism(mid.module.coeff, right.coeff, f_hom, zero_ab);
  return ThreeTermSequence{std::move(left), mid.module, std::move(right), std::move(nq),
                           std::move(mid), std::move(u_map), std::move(f_map)};
}

ExactnessReport exactness_report(const ThreeTermSequence& s) {
  ExactnessReport r;
  r.right_surjective = s.f_map.is_surjective();
  r.middle_exact = image(s.u_map.top()) == kernel(s.f_map.top()) &&
                   image(s.u_map.bottom()) == kernel(s.f_map.bottom());
  r.u_injective = s.u_map.is_injective();
  return r;
}

}  // namespace xmod
