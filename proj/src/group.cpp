#include "xmod/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "xmod/error.hpp"
#include "xmod/kernels.hpp"

namespace xmod {

namespace {

std::vector<Elem> closure_from(const FiniteGroup& g, std::span<const Elem> seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> members{FiniteGroup::identity};
  in[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Elem s : seed) {
      const Elem y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<Elem> greedy_generators_of_table(std::size_t n,
                                             std::span<const Elem> table) {
  std::vector<Elem> gens;
  std::vector<char> in(n, 0);
  std::vector<Elem> members{0};
  in[0] = 1;
  for (Elem x = 1; x < n; ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    // Re-close under the enlarged generator list.
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Elem s : gens) {
        const Elem y = table[members[i] * n + s];
        if (!in[y]) {
          in[y] = 1;
          members.push_back(y);
        }
      }
    }
  }
  return gens;
}

std::string cycle_notation(const std::vector<std::size_t>& p) {
  std::vector<char> seen(p.size(), 0);
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace

// -- FiniteGroup -----------------------------------------------------------

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<Elem> table,
                                    std::vector<std::string> labels,
                                    std::vector<Elem> generators) {
  if (order == 0) throw ArgumentError("group order must be positive");
  if (table.size() != order * order)
    throw ArgumentError("multiplication table has wrong size");
  if (!labels.empty() && labels.size() != order)
    throw ArgumentError("label count does not match group order");
  for (Elem x : table)
    if (x >= order) throw ArgumentError("table entry out of range");
  for (Elem x : generators)
    if (x >= order) throw ArgumentError("generator out of range");
  for (std::size_t x = 0; x < order; ++x) {
    if (table[x] != x || table[x * order] != x)
      throw AxiomError("identity", {static_cast<Elem>(x)},
                       "element 0 is not a two-sided identity");
  }
  // Rows and columns must be permutations.
  std::vector<Elem> inverse(order, order);
  for (std::size_t a = 0; a < order; ++a) {
    std::vector<char> row(order, 0), col(order, 0);
    for (std::size_t b = 0; b < order; ++b) {
      const Elem r = table[a * order + b], c = table[b * order + a];
      if (row[r] || col[c])
        throw AxiomError("latin", {static_cast<Elem>(a)},
                         "multiplication table row/column is not a permutation");
      row[r] = col[c] = 1;
      if (r == 0) inverse[a] = static_cast<Elem>(b);
    }
  }
  if (auto bad = kernels::find_associativity_failure(table, order)) {
    const auto [a, b, c] = *bad;
    throw AxiomError("associativity", {a, b, c},
                     "associativity fails at (" + std::to_string(a) + "," +
                         std::to_string(b) + "," + std::to_string(c) + ")");
  }
  FiniteGroup g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.inverse_ = std::move(inverse);
  g.labels_ = std::move(labels);
  g.element_orders_.assign(order, 1);
  for (std::size_t a = 1; a < order; ++a) {
    std::size_t k = 1;
    Elem p = static_cast<Elem>(a);
    while (p != 0) {
      p = g.mul(p, static_cast<Elem>(a));
      ++k;
    }
    g.element_orders_[a] = k;
  }
  g.abelian_ = !kernels::find_noncommuting_pair(
      g.table_, order, std::span<const Elem>(all_elements(g)),
      std::span<const Elem>(all_elements(g)));
  g.generators_ = generators.empty() ? greedy_generators_of_table(order, g.table_)
                                     : std::move(generators);
  return g;
}

Elem FiniteGroup::pow(Elem a, std::int64_t k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  k %= static_cast<std::int64_t>(element_order(a));
  Elem r = identity;
  Elem base = a;
  while (k > 0) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

std::string FiniteGroup::label(Elem a) const {
  return labels_.empty() ? std::to_string(a) : labels_[a];
}

// -- GroupHom --------------------------------------------------------------

GroupHom GroupHom::from_images(GroupPtr source, GroupPtr target,
                               std::vector<Elem> images) {
  if (!source || !target) throw ArgumentError("null group");
  if (images.size() != source->order())
    throw ArgumentError("image array has wrong length");
  for (Elem y : images)
    if (y >= target->order()) throw ArgumentError("image out of range");
  if (images[0] != 0)
    throw NotHomomorphismError("identity is not mapped to identity");
  if (auto bad = kernels::find_hom_failure(source->table(), source->order(),
                                           target->table(), target->order(),
                                           images)) {
    throw NotHomomorphismError("h(x*y) != h(x)*h(y) at x=" +
                               std::to_string((*bad)[0]) +
                               ", y=" + std::to_string((*bad)[1]));
  }
  GroupHom h;
  h.source_ = std::move(source);
  h.target_ = std::move(target);
  h.images_ = std::move(images);
  return h;
}

bool GroupHom::is_injective() const { return kernel(*this).size() == 1; }

bool GroupHom::is_surjective() const {
  return image(*this).size() == target_->order();
}

// -- GroupAction -----------------------------------------------------------

GroupAction GroupAction::from_table(GroupPtr actor, GroupPtr space,
                                    std::vector<Elem> table) {
  if (!actor || !space) throw ArgumentError("null group");
  const std::size_t na = actor->order(), ns = space->order();
  if (table.size() != na * ns) throw ArgumentError("action table has wrong size");
  for (Elem x : table)
    if (x >= ns) throw ArgumentError("action entry out of range");
  for (std::size_t t = 0; t < ns; ++t)
    if (table[t] != t)
      throw AxiomError("action-identity", {0, static_cast<Elem>(t)},
                       "identity does not act trivially");
  for (std::size_t g = 0; g < na; ++g) {
    std::span<const Elem> row(table.data() + g * ns, ns);
    std::vector<char> seen(ns, 0);
    for (Elem y : row) {
      if (seen[y])
        throw AxiomError("action-bijective", {static_cast<Elem>(g)},
                         "actor element " + std::to_string(g) +
                             " does not act bijectively");
      seen[y] = 1;
    }
    if (auto bad = kernels::find_hom_failure(space->table(), ns, space->table(),
                                             ns, row)) {
      throw AxiomError("action-automorphism",
                       {static_cast<Elem>(g), (*bad)[0], (*bad)[1]},
                       "actor element " + std::to_string(g) +
                           " does not act by a homomorphism");
    }
  }
  const auto* tab = table.data();
  const auto* at = actor->table().data();
  auto bad = kernels::first_failure_2d(
      na * na, ns, [=](std::size_t gh, std::size_t t) {
        const std::size_t g = gh / na, h = gh % na;
        return tab[at[g * na + h] * ns + t] == tab[g * ns + tab[h * ns + t]];
      });
  if (bad) {
    const Elem g = static_cast<Elem>(bad->first / na);
    const Elem h = static_cast<Elem>(bad->first % na);
    throw AxiomError("action-composition", {g, h, static_cast<Elem>(bad->second)},
                     "(gh).t != g.(h.t)");
  }
  GroupAction a;
  a.actor_ = std::move(actor);
  a.space_ = std::move(space);
  a.space_order_ = ns;
  a.table_ = std::move(table);
  return a;
}

bool GroupAction::is_trivial() const {
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (table_[i] != i % space_order_) return false;
  return true;
}

// -- construction ----------------------------------------------------------

GroupPtr group_from_permutations(
    std::size_t degree, const std::vector<std::vector<std::size_t>>& generators,
    const Limits& limits) {
  if (degree == 0) throw ArgumentError("degree must be positive");
  using Perm = std::vector<std::size_t>;
  std::vector<Perm> gens;
  for (const auto& g : generators) {
    if (g.size() != degree)
      throw ArgumentError("generator has wrong length for degree " +
                          std::to_string(degree));
    Perm p(degree);
    std::vector<char> seen(degree, 0);
    for (std::size_t i = 0; i < degree; ++i) {
      if (g[i] < 1 || g[i] > degree || seen[g[i] - 1])
        throw ArgumentError("generator is not a permutation of 1.." +
                            std::to_string(degree));
      seen[g[i] - 1] = 1;
      p[i] = g[i] - 1;
    }
    gens.push_back(std::move(p));
  }
  auto compose_perm = [degree](const Perm& p, const Perm& q) {
    Perm r(degree);
    for (std::size_t i = 0; i < degree; ++i) r[i] = p[q[i]];
    return r;
  };
  Perm id(degree);
  std::iota(id.begin(), id.end(), std::size_t{0});
  std::vector<Perm> elems{id};
  std::map<Perm, Elem> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      Perm y = compose_perm(elems[i], g);
      if (index.count(y)) continue;
      if (elems.size() >= limits.order_bound)
        throw SizeLimitError("permutation group exceeds order bound " +
                             std::to_string(limits.order_bound));
      index.emplace(y, static_cast<Elem>(elems.size()));
      elems.push_back(std::move(y));
    }
  }
  const std::size_t n = elems.size();
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = index.at(compose_perm(elems[a], elems[b]));
  std::vector<std::string> labels;
  for (const auto& p : elems) labels.push_back(cycle_notation(p));
  std::vector<Elem> gen_idx;
  for (const auto& g : gens) gen_idx.push_back(index.at(g));
  if (gen_idx.empty() && n == 1) gen_idx = {};
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(
      n, std::move(table), std::move(labels), std::move(gen_idx)));
}

std::vector<std::int64_t> abelian_coordinates(std::span<const std::int64_t> factors,
                                              Elem e) {
  std::vector<std::int64_t> c(factors.size());
  std::uint64_t rest = e;
  for (std::size_t i = factors.size(); i-- > 0;) {
    c[i] = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(factors[i]));
    rest /= static_cast<std::uint64_t>(factors[i]);
  }
  return c;
}

Elem abelian_element(std::span<const std::int64_t> factors,
                     std::span<const std::int64_t> coords) {
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::int64_t r = coords[i] % factors[i];
    if (r < 0) r += factors[i];
    idx = idx * factors[i] + r;
  }
  return static_cast<Elem>(idx);
}

GroupPtr abelian_group(std::span<const std::int64_t> factors, const Limits& limits) {
  std::size_t n = 1;
  for (auto d : factors) {
    if (d < 2) throw ArgumentError("invariant factors must be >= 2");
    n *= static_cast<std::size_t>(d);
    if (n > limits.order_bound)
      throw SizeLimitError("abelian group exceeds order bound " +
                           std::to_string(limits.order_bound));
  }
  std::vector<std::vector<std::int64_t>> coords(n);
  for (std::size_t e = 0; e < n; ++e)
    coords[e] = abelian_coordinates(factors, static_cast<Elem>(e));
  std::vector<Elem> table(n * n);
  std::vector<std::int64_t> sum(factors.size());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < factors.size(); ++i)
        sum[i] = coords[a][i] + coords[b][i];
      table[a * n + b] = abelian_element(factors, sum);
    }
  }
  std::vector<std::string> labels;
  for (const auto& c : coords) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i)
      s += (i ? "," : "") + std::to_string(c[i]);
    labels.push_back(s + ")");
  }
  std::vector<Elem> gens;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::vector<std::int64_t> unit(factors.size(), 0);
    unit[i] = 1;
    gens.push_back(abelian_element(factors, unit));
  }
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(
      n, std::move(table), std::move(labels), std::move(gens)));
}

GroupPtr cyclic_group(std::size_t n) {
  if (n <= 1) return trivial_group();
  const std::int64_t f[] = {static_cast<std::int64_t>(n)};
  return abelian_group(f, Limits{std::max<std::size_t>(n, 512), 1000000});
}

GroupPtr trivial_group() {
  return std::make_shared<const FiniteGroup>(
      FiniteGroup::from_table(1, {0}, {"()"}, {}));
}

// -- homomorphisms ---------------------------------------------------------

GroupHom make_hom(GroupPtr source, GroupPtr target,
                  const std::vector<std::pair<Elem, Elem>>& generator_images) {
  const std::size_t n = source->order();
  constexpr Elem unset = ~Elem{0};
  for (auto [g, y] : generator_images)
    if (g >= n || y >= target->order())
      throw ArgumentError("generator image out of range");
  std::vector<Elem> img(n, unset);
  img[0] = 0;
  std::vector<Elem> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Elem x = queue[i];
    for (auto [g, gi] : generator_images) {
      const Elem y = source->mul(x, g);
      const Elem v = target->mul(img[x], gi);
      if (img[y] == unset) {
        img[y] = v;
        queue.push_back(y);
      } else if (img[y] != v) {
        throw NotHomomorphismError(
            "generator images violate a relation: element " +
            std::to_string(y) + " reached with images " +
            std::to_string(img[y]) + " and " + std::to_string(v));
      }
    }
  }
  if (queue.size() != n)
    throw ArgumentError("generator images are not given on a generating set");
  return GroupHom::from_images(std::move(source), std::move(target), std::move(img));
}

GroupHom identity_hom(GroupPtr g) {
  std::vector<Elem> img(g->order());
  std::iota(img.begin(), img.end(), Elem{0});
  return GroupHom::from_images(g, g, std::move(img));
}

GroupHom zero_hom(GroupPtr source, GroupPtr target) {
  std::vector<Elem> img(source->order(), 0);
  return GroupHom::from_images(std::move(source), std::move(target), std::move(img));
}

GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
  if (inner.target()->order() != outer.source()->order())
    throw ArgumentError("cannot compose homomorphisms: order mismatch");
  std::vector<Elem> img(inner.source()->order());
  for (std::size_t x = 0; x < img.size(); ++x)
    img[x] = outer(inner(static_cast<Elem>(x)));
  return GroupHom::from_images(inner.source(), outer.target(), std::move(img));
}

GroupHom inverse_hom(const GroupHom& iso) {
  const std::size_t n = iso.source()->order();
  if (iso.target()->order() != n || !iso.is_injective())
    throw ArgumentError("homomorphism is not bijective");
  std::vector<Elem> img(n);
  for (std::size_t x = 0; x < n; ++x) img[iso(static_cast<Elem>(x))] = static_cast<Elem>(x);
  return GroupHom::from_images(iso.target(), iso.source(), std::move(img));
}

ElementSet kernel(const GroupHom& h) {
  ElementSet k;
  for (std::size_t x = 0; x < h.source()->order(); ++x)
    if (h(static_cast<Elem>(x)) == 0) k.push_back(static_cast<Elem>(x));
  return k;
}

ElementSet image(const GroupHom& h) {
  std::vector<char> in(h.target()->order(), 0);
  for (Elem y : h.images()) in[y] = 1;
  ElementSet out;
  for (std::size_t y = 0; y < in.size(); ++y)
    if (in[y]) out.push_back(static_cast<Elem>(y));
  return out;
}

// -- actions ---------------------------------------------------------------

GroupAction trivial_action(GroupPtr actor, GroupPtr space) {
  const std::size_t na = actor->order(), ns = space->order();
  std::vector<Elem> table(na * ns);
  for (std::size_t g = 0; g < na; ++g)
    for (std::size_t t = 0; t < ns; ++t) table[g * ns + t] = static_cast<Elem>(t);
  return GroupAction::from_table(std::move(actor), std::move(space), std::move(table));
}

GroupAction conjugation_action(GroupPtr g) {
  const std::size_t n = g->order();
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t t = 0; t < n; ++t)
      table[a * n + t] = g->conj(static_cast<Elem>(a), static_cast<Elem>(t));
  return GroupAction::from_table(g, g, std::move(table));
}

GroupAction conjugation_action(const GroupHom& actor_incl, const GroupHom& space_incl) {
  const auto& amb = *actor_incl.target();
  if (!amb.same_table(*space_incl.target()))
    throw ArgumentError("conjugation action needs a common ambient group");
  const std::size_t na = actor_incl.source()->order();
  const std::size_t ns = space_incl.source()->order();
  constexpr Elem unset = ~Elem{0};
  std::vector<Elem> back(amb.order(), unset);
  for (std::size_t t = 0; t < ns; ++t) back[space_incl(static_cast<Elem>(t))] = static_cast<Elem>(t);
  std::vector<Elem> table(na * ns);
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t t = 0; t < ns; ++t) {
      const Elem c = amb.conj(actor_incl(static_cast<Elem>(a)),
                              space_incl(static_cast<Elem>(t)));
      if (back[c] == unset)
        throw ArgumentError("subgroup is not stable under conjugation");
      table[a * ns + t] = back[c];
    }
  }
  return GroupAction::from_table(actor_incl.source(), space_incl.source(),
                                 std::move(table));
}

GroupAction pullback_action(const GroupAction& action, const GroupHom& phi) {
  const std::size_t na = phi.source()->order(), ns = action.space()->order();
  std::vector<Elem> table(na * ns);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t t = 0; t < ns; ++t)
      table[a * ns + t] = action(phi(static_cast<Elem>(a)), static_cast<Elem>(t));
  return GroupAction::from_table(phi.source(), action.space(), std::move(table));
}

// -- subgroups -------------------------------------------------------------

ElementSet subgroup_closure(const FiniteGroup& g, std::span<const Elem> seed) {
  for (Elem s : seed)
    if (s >= g.order()) throw ArgumentError("seed element out of range");
  return closure_from(g, seed);
}

ElementSet normal_closure_in(const FiniteGroup& g, std::span<const Elem> within,
                             std::span<const Elem> seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> conjugates;
  for (Elem w : within) {
    for (Elem s : seed) {
      const Elem c = g.conj(w, s);
      if (!in[c]) {
        in[c] = 1;
        conjugates.push_back(c);
      }
    }
  }
  return subgroup_closure(g, conjugates);
}

ElementSet normal_closure(const FiniteGroup& g, std::span<const Elem> seed) {
  return normal_closure_in(g, all_elements(g), seed);
}

ElementSet commutator_subgroup(const FiniteGroup& g, std::span<const Elem> a,
                               std::span<const Elem> b) {
  const ElementSet within = subgroup_closure(g, set_union(a, b));
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> comms;
  for (Elem x : a) {
    for (Elem y : b) {
      const Elem c = g.commutator(x, y);
      if (!in[c]) {
        in[c] = 1;
        comms.push_back(c);
      }
    }
  }
  return normal_closure_in(g, within, comms);
}

ElementSet derived_subgroup(const FiniteGroup& g) {
  const ElementSet all = all_elements(g);
  return commutator_subgroup(g, all, all);
}

ElementSet all_elements(const FiniteGroup& g) {
  ElementSet s(g.order());
  std::iota(s.begin(), s.end(), Elem{0});
  return s;
}

ElementSet set_union(std::span<const Elem> a, std::span<const Elem> b) {
  ElementSet out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool contains(std::span<const Elem> set, Elem x) {
  return std::binary_search(set.begin(), set.end(), x);
}

bool is_subset(std::span<const Elem> a, std::span<const Elem> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool is_subgroup(const FiniteGroup& g, std::span<const Elem> s) {
  if (s.empty() || !std::is_sorted(s.begin(), s.end()) || s.front() != 0)
    return false;
  if (s.back() >= g.order()) return false;
  std::vector<char> in(g.order(), 0);
  for (Elem x : s) in[x] = 1;
  for (Elem x : s)
    for (Elem y : s)
      if (!in[g.mul(x, y)]) return false;
  return true;
}

bool is_normal(const FiniteGroup& g, std::span<const Elem> s) {
  if (!is_subgroup(g, s)) return false;
  std::vector<char> in(g.order(), 0);
  for (Elem x : s) in[x] = 1;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (Elem x : s)
      if (!in[g.conj(static_cast<Elem>(a), x)]) return false;
  return true;
}

ElementSet product_set(const FiniteGroup& g, std::span<const Elem> a,
                       std::span<const Elem> b) {
  std::vector<char> in(g.order(), 0);
  for (Elem x : a)
    for (Elem y : b) in[g.mul(x, y)] = 1;
  ElementSet out;
  for (std::size_t x = 0; x < in.size(); ++x)
    if (in[x]) out.push_back(static_cast<Elem>(x));
  return out;
}

std::vector<Elem> greedy_generators(const FiniteGroup& g, std::span<const Elem> subset) {
  std::vector<Elem> gens;
  ElementSet covered{0};
  for (Elem x : subset) {
    if (contains(covered, x)) continue;
    gens.push_back(x);
    covered = subgroup_closure(g, gens);
  }
  return gens;
}

Subgroup as_group(const GroupPtr& ambient, std::span<const Elem> subset) {
  if (!is_subgroup(*ambient, subset))
    throw ArgumentError("element set is not a subgroup");
  const std::size_t k = subset.size();
  std::vector<Elem> local(ambient->order(), 0);
  for (std::size_t i = 0; i < k; ++i) local[subset[i]] = static_cast<Elem>(i);
  std::vector<Elem> table(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      table[i * k + j] = local[ambient->mul(subset[i], subset[j])];
  std::vector<std::string> labels;
  if (ambient->has_labels())
    for (Elem x : subset) labels.push_back(ambient->label(x));
  std::vector<Elem> gens;
  for (Elem x : greedy_generators(*ambient, subset)) gens.push_back(local[x]);
  auto sub = std::make_shared<const FiniteGroup>(
      FiniteGroup::from_table(k, std::move(table), std::move(labels), std::move(gens)));
  std::vector<Elem> incl(subset.begin(), subset.end());
  auto inclusion = GroupHom::from_images(sub, ambient, std::move(incl));
  return Subgroup{sub, std::move(inclusion)};
}

Quotient quotient(const GroupPtr& g, std::span<const Elem> normal_subgroup) {
  if (!is_subgroup(*g, normal_subgroup))
    throw NormalityError("quotient requires a subgroup");
  if (!is_normal(*g, normal_subgroup))
    throw NormalityError("subgroup is not normal");
  const std::size_t n = g->order();
  constexpr Elem unset = ~Elem{0};
  std::vector<Elem> coset(n, unset);
  std::vector<Elem> reps;
  for (std::size_t x = 0; x < n; ++x) {
    if (coset[x] != unset) continue;
    const Elem c = static_cast<Elem>(reps.size());
    reps.push_back(static_cast<Elem>(x));
    for (Elem k : normal_subgroup) coset[g->mul(static_cast<Elem>(x), k)] = c;
  }
  const std::size_t q = reps.size();
  std::vector<Elem> table(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b)
      table[a * q + b] = coset[g->mul(reps[a], reps[b])];
  std::vector<std::string> labels;
  if (g->has_labels())
    for (Elem r : reps) labels.push_back("[" + g->label(r) + "]");
  std::vector<Elem> gens;
  for (Elem x : g->generators())
    if (coset[x] != 0 && std::find(gens.begin(), gens.end(), coset[x]) == gens.end())
      gens.push_back(coset[x]);
  auto qg = std::make_shared<const FiniteGroup>(
      FiniteGroup::from_table(q, std::move(table), std::move(labels), std::move(gens)));
  auto proj = GroupHom::from_images(g, qg, std::move(coset));
  return Quotient{qg, std::move(proj), std::move(reps)};
}

FGAbelianGroup abelian_invariants(const FiniteGroup& g) {
  if (!g.is_abelian()) throw ArgumentError("group is not abelian");
  std::size_t n = g.order();
  std::vector<std::int64_t> prime_powers;
  for (std::size_t p = 2; n > 1; ++p) {
    if (n % p) continue;
    std::size_t a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    // s[k] = log_p #{x : x^(p^k) = 1}.
    std::vector<std::size_t> s(a + 2, 0);
    std::int64_t pk = 1;
    for (std::size_t k = 1; k <= a + 1; ++k) {
      pk *= static_cast<std::int64_t>(p);
      std::size_t count = 0;
      for (std::size_t x = 0; x < g.order(); ++x)
        if (g.pow(static_cast<Elem>(x), pk) == 0) ++count;
      std::size_t e = 0;
      while (count > 1) {
        count /= p;
        ++e;
      }
      s[k] = e;
    }
    // Number of cyclic factors of order >= p^k is s[k] - s[k-1].
    std::int64_t q = 1;
    for (std::size_t k = 1; k <= a; ++k) {
      q *= static_cast<std::int64_t>(p);
      const std::size_t at_least_k = s[k] - s[k - 1];
      const std::size_t at_least_k1 = s[k + 1] - s[k];
      for (std::size_t i = at_least_k1; i < at_least_k; ++i) prime_powers.push_back(q);
    }
  }
  return FGAbelianGroup::from_cyclic_orders(prime_powers);
}

Abelianization abelianization(const GroupPtr& g) {
  const ElementSet d = derived_subgroup(*g);
  Quotient q = quotient(g, d);
  FGAbelianGroup inv = abelian_invariants(*q.group);
  return Abelianization{q.group, std::move(q.projection), std::move(inv)};
}

SemidirectProduct semidirect_product(const GroupAction& action, const Limits& limits) {
  const auto& t = *action.space();
  const auto& g = *action.actor();
  const std::size_t nt = t.order(), ng = g.order(), n = nt * ng;
  if (n > limits.order_bound)
    throw SizeLimitError("semidirect product exceeds order bound " +
                         std::to_string(limits.order_bound));
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const Elem t1 = static_cast<Elem>(a / ng), g1 = static_cast<Elem>(a % ng);
    for (std::size_t b = 0; b < n; ++b) {
      const Elem t2 = static_cast<Elem>(b / ng), g2 = static_cast<Elem>(b % ng);
      table[a * n + b] = pair_index(ng, t.mul(t1, action(g1, t2)), g.mul(g1, g2));
    }
  }
  std::vector<std::string> labels;
  if (t.has_labels() || g.has_labels()) {
    for (std::size_t a = 0; a < n; ++a)
      labels.push_back("(" + t.label(static_cast<Elem>(a / ng)) + "," +
                       g.label(static_cast<Elem>(a % ng)) + ")");
  }
  std::vector<Elem> gens;
  for (Elem x : t.generators()) gens.push_back(pair_index(ng, x, 0));
  for (Elem x : g.generators()) gens.push_back(pair_index(ng, 0, x));
  auto sp = std::make_shared<const FiniteGroup>(
      FiniteGroup::from_table(n, std::move(table), std::move(labels), std::move(gens)));
  std::vector<Elem> ti(nt), gi(ng), pr(n);
  for (std::size_t x = 0; x < nt; ++x) ti[x] = pair_index(ng, static_cast<Elem>(x), 0);
  for (std::size_t x = 0; x < ng; ++x) gi[x] = pair_index(ng, 0, static_cast<Elem>(x));
  for (std::size_t a = 0; a < n; ++a) pr[a] = static_cast<Elem>(a % ng);
  return SemidirectProduct{
      sp, GroupHom::from_images(action.space(), sp, std::move(ti)),
      GroupHom::from_images(action.actor(), sp, std::move(gi)),
      GroupHom::from_images(sp, action.actor(), std::move(pr))};
}

SemidirectProduct direct_product(GroupPtr space, GroupPtr actor, const Limits& limits) {
  return semidirect_product(trivial_action(std::move(actor), std::move(space)), limits);
}

}  // namespace xmod
