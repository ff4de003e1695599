#include "xmod/catalog.hpp"

#include "xmod/error.hpp"

namespace xmod {

namespace {

std::vector<std::size_t> cycle_perm(std::size_t degree, std::vector<std::size_t> cyc) {
  std::vector<std::size_t> p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = i + 1;
  for (std::size_t i = 0; i < cyc.size(); ++i) p[cyc[i] - 1] = cyc[(i + 1) % cyc.size()];
  return p;
}

}  // namespace

GroupPtr symmetric_group(std::size_t n, const Limits& limits) {
  if (n == 0) throw ArgumentError("degree must be positive");
  if (n == 1) return group_from_permutations(1, {}, limits);
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i + 1;
  if (n == 2) return group_from_permutations(2, {cycle_perm(2, {1, 2})}, limits);
  return group_from_permutations(n, {cycle_perm(n, all), cycle_perm(n, {1, 2})}, limits);
}

GroupPtr alternating_group(std::size_t n, const Limits& limits) {
  if (n == 0) throw ArgumentError("degree must be positive");
  std::vector<std::vector<std::size_t>> gens;
  for (std::size_t k = 3; k <= n; ++k) gens.push_back(cycle_perm(n, {1, 2, k}));
  return group_from_permutations(n, gens, limits);
}

GroupPtr dihedral_group(std::size_t n, const Limits& limits) {
  if (n < 3) throw ArgumentError("dihedral group needs n >= 3");
  std::vector<std::size_t> rot(n), refl(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n + 1;
    refl[i] = (n - i) % n + 1;
  }
  return group_from_permutations(n, {rot, refl}, limits);
}

GroupPtr quaternion_group() {
  // Left regular representation: i = (1 2 3 4)(5 6 7 8), j = (1 5 3 7)(2 8 4 6).
  return group_from_permutations(8, {{2, 3, 4, 1, 6, 7, 8, 5}, {5, 8, 7, 6, 3, 2, 1, 4}});
}

GroupPtr metacyclic_group(std::size_t n, std::size_t m, std::size_t r) {
  std::size_t rm = 1;
  for (std::size_t i = 0; i < m; ++i) rm = rm * r % n;
  if (rm != 1 % n) throw ArgumentError("r^m must be 1 mod n");
  std::vector<Elem> table(n * m * n * m);
  // (x, i)(y, j) = (x + r^i y, i + j), element index x * m + i.
  std::vector<std::size_t> rpow(m, 1);
  for (std::size_t i = 1; i < m; ++i) rpow[i] = rpow[i - 1] * r % n;
  const std::size_t order = n * m;
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      const std::size_t x = a / m, i = a % m, y = b / m, j = b % m;
      table[a * order + b] = static_cast<Elem>(((x + rpow[i] * y) % n) * m + (i + j) % m);
    }
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(order, std::move(table)));
}

GroupPtr dicyclic_group(std::size_t n) {
  if (n < 1) throw ArgumentError("dicyclic group needs n >= 1");
  // a^i b^j, index i * 2 + j, i mod 2n.
  const std::size_t k = 2 * n, order = 2 * k;
  std::vector<Elem> table(order * order);
  for (std::size_t p = 0; p < order; ++p)
    for (std::size_t q = 0; q < order; ++q) {
      const std::size_t i = p / 2, j = p % 2, s = q / 2, t = q % 2;
      // b^j a^s = a^((-1)^j s) b^j, and b^2 = a^n.
      std::size_t e = (j ? (k - s) % k : s);
      std::size_t bj = j + t;
      std::size_t ai = (i + e) % k;
      if (bj == 2) {
        ai = (ai + n) % k;
        bj = 0;
      }
      table[p * order + q] = static_cast<Elem>(ai * 2 + bj);
    }
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(order, std::move(table)));
}

GroupPtr pauli_group() {
  // i^k X^a Z^b, index k * 4 + a * 2 + b; Z X = -X Z.
  std::vector<Elem> table(256);
  for (std::size_t p = 0; p < 16; ++p)
    for (std::size_t q = 0; q < 16; ++q) {
      const std::size_t k1 = p / 4, a1 = p / 2 % 2, b1 = p % 2;
      const std::size_t k2 = q / 4, a2 = q / 2 % 2, b2 = q % 2;
      const std::size_t k = (k1 + k2 + 2 * b1 * a2) % 4;
      table[p * 16 + q] = static_cast<Elem>(k * 4 + (a1 ^ a2) * 2 + (b1 ^ b2));
    }
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(16, std::move(table)));
}

GroupPtr product_group(const GroupPtr& a, const GroupPtr& b) {
  return direct_product(a, b).group;
}

std::vector<NamedGroup> small_groups(std::size_t max_order) {
  if (max_order > 16) throw ArgumentError("small group list stops at order 16");
  auto ab = [](std::vector<std::int64_t> f) { return abelian_group(f); };
  std::vector<NamedGroup> all = {
      {"1", trivial_group()},
      {"C2", ab({2})},
      {"C3", ab({3})},
      {"C4", ab({4})},
      {"C2^2", ab({2, 2})},
      {"C5", ab({5})},
      {"C6", ab({6})},
      {"S3", symmetric_group(3)},
      {"C7", ab({7})},
      {"C8", ab({8})},
      {"C2xC4", ab({2, 4})},
      {"C2^3", ab({2, 2, 2})},
      {"D4", dihedral_group(4)},
      {"Q8", quaternion_group()},
      {"C9", ab({9})},
      {"C3^2", ab({3, 3})},
      {"C10", ab({10})},
      {"D5", dihedral_group(5)},
      {"C11", ab({11})},
      {"C12", ab({12})},
      {"C2xC6", ab({2, 6})},
      {"A4", alternating_group(4)},
      {"D6", dihedral_group(6)},
      {"Dic3", dicyclic_group(3)},
      {"C13", ab({13})},
      {"C14", ab({14})},
      {"D7", dihedral_group(7)},
      {"C15", ab({15})},
      {"C16", ab({16})},
      {"C2xC8", ab({2, 8})},
      {"C4^2", ab({4, 4})},
      {"C2^2xC4", ab({2, 2, 4})},
      {"C2^4", ab({2, 2, 2, 2})},
      {"D8", dihedral_group(8)},
      {"SD16", metacyclic_group(8, 2, 3)},
      {"M16", metacyclic_group(8, 2, 5)},
      {"Q16", dicyclic_group(4)},
      {"C4:C4", metacyclic_group(4, 4, 3)},
      {"C2xD4", product_group(ab({2}), dihedral_group(4))},
      {"C2xQ8", product_group(ab({2}), quaternion_group())},
      {"C4oD4", pauli_group()},
      {"C2^2:C4", semidirect_product(GroupAction::from_table(ab({4}), ab({2, 2}),
                                                             {0, 1, 2, 3, 0, 2, 1, 3,
                                                              0, 1, 2, 3, 0, 2, 1, 3}))
                      .group},
  };
  std::vector<NamedGroup> out;
  for (auto& g : all)
    if (g.group->order() <= max_order) out.push_back(std::move(g));
  return out;
}

std::vector<NamedXMod> xmod_catalog() {
  auto c2 = cyclic_group(2), c4 = cyclic_group(4), s3 = symmetric_group(3);
  auto k4 = abelian_group(std::vector<std::int64_t>{2, 2});
  auto a4 = alternating_group(4);
  auto centre = [](const GroupPtr& g) {
    ElementSet z;
    for (std::size_t x = 0; x < g->order(); ++x) {
      bool central = true;
      for (std::size_t y = 0; y < g->order() && central; ++y)
        central = g->mul(static_cast<Elem>(x), static_cast<Elem>(y)) ==
                  g->mul(static_cast<Elem>(y), static_cast<Elem>(x));
      if (central) z.push_back(static_cast<Elem>(x));
    }
    return z;
  };
  auto q8 = quaternion_group(), d4 = dihedral_group(4);
  return {
      {"(C2,C2,id)", identity_xmod(c2)},
      {"(C4,C4,id)", identity_xmod(c4)},
      {"(S3,S3,id)", identity_xmod(s3)},
      {"(1,S3,0)", trivial_top_xmod(s3)},
      {"(1,C4,0)", trivial_top_xmod(c4)},
      {"(C2,1,0)", point_xmod(c2)},
      {"(C2^2,1,0)", point_xmod(k4)},
      {"(A3,S3,incl)", normal_inclusion_xmod(s3, derived_subgroup(*s3))},
      {"(V4,A4,incl)", normal_inclusion_xmod(a4, derived_subgroup(*a4))},
      {"(Q8,Q8/Z,proj)", central_quotient_xmod(q8, centre(q8))},
      {"(D4,D4/Z,proj)", central_quotient_xmod(d4, centre(d4))},
      {"(C2,C2,0)", CrossedModule::make(zero_hom(c2, c2), trivial_action(c2, c2))},
  };
}

}  // namespace xmod
