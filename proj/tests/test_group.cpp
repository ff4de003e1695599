#include "doctest.h"

#include "xmod/catalog.hpp"
#include "xmod/error.hpp"
#include "xmod/group.hpp"
#include "xmod/group_search.hpp"

using namespace xmod;

namespace {

std::vector<std::int64_t> v(std::initializer_list<std::int64_t> xs) { return xs; }

// Element of the given order, smallest index first.
Elem first_of_order(const FiniteGroup& g, std::size_t k) {
  for (Elem x = 0; x < g.order(); ++x)
    if (g.element_order(x) == k) return x;
  FAIL("no element of order " << k);
  return 0;
}

}  // namespace

TEST_SUITE("group") {

TEST_CASE("permutation closure") {
  auto s3 = group_from_permutations(3, {{2, 3, 1}, {2, 1, 3}});
  CHECK(s3->order() == 6);
  CHECK_FALSE(s3->is_abelian());
  // BFS order: identity, then the generators in input order.
  CHECK(s3->generators() == std::vector<Elem>{1, 2});
  CHECK(s3->label(0) == "()");
  CHECK(s3->label(1) == "(1 2 3)");

  auto triv = group_from_permutations(1, {});
  CHECK(triv->order() == 1);

  auto c4 = group_from_permutations(4, {{2, 3, 4, 1}});
  CHECK(c4->order() == 4);
  CHECK(c4->is_abelian());
  CHECK(c4->element_order(1) == 4);

  CHECK_THROWS_AS(group_from_permutations(3, {{1, 1, 2}}), ArgumentError);
  CHECK_THROWS_AS(group_from_permutations(6, {{2, 3, 4, 5, 6, 1}, {2, 1, 3, 4, 5, 6}},
                                          Limits{100, 1000}),
                  SizeLimitError);
}

TEST_CASE("catalog orders") {
  CHECK(symmetric_group(4)->order() == 24);
  CHECK(alternating_group(4)->order() == 12);
  CHECK(dihedral_group(4)->order() == 8);
  CHECK(quaternion_group()->order() == 8);
  // Q8 has a single involution, D4 has five.
  CHECK(order_histogram(*quaternion_group())[2] == 1);
  CHECK(order_histogram(*dihedral_group(4))[2] == 5);
}

TEST_CASE("abelian groups") {
  auto k4 = abelian_group(v({2, 2}));
  CHECK(k4->order() == 4);
  CHECK(order_histogram(*k4)[2] == 3);
  CHECK(abelian_group(v({}))->order() == 1);
  auto g = abelian_group(v({2, 4}));
  CHECK(g->order() == 8);
  std::size_t exponent = 1;
  for (Elem x = 0; x < g->order(); ++x) exponent = std::max(exponent, g->element_order(x));
  CHECK(exponent == 4);
  CHECK_THROWS_AS(abelian_group(v({1, 2})), ArgumentError);
  CHECK(abelian_coordinates(v({2, 4}), 5) == v({1, 1}));
  CHECK(abelian_element(v({2, 4}), v({1, 1})) == 5);
  CHECK(abelian_invariants(*abelian_group(v({4, 6}))) ==
        FGAbelianGroup::from_cyclic_orders(v({2, 12})));
}

TEST_CASE("homomorphisms") {
  auto c4 = cyclic_group(4), c2 = cyclic_group(2), c3 = cyclic_group(3);
  auto red = make_hom(c4, c2, {{1, 1}});
  CHECK(red.is_surjective());
  CHECK(kernel(red) == ElementSet{0, 2});

  auto s3 = symmetric_group(3);
  const Elem rot = first_of_order(*s3, 3), tr = first_of_order(*s3, 2);
  auto sign = make_hom(s3, c2, {{rot, 0}, {tr, 1}});
  // The sign map on all 36 pairs, checked independently of the library.
  for (Elem x = 0; x < 6; ++x)
    for (Elem y = 0; y < 6; ++y)
      CHECK(sign(s3->mul(x, y)) == (sign(x) + sign(y)) % 2);
  CHECK(kernel(sign).size() == 3);

  CHECK_THROWS_AS(make_hom(c2, c3, {{1, 1}}), NotHomomorphismError);

  auto id = identity_hom(s3);
  CHECK(kernel(id).size() == 1);
  CHECK(image(id).size() == 6);
  auto z = zero_hom(s3, c3);
  CHECK(kernel(z).size() == 6);
  CHECK(image(z) == ElementSet{0});
}

TEST_CASE("closures") {
  auto s3 = symmetric_group(3);
  const Elem rot = first_of_order(*s3, 3), tr = first_of_order(*s3, 2);
  const Elem rs[] = {rot}, ts[] = {tr};
  CHECK(subgroup_closure(*s3, rs).size() == 3);
  CHECK(subgroup_closure(*s3, {}) == ElementSet{0});
  CHECK(normal_closure(*s3, ts).size() == 6);
  CHECK(normal_closure(*s3, {}) == ElementSet{0});
  auto c4 = cyclic_group(4);
  const Elem two[] = {2};
  CHECK(subgroup_closure(*c4, two) == ElementSet{0, 2});
  CHECK(normal_closure(*c4, two) == subgroup_closure(*c4, two));

  const auto all = all_elements(*s3);
  CHECK(commutator_subgroup(*s3, all, all).size() == 3);
  CHECK(commutator_subgroup(*s3, all, ElementSet{0}) == ElementSet{0});
  CHECK(derived_subgroup(*abelian_group(v({2, 3}))) == ElementSet{0});
  CHECK(derived_subgroup(*alternating_group(4)).size() == 4);
}

TEST_CASE("quotients and abelianization") {
  auto c4 = cyclic_group(4);
  auto q = quotient(c4, ElementSet{0, 2});
  CHECK(q.group->order() == 2);

  auto s3 = symmetric_group(3);
  auto a3 = derived_subgroup(*s3);
  CHECK(quotient(s3, a3).group->order() == 2);

  auto same = quotient(s3, ElementSet{0});
  CHECK(same.projection.is_injective());
  CHECK(same.group->same_table(*s3));

  const Elem tr = first_of_order(*s3, 2);
  const auto t_sub = subgroup_closure(*s3, std::vector<Elem>{tr});
  CHECK_THROWS_AS(quotient(s3, t_sub), NormalityError);

  auto ab = abelianization(s3);
  CHECK(ab.invariants.torsion() == v({2}));
  for (Elem x = 0; x < 6; ++x) CHECK((ab.projection(x) == 0) == contains(a3, x));

  auto c6 = abelianization(cyclic_group(6));
  CHECK(c6.invariants.torsion() == v({6}));
  CHECK(c6.projection.is_injective());

  CHECK(abelianization(quaternion_group()).invariants.torsion() == v({2, 2}));
}

TEST_CASE("first isomorphism theorem on all homs S3 -> S3 and D4 -> C2^2") {
  for (auto [src, dst] : {std::pair{symmetric_group(3), symmetric_group(3)},
                          std::pair{dihedral_group(4), abelian_group(v({2, 2}))},
                          std::pair{quaternion_group(), dihedral_group(4)}}) {
    for (const auto& h : all_homs(src, dst)) {
      const auto k = kernel(h), im = image(h);
      CHECK(k.size() * im.size() == src->order());
      CHECK(is_normal(*src, k));
      CHECK(is_subgroup(*dst, im));
      // Induced map from the quotient onto the image is a bijection.
      auto q = quotient(src, k);
      std::vector<Elem> induced(q.group->order());
      for (std::size_t c = 0; c < induced.size(); ++c) induced[c] = h(q.representatives[c]);
      auto sorted = induced;
      std::sort(sorted.begin(), sorted.end());
      CHECK(sorted == im);
      CHECK_NOTHROW(GroupHom::from_images(q.group, dst, induced));
    }
  }
}

TEST_CASE("semidirect products") {
  auto c2 = cyclic_group(2), c3 = cyclic_group(3);
  auto inv = GroupAction::from_table(c2, c3, {0, 1, 2, 0, 2, 1});
  auto sp = semidirect_product(inv);
  CHECK(sp.group->order() == 6);
  CHECK_FALSE(sp.group->is_abelian());
  CHECK(order_histogram(*sp.group) == order_histogram(*symmetric_group(3)));
  CHECK(find_isomorphism(sp.group, symmetric_group(3)).has_value());
  CHECK(is_normal(*sp.group, image(sp.space_injection)));
  CHECK(compose(sp.projection, sp.actor_injection) == identity_hom(c2));

  // Trivial action: the table is the direct-product table, built by hand.
  auto dp = semidirect_product(trivial_action(c2, c3));
  for (Elem a = 0; a < 6; ++a)
    for (Elem b = 0; b < 6; ++b)
      CHECK(dp.group->mul(a, b) ==
            pair_index(2, (a / 2 + b / 2) % 3, (a % 2 + b % 2) % 2));

  auto over_trivial = semidirect_product(trivial_action(trivial_group(), c3));
  CHECK(over_trivial.group->same_table(*c3));
}

TEST_CASE("actions are validated") {
  auto c2 = cyclic_group(2), c3 = cyclic_group(3);
  // Not a homomorphism on C3: swap 0 and 1.
  CHECK_THROWS_AS(GroupAction::from_table(c2, c3, {0, 1, 2, 1, 0, 2}), AxiomError);
  // Order-3 automorphism does not exist, but C3 acting on C2 through a
  // non-trivial map fails the composition law.
  auto c4 = cyclic_group(4);
  CHECK_THROWS_AS(GroupAction::from_table(c3, c4, {0, 1, 2, 3, 0, 3, 2, 1, 0, 1, 2, 3}),
                  AxiomError);
  CHECK(conjugation_action(abelian_group(v({2, 2}))).is_trivial());
  CHECK_FALSE(conjugation_action(symmetric_group(3)).is_trivial());
}

TEST_CASE("idempotent kernels as d(x) x^-1") {
  auto s3 = symmetric_group(3);
  for (const auto& e : all_homs(s3, s3)) {
    if (compose(e, e) != e) continue;
    ElementSet via;
    for (Elem x = 0; x < 6; ++x) via.push_back(s3->mul(e(x), s3->inv(x)));
    std::sort(via.begin(), via.end());
    via.erase(std::unique(via.begin(), via.end()), via.end());
    CHECK(via == kernel(e));
  }
}

TEST_CASE("automorphism counts") {
  CHECK(automorphisms(symmetric_group(3)).size() == 6);
  CHECK(automorphisms(abelian_group(v({2, 2}))).size() == 6);
  CHECK(automorphisms(cyclic_group(5)).size() == 4);
  CHECK(automorphisms(quaternion_group()).size() == 24);
  CHECK(automorphisms(dihedral_group(4)).size() == 8);
  CHECK(all_homs(cyclic_group(4), cyclic_group(6)).size() == 2);
}

}  // TEST_SUITE

TEST_SUITE("group") {

TEST_CASE("small group catalog: one group per isomorphism class") {
  const auto groups = small_groups(16);
  // Number of groups of each order 1..16.
  const std::size_t expected[] = {0, 1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14};
  std::vector<std::size_t> count(17, 0);
  for (const auto& g : groups) ++count[g.group->order()];
  for (std::size_t n = 1; n <= 16; ++n) CHECK_MESSAGE(count[n] == expected[n], "order " << n);
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      if (groups[i].group->order() != groups[j].group->order()) continue;
      CHECK_MESSAGE(!find_isomorphism(groups[i].group, groups[j].group),
                    groups[i].name << " vs " << groups[j].name);
    }
}

}  // TEST_SUITE
