#include "doctest.h"

#include <random>

#include "xmod/error.hpp"
#include "xmod/words.hpp"

using namespace xmod;

namespace {

std::vector<std::int64_t> v(std::initializer_list<std::int64_t> xs) { return xs; }

Word random_word(std::mt19937& rng, std::size_t rank, std::size_t len) {
  std::uniform_int_distribution<int> pick(1, static_cast<int>(rank));
  std::bernoulli_distribution neg(0.5);
  std::vector<Letter> ls;
  for (std::size_t i = 0; i < len; ++i) ls.push_back(neg(rng) ? -pick(rng) : pick(rng));
  return Word(ls);
}

CosetTable canonical_table(std::vector<std::int64_t> m_inv, std::size_t rank) {
  auto m = abelian_group(m_inv);
  std::vector<Elem> images(rank, 0);
  for (std::size_t i = 0; i < m_inv.size(); ++i) {
    std::vector<std::int64_t> unit(m_inv.size(), 0);
    unit[i] = 1;
    images[i] = abelian_element(m_inv, unit);
  }
  return coset_table(rank, m, images);
}

}  // namespace

TEST_SUITE("words") {

TEST_CASE("free reduction") {
  CHECK(free_reduce({1, -1, 2}).letters() == std::vector<Letter>{2});
  CHECK(free_reduce({}).empty());
  CHECK(free_reduce({1, 2, -2, -1}).empty());
  CHECK_THROWS_AS(free_reduce({1, 0}), ArgumentError);
  const Word w = free_reduce({3, -2, 2, 1, -1, -3, 4});
  CHECK(free_reduce(w.letters()) == w);
  CHECK(w.letters() == std::vector<Letter>{4});
}

TEST_CASE("word syntax") {
  CHECK(parse_word("abAB").letters() == std::vector<Letter>{1, 2, -1, -2});
  CHECK(to_string(parse_word("abAB")) == "abAB");
  CHECK(to_string(parse_word("aA")) == "1");
  CHECK(parse_word("1").empty());
  CHECK_THROWS_AS(parse_word("a3"), ArgumentError);
  CHECK(parse_word("ab") * parse_word("BA") == Word());
  CHECK(parse_word("ab").pow(-2) == parse_word("BABA"));
}

TEST_CASE("exponent vectors") {
  CHECK(exponent_vector(parse_word("abAb"), 2) == v({0, 2}));
  CHECK(exponent_vector(Word(), 2) == v({0, 0}));
  CHECK(exponent_vector(parse_word("abAB"), 2) == v({0, 0}));
  CHECK_THROWS_AS(exponent_vector(parse_word("c"), 2), ArgumentError);

  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Word u = random_word(rng, 3, 12), w = random_word(rng, 3, 12),
               g = random_word(rng, 3, 6);
    auto eu = exponent_vector(u, 3), ew = exponent_vector(w, 3);
    auto euw = exponent_vector(u * w, 3);
    for (int k = 0; k < 3; ++k) CHECK(euw[k] == eu[k] + ew[k]);
    CHECK(exponent_vector(g * w * g.inverse(), 3) == ew);
  }
}

TEST_CASE("coset tables") {
  auto k4 = canonical_table({2, 2}, 2);
  CHECK(k4.index() == 4);
  auto c5 = canonical_table({5}, 1);
  REQUIRE(c5.index() == 5);
  for (std::int64_t i = 0; i < 5; ++i) CHECK(c5.transversal[i] == parse_word("a").pow(i));
  auto c2 = canonical_table({2}, 2);
  CHECK(c2.index() == 2);
  // Prefix closure of the transversal.
  for (const auto& t : {k4, c5, canonical_table({2, 3, 2}, 3)}) {
    CHECK(t.transversal[0].empty());
    for (std::size_t c = 0; c < t.index(); ++c) {
      const auto& w = t.transversal[c];
      CHECK(t.evaluate(w) == c);
      for (std::size_t len = 0; len < w.length(); ++len) {
        Word prefix(std::vector<Letter>(w.letters().begin(), w.letters().begin() + len));
        CHECK(t.transversal[t.evaluate(prefix)] == prefix);
      }
    }
  }
  auto m = abelian_group(v({2, 2}));
  CHECK_THROWS_AS(coset_table(2, m, {1, 1}), NotSurjectiveError);
}

TEST_CASE("Schreier bases") {
  auto k4 = schreier_generators(canonical_table({2, 2}, 2));
  CHECK(k4.size() == 5);
  auto c7 = schreier_generators(canonical_table({7}, 1));
  REQUIRE(c7.size() == 1);
  CHECK(c7.words[0] == parse_word("aaaaaaa"));
  auto triv = schreier_generators(coset_table(2, trivial_group(), {0, 0}));
  CHECK(triv.size() == 2);
  CHECK(triv.words[0] == parse_word("a"));
  CHECK(triv.words[1] == parse_word("b"));

  for (auto [m, r] : {std::pair{v({2, 2}), 2}, std::pair{v({3}), 2}, std::pair{v({2, 4}), 3},
                      std::pair{v({6}), 1}, std::pair{v({2, 2, 2}), 3}}) {
    auto b = schreier_generators(canonical_table(m, r));
    const std::size_t idx = b.table.index();
    CHECK(b.size() == idx * (r - 1) + 1);
    for (const auto& w : b.words) CHECK(b.table.evaluate(w) == 0);
  }
}

TEST_CASE("Reidemeister rewriting") {
  auto k4 = schreier_generators(canonical_table({2, 2}, 2));
  for (std::size_t i = 0; i < k4.size(); ++i)
    CHECK(reidemeister_rewrite(k4.words[i], k4) == v({static_cast<std::int64_t>(i + 1)}));
  CHECK(reidemeister_rewrite(Word(), k4).empty());
  CHECK_THROWS_AS(reidemeister_rewrite(parse_word("a"), k4), MembershipError);

  auto c2 = schreier_generators(canonical_table({2}, 1));
  REQUIRE(c2.words[0] == parse_word("aa"));
  CHECK(reidemeister_rewrite(parse_word("aaaa"), c2) == v({1, 1}));
  CHECK(reidemeister_rewrite(parse_word("AA"), c2) == v({-1}));

  // Round trip on random elements of N.
  std::mt19937 rng(11);
  for (auto [m, r] : {std::pair{v({2, 2}), 2}, std::pair{v({2, 3}), 3}, std::pair{v({4}), 2}}) {
    auto b = schreier_generators(canonical_table(m, r));
    int tested = 0;
    while (tested < 100) {
      const Word w = random_word(rng, r, 20);
      if (b.table.evaluate(w) != 0) continue;
      ++tested;
      CHECK(basis_product(reidemeister_rewrite(w, b), b) == w);
    }
  }
}

}  // TEST_SUITE
