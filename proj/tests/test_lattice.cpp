#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "xmod/error.hpp"
#include "xmod/lattice.hpp"

using namespace xmod;

namespace {

std::vector<std::int64_t> v(std::initializer_list<std::int64_t> xs) { return xs; }

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> e(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = e(rng);
  return m;
}

void check_snf(const IntMatrix& a) {
  const SmithForm s = smith_normal_form(a);
  CHECK(s.u * a * s.v == s.d);
  CHECK(s.d.is_diagonal());
  CHECK(abs(determinant(s.u)) == 1);
  CHECK(abs(determinant(s.v)) == 1);
  const auto diag = s.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    CHECK(sgn(diag[i]) >= 0);
    CHECK((sgn(diag[i]) != 0) == (i < s.rank));
    if (i + 1 < diag.size() && sgn(diag[i]) != 0)
      CHECK(mpz_divisible_p(diag[i + 1].get_mpz_t(), diag[i].get_mpz_t()));
  }
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("Smith normal form examples") {
  auto s = smith_normal_form(IntMatrix::from_rows({{2, 4}, {6, 8}}));
  CHECK(s.diagonal() == std::vector<Int>{2, 4});
  check_snf(IntMatrix::from_rows({{2, 4}, {6, 8}}));
  CHECK(smith_normal_form(IntMatrix::identity(3)).d == IntMatrix::identity(3));
  auto z = smith_normal_form(IntMatrix(2, 3));
  CHECK(z.d.is_zero());
  CHECK(z.rank == 0);
  auto e = smith_normal_form(IntMatrix(0, 0));
  CHECK(e.d.rows() == 0);
  check_snf(IntMatrix(0, 3));
  check_snf(IntMatrix(3, 0));
}

TEST_CASE("coefficient growth falls back to exact integers") {
  const std::int64_t big = 3037000499;  // about sqrt(2^63)
  auto a = IntMatrix::from_rows({{big * 2, big * 3 + 1}, {big * 5 + 7, big * 7 - 3}});
  a(0, 0) *= Int(1) << 40;
  check_snf(a);
  CHECK(last_snf_used_bignum());
  CHECK(smith_normal_form(IntMatrix::from_rows({{2, 4}, {6, 8}})).rank == 2);
  CHECK_FALSE(last_snf_used_bignum());
}

TEST_CASE("minor gcd oracle") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 150; ++trial) {
    std::uniform_int_distribution<int> dim(1, 4);
    const auto a = random_matrix(rng, dim(rng), dim(rng), 10);
    const auto diag = smith_normal_form(a).diagonal();
    Int prod = 1;
    for (std::size_t k = 1; k <= diag.size(); ++k) {
      prod *= diag[k - 1];
      CHECK(prod == oracle::minor_gcd(a, k));
    }
  }
}

TEST_CASE("random SNF postconditions") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> dim(0, 6);
  for (int trial = 0; trial < 200; ++trial) check_snf(random_matrix(rng, dim(rng), dim(rng), 10));
  // Low-rank inputs exercise zero rows and repeated pivots.
  for (int trial = 0; trial < 50; ++trial) {
    auto b = random_matrix(rng, 5, 2, 4), c = random_matrix(rng, 2, 5, 4);
    check_snf(b * c);
  }
}

TEST_CASE("cokernel invariants") {
  CHECK(cokernel_invariants(IntMatrix::from_rows({{2, 0}, {0, 3}})).torsion() == v({6}));
  CHECK(cokernel_invariants(IntMatrix::from_rows({{2, 0}, {0, 3}})).rank() == 0);
  auto free2 = cokernel_invariants(IntMatrix(2, 1));
  CHECK(free2.rank() == 2);
  CHECK(free2.torsion().empty());
  CHECK(cokernel_invariants(IntMatrix::identity(2)).is_trivial());
  CHECK(cokernel_invariants(IntMatrix::from_rows({{2, 0, 0}, {0, 4, 0}, {0, 0, 0}})).to_string() ==
        "Z + Z/2 + Z/4");

  // Invariance under column operations and row permutations.
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> small(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    auto a = random_matrix(rng, 4, 5, 6);
    const auto base = cokernel_invariants(a);
    auto b = a;
    for (int step = 0; step < 6; ++step) {
      const std::size_t j = rng() % 5, k = rng() % 5;
      if (j == k) continue;
      const int q = small(rng);
      for (std::size_t i = 0; i < 4; ++i) b(i, j) += q * b(i, k);
    }
    IntMatrix p(4, 5);
    const std::size_t perm[] = {2, 0, 3, 1};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 5; ++j) p(i, j) = b(perm[i], j);
    CHECK(cokernel_invariants(p) == base);
  }
}

TEST_CASE("kernel lattices") {
  CHECK(kernel_lattice(IntMatrix::from_rows({{1, 1}})) == IntMatrix::from_rows({{1}, {-1}}));
  CHECK(kernel_lattice(IntMatrix::identity(3)).cols() == 0);
  CHECK(kernel_lattice(IntMatrix::from_rows({{2, 4}})) == IntMatrix::from_rows({{2}, {-1}}));

  std::mt19937 rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    auto a = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 6, 5);
    const auto k = kernel_lattice(a);
    CHECK((a * k).is_zero());
    CHECK(k.cols() == a.cols() - smith_normal_form(a).rank);
    // Primitive: the quotient Z^n / span(k) is torsion-free.
    CHECK(cokernel_invariants(k).torsion().empty());
  }
}

TEST_CASE("subquotients") {
  CHECK(subquotient_invariants(IntMatrix::from_rows({{2}}), IntMatrix::identity(1)).torsion() ==
        v({2}));
  auto free3 = subquotient_invariants(IntMatrix(4, 0), IntMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
  CHECK(free3.rank() == 3);
  CHECK_THROWS_AS(subquotient_invariants(IntMatrix::from_rows({{1}, {0}}),
                                         IntMatrix::from_rows({{2}, {0}})),
                  PreconditionError);
  // 2Z + 0 inside Z(1,1) + Z(0,1)... relation (2,2) = 2 (1,1).
  auto g = subquotient_invariants(IntMatrix::from_rows({{2}, {2}}),
                                  IntMatrix::from_rows({{1, 0}, {1, 1}}));
  CHECK(g.to_string() == "Z + Z/2");
}

TEST_CASE("Hermite rows") {
  auto h = hermite_rows(IntMatrix::from_rows({{4, 6}, {2, 3}, {0, 5}}));
  CHECK(h == IntMatrix::from_rows({{2, 3}, {0, 5}}));
}

TEST_CASE("matrix text format") {
  auto m = parse_matrix("2 3\n1 -2 3\n4 5 6\n");
  CHECK(m == IntMatrix::from_rows({{1, -2, 3}, {4, 5, 6}}));
  CHECK(parse_matrix(format_matrix(m)) == m);
  CHECK_THROWS_AS(parse_matrix("2 2\n1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("2 x\n"), ParseError);
  try {
    parse_matrix("1 2\n\n7 q\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("determinant against cofactor expansion") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    auto a = random_matrix(rng, n, n, 9);
    std::vector<std::vector<mpz_class>> rows(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = a(i, j);
    CHECK(determinant(a) == oracle::cofactor_det(rows));
  }
}

TEST_CASE("schur multiplier of abelian groups") {
  CHECK(schur_multiplier_abelian(v({2, 2})).torsion() == v({2}));
  CHECK(schur_multiplier_abelian(v({7})).is_trivial());
  CHECK(schur_multiplier_abelian(v({2, 2, 2})).torsion() == v({2, 2, 2}));
  CHECK_THROWS_AS(schur_multiplier_abelian(v({1, 2})), ArgumentError);
  for (auto m : {v({2, 4}), v({2, 2, 4}), v({3, 6}), v({2, 6, 6})}) {
    auto orders = oracle::schur_prime_power_orders(m);
    CHECK(schur_multiplier_abelian(m) == FGAbelianGroup::from_cyclic_orders(orders));
  }
}

}  // TEST_SUITE
