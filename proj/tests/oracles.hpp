// Independent reference computations used by the tests.  Nothing here calls
// the code under test for the quantity being checked.

#ifndef XMOD_TESTS_ORACLES_HPP_
#define XMOD_TESTS_ORACLES_HPP_

#include <cstdint>
#include <numeric>
#include <vector>

#include <gmpxx.h>

#include "xmod/lattice.hpp"

namespace oracle {

// Determinant by cofactor expansion.
inline mpz_class cofactor_det(const std::vector<std::vector<mpz_class>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  mpz_class det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<mpz_class>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<mpz_class> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(row);
    }
    const mpz_class term = m[0][c] * cofactor_det(minor);
    det += (c % 2 == 0) ? term : mpz_class(-term);
  }
  return det;
}

inline void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// gcd of all k x k minors (0 if all vanish).
inline mpz_class minor_gcd(const xmod::IntMatrix& a, std::size_t k) {
  std::vector<std::vector<std::size_t>> rs, cs;
  std::vector<std::size_t> cur;
  choose(a.rows(), k, 0, cur, rs);
  choose(a.cols(), k, 0, cur, cs);
  mpz_class g = 0;
  for (const auto& r : rs)
    for (const auto& c : cs) {
      std::vector<std::vector<mpz_class>> m(k, std::vector<mpz_class>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m[i][j] = a(r[i], c[j]);
      mpz_class d = cofactor_det(m);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  return g;
}

// Schur multiplier of a finite abelian group given by any cyclic orders:
// split into prime powers and sum min(e_i, e_j) pairs per prime.  A second
// route to the same number as the invariant-factor gcd formula.
inline std::vector<std::int64_t> schur_prime_power_orders(const std::vector<std::int64_t>& orders) {
  std::vector<std::int64_t> primes;
  for (auto n : orders)
    for (std::int64_t p = 2; p <= n; ++p)
      if (n % p == 0 && std::find(primes.begin(), primes.end(), p) == primes.end()) {
        bool prime = true;
        for (std::int64_t q = 2; q * q <= p; ++q)
          if (p % q == 0) prime = false;
        if (prime) primes.push_back(p);
      }
  std::vector<std::int64_t> out;
  for (auto p : primes) {
    std::vector<int> e;
    for (auto n : orders) {
      int k = 0;
      while (n % p == 0) {
        n /= p;
        ++k;
      }
      if (k) e.push_back(k);
    }
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        std::int64_t q = 1;
        for (int t = 0; t < std::min(e[i], e[j]); ++t) q *= p;
        out.push_back(q);
      }
  }
  return out;
}

}  // namespace oracle

#endif  // XMOD_TESTS_ORACLES_HPP_
