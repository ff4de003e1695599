#include "doctest.h"

#include <random>

#include "xmod/catalog.hpp"
#include "xmod/crossed_module.hpp"
#include "xmod/error.hpp"
#include "xmod/kernels.hpp"

using namespace xmod;
using kernels::Exec;

namespace {

// Plain triple loop, independent of the kernel code.
std::optional<std::array<Elem, 3>> brute_associativity(const std::vector<Elem>& t, std::size_t n) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]])
          return std::array<Elem, 3>{Elem(a), Elem(b), Elem(c)};
  return std::nullopt;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("first_failure_2d agrees with the serial reference") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 50 + rng() % 400, cols = 50 + rng() % 400;
    // A sparse random failure set, sometimes empty.
    std::vector<char> bad(rows * cols, 0);
    const std::size_t k = trial % 5 == 0 ? 0 : 1 + rng() % 20;
    for (std::size_t i = 0; i < k; ++i) bad[rng() % bad.size()] = 1;
    auto ok = [&](std::size_t r, std::size_t c) { return !bad[r * cols + c]; };
    auto s = kernels::first_failure_2d(rows, cols, ok, Exec::serial);
    auto p = kernels::first_failure_2d(rows, cols, ok, Exec::parallel);
    CHECK(s == p);
    CHECK(kernels::parallel::first_failure_2d(rows, cols, ok) == s);
    CHECK(s.has_value() == (k > 0));
  }
}

TEST_CASE("associativity witness") {
  auto g = symmetric_group(5);
  const std::size_t n = g->order();
  std::vector<Elem> t(g->table().begin(), g->table().end());
  CHECK_FALSE(kernels::find_associativity_failure(t, n, Exec::serial));
  CHECK_FALSE(kernels::find_associativity_failure(t, n, Exec::parallel));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    auto u = t;
    const std::size_t r = 1 + rng() % (n - 1);
    const std::size_t c1 = 1 + rng() % (n - 1), c2 = 1 + rng() % (n - 1);
    std::swap(u[r * n + c1], u[r * n + c2]);
    auto s = kernels::find_associativity_failure(u, n, Exec::serial);
    auto p = kernels::find_associativity_failure(u, n, Exec::parallel);
    CHECK(s == p);
    CHECK(s == brute_associativity(u, n));
  }
}

TEST_CASE("hom and commuting-pair witnesses") {
  auto g = symmetric_group(4);
  auto d = dihedral_group(12);
  const std::size_t n = g->order();
  std::vector<Elem> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<Elem>(i);
  CHECK_FALSE(kernels::find_hom_failure(g->table(), n, g->table(), n, id, Exec::parallel));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    auto img = id;
    std::swap(img[1 + rng() % (n - 1)], img[1 + rng() % (n - 1)]);
    auto s = kernels::find_hom_failure(g->table(), n, g->table(), n, img, Exec::serial);
    auto p = kernels::find_hom_failure(g->table(), n, g->table(), n, img, Exec::parallel);
    CHECK(s == p);
  }
  std::vector<Elem> all(d->order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Elem>(i);
  auto s = kernels::find_noncommuting_pair(d->table(), d->order(), all, all, Exec::serial);
  auto p = kernels::find_noncommuting_pair(d->table(), d->order(), all, all, Exec::parallel);
  REQUIRE(s.has_value());
  CHECK(s == p);
  CHECK(d->mul((*s)[0], (*s)[1]) != d->mul((*s)[1], (*s)[0]));
}

TEST_CASE("filter_indices keeps order") {
  auto pred = [](std::size_t i) { return (i * 2654435761u) % 7 < 3; };
  CHECK(kernels::filter_indices(100000, pred, Exec::serial) ==
        kernels::filter_indices(100000, pred, Exec::parallel));
}

TEST_CASE("crossed module witnesses do not depend on the execution path") {
  // (S4, 1, 0) with trivial action: Peiffer fails, first pair is the
  // smallest noncommuting one.
  auto s4 = symmetric_group(4);
  auto one = trivial_group();
  auto run = [&](Exec e) -> std::vector<Elem> {
    try {
      CrossedModule::make(zero_hom(s4, one), trivial_action(one, s4), e);
    } catch (const AxiomError& err) {
      return err.witness();
    }
    return {};
  };
  auto ws = run(Exec::serial);
  CHECK(ws.size() == 2);
  CHECK(ws == run(Exec::parallel));
}

}  // TEST_SUITE
