#include "doctest.h"

#include <json.hpp>

#include "oracles.hpp"
#include "xmod/certifier.hpp"
#include "xmod/error.hpp"
#include "xmod/group.hpp"

using namespace xmod;

namespace {

using V = std::vector<std::int64_t>;

FGAbelianGroup h2_oracle(const V& m) {
  return FGAbelianGroup::from_cyclic_orders(oracle::schur_prime_power_orders(m));
}

SchreierBasis basis_for(const V& inv, std::size_t rank) {
  std::vector<Elem> images(rank, 0);
  for (std::size_t i = 0; i < inv.size(); ++i) {
    V c(inv.size(), 0);
    c[i] = 1;
    images[i] = abelian_element(inv, c);
  }
  return schreier_generators(coset_table(rank, inv.empty() ? trivial_group() : abelian_group(inv),
                                         images));
}

}  // namespace

TEST_SUITE("certifier") {

TEST_CASE("relation and j matrices for cyclic M") {
  // N = <x1^n> is central in Z: the single relation column is zero.
  auto b = basis_for({5}, 1);
  REQUIRE(b.size() == 1);
  CHECK(to_string(b.words[0]) == "aaaaa");
  auto r = relation_matrix_for_N_mod_TN(b);
  CHECK(r.rows() == 1);
  CHECK(r.cols() == 1);
  CHECK(r.is_zero());
  CHECK(cokernel_invariants(r) == FGAbelianGroup::from_cyclic_orders({}, 1));
  auto j = j_matrix(b);
  CHECK(j.rows() == 1);
  CHECK(j(0, 0) == 5);
}

TEST_CASE("trivial M gives the abelianization of T") {
  auto b = basis_for({}, 2);
  CHECK(b.size() == 2);
  auto r = relation_matrix_for_N_mod_TN(b);
  CHECK(r.is_zero());
  CHECK(cokernel_invariants(r) == FGAbelianGroup::from_cyclic_orders({}, 2));
  CHECK(j_matrix(b) == IntMatrix::identity(2));
  auto rep = hopf_pipeline({}, 2);
  CHECK(rep.ker_j.is_trivial());
  CHECK(rep.verdict == Verdict::JInjective);
}

TEST_CASE("Klein four, rank 2") {
  auto b = basis_for({2, 2}, 2);
  auto r = relation_matrix_for_N_mod_TN(b);
  CHECK(r.rows() == 5);
  CHECK(r.cols() == 10);
  CHECK(j_matrix(b).rows() == 2);
  CHECK(j_matrix(b).cols() == 5);

  auto rep = hopf_pipeline({2, 2}, 2);
  CHECK(rep.index == 4);
  CHECK(rep.schreier_count == 5);
  CHECK(rep.n_mod_TN.rank() == 2);
  CHECK(rep.n_mod_TN.torsion() == V{2});
  CHECK(rep.ker_j.rank() == 0);
  CHECK(rep.ker_j.torsion() == V{2});
  CHECK(rep.ker_j == h2_oracle({2, 2}));
  CHECK(rep.verdict == Verdict::JNotInjective);
  CHECK((rep.j_matrix * rep.relation_matrix).is_zero());
}

TEST_CASE("small cases against the prime-power oracle") {
  CHECK(hopf_pipeline({5}, 1).verdict == Verdict::JInjective);
  CHECK(hopf_pipeline({5}, 1).ker_j.is_trivial());
  CHECK(hopf_pipeline({2, 4}, 2).ker_j.torsion() == V{2});
  CHECK(hopf_pipeline({3, 3}, 2).ker_j.torsion() == V{3});
  CHECK(hopf_pipeline({2, 2, 2}, 3).ker_j.torsion() == V{2, 2, 2});
  for (const V& m : {V{2}, V{6}, V{2, 2}, V{2, 6}, V{4, 4}, V{2, 2, 2}, V{3, 6}, V{2, 2, 4}}) {
    auto rep = hopf_pipeline(m, m.size());
    INFO(rep.ker_j.to_string());
    CHECK(rep.ker_j == h2_oracle(m));
    CHECK(rep.n_mod_TN.rank() == m.size());
    std::size_t order = 1;
    for (auto n : m) order *= static_cast<std::size_t>(n);
    CHECK(rep.schreier_count == order * (m.size() - 1) + 1);
  }
}

TEST_CASE("surplus generators do not change ker j") {
  auto a = hopf_pipeline({2, 2}, 2);
  auto b = hopf_pipeline({2, 2}, 3);
  CHECK(a.ker_j == b.ker_j);
  CHECK(b.schreier_count == 4 * 2 + 1);
  CHECK(b.n_mod_TN.rank() == 3);
  CHECK(hopf_pipeline({3}, 1).ker_j == hopf_pipeline({3}, 2).ker_j);
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(hopf_pipeline({2, 2}, 1), PreconditionError);
  CHECK_THROWS_AS(hopf_pipeline({2}, 0), PreconditionError);
  CHECK_THROWS_AS(hopf_pipeline({1, 2}, 2), PreconditionError);
}

TEST_CASE("certificate witnesses") {
  {
    auto c = certify_nonbalanced({2, 2}, 2);
    REQUIRE(c.witness.has_value());
    const auto& w = *c.witness;
    CHECK(w.order == 2);
    // Re-check here with the basis the certificate carries.
    CHECK(c.basis.table.evaluate(w.word) == 0);
    CHECK(exponent_vector(w.word, 2) == V{0, 0});
    CHECK_FALSE(in_column_lattice(c.report.relation_matrix, w.coords));
    std::vector<Int> twice = w.coords;
    for (auto& x : twice) x *= 2;
    CHECK(in_column_lattice(c.report.relation_matrix, twice));
    CHECK(basis_product(w.terms, c.basis) == w.word);
    CHECK(c.text.find("J_NOT_INJECTIVE") != std::string::npos);
  }
  {
    auto c = certify_nonbalanced({3, 3}, 2);
    REQUIRE(c.witness.has_value());
    CHECK(c.witness->order == 3);
  }
  {
    auto c = certify_nonbalanced({6}, 1);
    CHECK_FALSE(c.witness.has_value());
    CHECK(c.report.verdict == Verdict::JInjective);
    CHECK(c.text.find("no witness from this M") != std::string::npos);
  }
}

TEST_CASE("certificate json keys") {
  auto j = nlohmann::json::parse(certificate_json(certify_nonbalanced({2, 2}, 2)));
  for (const char* k : {"m", "rank", "schreier_count", "n_mod_tn", "ker_j", "h2", "verdict",
                        "witness"})
    CHECK(j.contains(k));
  CHECK(j["schreier_count"] == 5);
  CHECK(j["verdict"] == "J_NOT_INJECTIVE");
  CHECK(j["ker_j"]["torsion"] == nlohmann::json::array({2}));
  CHECK(j["n_mod_tn"]["rank"] == 2);
  CHECK(j["witness"]["order"] == 2);
  auto none = nlohmann::json::parse(certificate_json(certify_nonbalanced({5}, 1)));
  CHECK(none["witness"].is_null());
}

TEST_CASE("schreier term strings") {
  CHECK(schreier_term_string({}) == "1");
  CHECK(schreier_term_string({1, 1, -3}) == "y1^2 y3^-1");
}

}  // TEST_SUITE
