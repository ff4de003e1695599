#include "xmod/certifier.hpp"

#include <numeric>
#include <sstream>

#include <json.hpp>

#include "xmod/error.hpp"
#include "xmod/group.hpp"

namespace xmod {

namespace {

std::vector<Int> column_of(const IntMatrix& m, std::size_t j) { return m.column(j); }

IntMatrix as_column(const std::vector<Int>& v) {
  IntMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

std::vector<Int> scaled(const std::vector<Int>& v, const Int& k) {
  std::vector<Int> out(v);
  for (auto& x : out) x *= k;
  return out;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

CosetTable surjection_table(const std::vector<std::int64_t>& inv, std::size_t rank,
                            const Limits& limits) {
  GroupPtr m = inv.empty() ? trivial_group() : abelian_group(inv, limits);
  std::vector<Elem> images(rank, 0);
  for (std::size_t i = 0; i < inv.size(); ++i) {
    std::vector<std::int64_t> coords(inv.size(), 0);
    coords[i] = 1;
    images[i] = abelian_element(inv, coords);
  }
  return coset_table(rank, m, std::move(images));
}

}  // namespace

IntMatrix relation_matrix_for_N_mod_TN(const SchreierBasis& basis) {
  const std::size_t s = basis.size(), r = basis.table.rank;
  IntMatrix out(s, s * r);
  for (std::size_t y = 0; y < s; ++y) {
    for (std::size_t k = 1; k <= r; ++k) {
      const Word x({static_cast<Letter>(k)});
      const std::size_t col = y * r + (k - 1);
      for (auto i : reidemeister_rewrite(x * basis.words[y] * x.inverse(), basis)) {
        if (i > 0) out(static_cast<std::size_t>(i - 1), col) += 1;
        else out(static_cast<std::size_t>(-i - 1), col) -= 1;
      }
      out(y, col) -= 1;
    }
  }
  return out;
}

IntMatrix j_matrix(const SchreierBasis& basis) {
  const std::size_t r = basis.table.rank;
  std::vector<std::vector<std::int64_t>> cols;
  for (const auto& w : basis.words) cols.push_back(exponent_vector(w, r));
  return IntMatrix::from_columns(r, cols);
}

std::string to_string(Verdict v) {
  return v == Verdict::JNotInjective ? "J_NOT_INJECTIVE" : "J_INJECTIVE";
}

bool in_column_lattice(const IntMatrix& m, const std::vector<Int>& v) {
  const IntMatrix h = hermite_rows(m.transpose()).transpose();
  if (h.cols() == 0) {
    for (const auto& x : v)
      if (sgn(x) != 0) return false;
    return true;
  }
  return solve_integer(h, as_column(v)).has_value();
}

namespace {

struct Pipeline {
  HopfReport report;
  SchreierBasis basis;
  IntMatrix kernel;  // columns: basis of ker Jmat
};

Pipeline run_pipeline(const std::vector<std::int64_t>& inv, std::size_t rank,
                      const Limits& limits) {
  if (rank == 0) throw PreconditionError("rank must be positive");
  if (rank < inv.size())
    throw PreconditionError("rank " + std::to_string(rank) + " is below the number of invariants " +
                            std::to_string(inv.size()));
  for (auto n : inv)
    if (n < 2) throw PreconditionError("invariants must be >= 2");

  Pipeline p;
  HopfReport& rep = p.report;
  rep.m_invariants = inv;
  rep.rank_T = rank;
  p.basis = schreier_generators(surjection_table(inv, rank, limits));
  rep.index = p.basis.table.index();
  rep.schreier_count = p.basis.size();
  if (rep.schreier_count != rep.index * (rank - 1) + 1)
    invariant_failed("Schreier count differs from index * (rank - 1) + 1");

  rep.relation_matrix = relation_matrix_for_N_mod_TN(p.basis);
  rep.j_matrix = j_matrix(p.basis);
  if (!(rep.j_matrix * rep.relation_matrix).is_zero())
    invariant_failed("j does not vanish on the relations");

  rep.n_mod_TN = cokernel_invariants(rep.relation_matrix);
  p.kernel = kernel_lattice(rep.j_matrix);
  rep.ker_j = subquotient_invariants(rep.relation_matrix, p.kernel);
  rep.h2_oracle = schur_multiplier_abelian(inv);
  if (!(rep.ker_j == rep.h2_oracle))
    invariant_failed("ker j = " + rep.ker_j.to_string() + " but H2(M) = " +
                     rep.h2_oracle.to_string());
  if (!(rep.n_mod_TN == FGAbelianGroup::from_cyclic_orders(rep.ker_j.torsion(), rank)))
    invariant_failed("N/[T,N] = " + rep.n_mod_TN.to_string() + " is not ker j + Z^rank");

  // Exactness at T_ab: the image of j is the kernel of Z^rank -> M.
  IntMatrix exp_kernel(rank, rank);
  for (std::size_t i = 0; i < rank; ++i) exp_kernel(i, i) = i < inv.size() ? inv[i] : 1;
  if (!(hermite_rows(rep.j_matrix.transpose()) == hermite_rows(exp_kernel.transpose())))
    invariant_failed("image of j is not the kernel of T_ab -> M");

  rep.verdict = rep.ker_j.is_trivial() ? Verdict::JInjective : Verdict::JNotInjective;
  return p;
}

std::vector<std::int64_t> terms_of(const std::vector<Int>& coords) {
  std::vector<std::int64_t> terms;
  for (std::size_t j = 0; j < coords.size(); ++j) {
    const long c = coords[j].get_si();
    for (long k = 0; k < std::labs(c); ++k)
      terms.push_back(c > 0 ? static_cast<std::int64_t>(j + 1) : -static_cast<std::int64_t>(j + 1));
  }
  return terms;
}

KernelWitness extract_witness(const Pipeline& p) {
  const HopfReport& rep = p.report;
  auto x = solve_integer(p.kernel, rep.relation_matrix);
  if (!x) invariant_failed("relations escape ker j");
  const SmithForm snf = smith_normal_form(*x);
  // u x v = d: the class of u^-1 e_i has order d_i in Z^k / im x.
  std::size_t pick = snf.d.rows();
  for (std::size_t i = 0; i < std::min(snf.d.rows(), snf.d.cols()); ++i)
    if (snf.d(i, i) > 1) pick = i;
  if (pick == snf.d.rows()) invariant_failed("ker j is nontrivial but has no torsion factor");
  IntMatrix e(snf.u.rows(), 1);
  e(pick, 0) = 1;
  auto z = solve_integer(snf.u, e);
  if (!z) invariant_failed("transform is not unimodular");

  KernelWitness w;
  w.coords = column_of(p.kernel * *z, 0);
  w.order = snf.d(pick, pick).get_si();
  w.terms = terms_of(w.coords);
  w.word = basis_product(w.terms, p.basis);
  return w;
}

// Checks that use only the word, the basis and the relation matrix.
void recheck_witness(const KernelWitness& w, const Pipeline& p) {
  const auto& table = p.basis.table;
  if (table.evaluate(w.word) != 0) invariant_failed("witness does not map to 1 in M");
  for (auto c : exponent_vector(w.word, table.rank))
    if (c != 0) invariant_failed("witness has nonzero exponent vector");
  std::vector<Int> rewritten(p.basis.size());
  for (auto i : reidemeister_rewrite(w.word, p.basis))
    rewritten[static_cast<std::size_t>(std::llabs(i) - 1)] += i > 0 ? 1 : -1;
  if (rewritten != w.coords) invariant_failed("witness does not rewrite to its coordinates");
  const IntMatrix& r = p.report.relation_matrix;
  if (in_column_lattice(r, w.coords)) invariant_failed("witness lies in the relation lattice");
  if (!in_column_lattice(r, scaled(w.coords, w.order)))
    invariant_failed("witness order does not kill it");
  for (auto q : prime_divisors(w.order))
    if (in_column_lattice(r, scaled(w.coords, w.order / q)))
      invariant_failed("witness order is not exact");
}

std::string invariants_string(const std::vector<std::int64_t>& inv) {
  std::string s = "(";
  for (std::size_t i = 0; i < inv.size(); ++i) s += (i ? "," : "") + std::to_string(inv[i]);
  return s + ")";
}

std::string certificate_text(const Certificate& c) {
  const auto& r = c.report;
  std::ostringstream out;
  out << "M = " << invariants_string(r.m_invariants) << ", free group of rank " << r.rank_T
      << "\n";
  out << "index " << r.index << ", Schreier generators " << r.schreier_count << "\n";
  out << "N/[T,N] = " << r.n_mod_TN.to_string() << "\n";
  out << "ker j = " << r.ker_j.to_string() << ", H2(M) = " << r.h2_oracle.to_string() << "\n";
  out << "verdict: " << to_string(r.verdict) << "\n";
  if (c.witness) {
    out << "witness of order " << c.witness->order << ": "
        << schreier_term_string(c.witness->terms) << "\n";
    out << "  as a word: " << to_string(c.witness->word) << "\n";
    out << "j is not a monomorphism.  In a balanced category of interest j would be one,\n"
           "so crossed modules in groups do not form a balanced category.\n";
  } else {
    out << "no witness from this M: H2(M) = 0 and j is injective\n";
  }
  return out.str();
}

}  // namespace

HopfReport hopf_pipeline(const std::vector<std::int64_t>& m_invariants, std::size_t rank,
                         const Limits& limits) {
  return run_pipeline(m_invariants, rank, limits).report;
}

Certificate certify_nonbalanced(const std::vector<std::int64_t>& m_invariants, std::size_t rank,
                                const Limits& limits) {
  Pipeline p = run_pipeline(m_invariants, rank, limits);
  Certificate c;
  if (p.report.verdict == Verdict::JNotInjective) {
    c.witness = extract_witness(p);
    recheck_witness(*c.witness, p);
    if (c.witness->order != p.report.ker_j.torsion().back())
      invariant_failed("witness does not generate the largest factor of ker j");
  }
  c.report = std::move(p.report);
  c.basis = std::move(p.basis);
  c.text = certificate_text(c);
  return c;
}

std::string schreier_term_string(const std::vector<std::int64_t>& terms) {
  if (terms.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    const auto n = static_cast<std::int64_t>(j - i) * (terms[i] > 0 ? 1 : -1);
    if (!s.empty()) s += ' ';
    s += "y" + std::to_string(std::llabs(terms[i]));
    if (n != 1) s += "^" + std::to_string(n);
    i = j;
  }
  return s;
}

std::string certificate_json(const Certificate& c, int indent) {
  const auto& r = c.report;
  auto group = [](const FGAbelianGroup& g) {
    return nlohmann::json{{"rank", g.rank()}, {"torsion", g.torsion()}, {"text", g.to_string()}};
  };
  nlohmann::json j;
  j["m"] = r.m_invariants;
  j["rank"] = r.rank_T;
  j["schreier_count"] = r.schreier_count;
  j["n_mod_tn"] = group(r.n_mod_TN);
  j["ker_j"] = group(r.ker_j);
  j["h2"] = group(r.h2_oracle);
  j["verdict"] = to_string(r.verdict);
  if (c.witness) {
    std::vector<long> coords;
    for (const auto& x : c.witness->coords) coords.push_back(x.get_si());
    j["witness"] = {{"order", c.witness->order},
                    {"schreier_word", schreier_term_string(c.witness->terms)},
                    {"coords", coords},
                    {"word", to_string(c.witness->word)}};
  } else {
    j["witness"] = nullptr;
  }
  return j.dump(indent);
}

}  // namespace xmod
