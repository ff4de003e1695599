// Hopf's formula over a free group: for f : F_r ->> M with M finite abelian
// and N = ker f, the map j : N/[T,N] -> T_ab has kernel H2(M).  A nonzero
// kernel element shows that crossed modules do not form a balanced category.

#ifndef XMOD_CERTIFIER_HPP_
#define XMOD_CERTIFIER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xmod/abelian.hpp"
#include "xmod/lattice.hpp"
#include "xmod/limits.hpp"
#include "xmod/words.hpp"

namespace xmod {

/// Rows are Schreier generators y.  Column y * rank + (k - 1) is the
/// abelianized rewrite of x_k y x_k^-1 minus e_y, so coker is N/[T,N].
IntMatrix relation_matrix_for_N_mod_TN(const SchreierBasis& basis);

/// rank x |basis| matrix of exponent vectors of the basis words.
IntMatrix j_matrix(const SchreierBasis& basis);

enum class Verdict { JInjective, JNotInjective };
std::string to_string(Verdict v);

struct HopfReport {
  std::vector<std::int64_t> m_invariants;
  std::size_t rank_T = 0;
  std::size_t index = 0;
  std::size_t schreier_count = 0;
  IntMatrix relation_matrix;
  FGAbelianGroup n_mod_TN;
  IntMatrix j_matrix;
  FGAbelianGroup ker_j;
  FGAbelianGroup h2_oracle;
  Verdict verdict = Verdict::JInjective;
};

/// x_i -> i-th generator of Z/n1 + ... + Z/nk, surplus generators -> 0.
/// Throws PreconditionError for rank < k, rank 0 or an invariant below 2;
/// a failed internal check is an InvariantViolation.
HopfReport hopf_pipeline(const std::vector<std::int64_t>& m_invariants, std::size_t rank,
                         const Limits& limits = {});

struct KernelWitness {
  std::vector<Int> coords;          // over the Schreier basis
  std::vector<std::int64_t> terms;  // signed 1-based basis indices
  Word word;                        // the element of N in the free group
  std::int64_t order = 0;           // order in N/[T,N]
};

struct Certificate {
  HopfReport report;
  SchreierBasis basis;
  std::optional<KernelWitness> witness;
  std::string text;
};

/// Runs the pipeline and, when ker j is nonzero, extracts a generator of
/// its largest cyclic factor.  The witness is re-checked independently of
/// the pipeline: its word lies in N, has zero exponent vector, rewrites to
/// its own coordinates, and has exactly the stated order modulo the
/// relation lattice.
Certificate certify_nonbalanced(const std::vector<std::int64_t>& m_invariants,
                                std::size_t rank, const Limits& limits = {});

/// Whether v (a column) lies in the column span of m.
bool in_column_lattice(const IntMatrix& m, const std::vector<Int>& v);

/// "y1^2 y3^-1": runs of equal indices collapse into powers.
std::string schreier_term_string(const std::vector<std::int64_t>& terms);

/// Stable keys: m, rank, schreier_count, n_mod_tn, ker_j, h2, verdict,
/// witness (null when there is none).
std::string certificate_json(const Certificate& c, int indent = 2);

}  // namespace xmod

#endif  // XMOD_CERTIFIER_HPP_
