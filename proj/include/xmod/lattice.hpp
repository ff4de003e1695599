// Exact integer matrices: Smith normal form, integer kernels, cokernels and
// subquotients of free abelian groups.
//
// Entries are GMP integers.  The reduction first runs on checked 64-bit
// arithmetic and restarts on GMP integers if any operation would overflow,
// so results never depend on which path finished.

#ifndef XMOD_LATTICE_HPP_
#define XMOD_LATTICE_HPP_

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "xmod/abelian.hpp"

namespace xmod {

using Int = mpz_class;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  /// Matrix whose columns are the given vectors, all of length `rows`.
  static IntMatrix from_columns(std::size_t rows,
                                const std::vector<std::vector<std::int64_t>>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix transpose() const;
  IntMatrix column_range(std::size_t first, std::size_t last) const;
  /// Columns of *this followed by columns of rhs.
  IntMatrix hconcat(const IntMatrix& rhs) const;
  std::vector<Int> column(std::size_t j) const;
  bool is_zero() const;
  bool is_diagonal() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

struct SmithForm {
  IntMatrix u, d, v;  // u * a * v == d
  std::size_t rank = 0;
  std::vector<Int> diagonal() const;
};

/// Pivot is the nonzero entry of least absolute value, ties broken in
/// row-major order.  d is diagonal with nonnegative d1 | d2 | ...
SmithForm smith_normal_form(const IntMatrix& a);

/// Whether the last call on this thread needed the GMP fallback.
bool last_snf_used_bignum();

/// coker(a : Z^cols -> Z^rows).
FGAbelianGroup cokernel_invariants(const IntMatrix& a);

/// Columns form a Z-basis of {x : a x = 0}, in Hermite form: the basis
/// vectors read as rows are echelon with positive pivots and reduced entries
/// above each pivot.
IntMatrix kernel_lattice(const IntMatrix& a);

/// Integer solution x of k x = r when it exists; k must have independent
/// columns.
std::optional<IntMatrix> solve_integer(const IntMatrix& k, const IntMatrix& r);

/// The subgroup spanned by the columns of sub_basis modulo the span of the
/// columns of relations.  Throws PreconditionError if some relation is not
/// an integer combination of the sub_basis columns.
FGAbelianGroup subquotient_invariants(const IntMatrix& relations, const IntMatrix& sub_basis);

/// Row-style Hermite normal form of the rows of m (zero rows dropped).
IntMatrix hermite_rows(const IntMatrix& m);

Int determinant(const IntMatrix& a);

/// "rows cols" header then row-major entries.
IntMatrix parse_matrix(std::istream& in);
IntMatrix parse_matrix(const std::string& text);
std::string format_matrix(const IntMatrix& m);

}  // namespace xmod

#endif  // XMOD_LATTICE_HPP_
