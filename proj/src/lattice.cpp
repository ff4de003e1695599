#include "xmod/lattice.hpp"

#include <istream>
#include <sstream>
#include <utility>

#include "xmod/error.hpp"

namespace xmod {

namespace {

thread_local bool g_used_bignum = false;

struct Overflow {};

// Arithmetic shims so the reduction can run on int64 (checked) or mpz.
inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t quot(std::int64_t a, std::int64_t b) {
  if (b == -1) return sub(0, a);
  return a / b;
}
inline bool less_abs(std::int64_t a, std::int64_t b) {
  // Compare |a| < |b| without negating INT64_MIN.
  const std::uint64_t ua = a < 0 ? 0 - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
  const std::uint64_t ub = b < 0 ? 0 - static_cast<std::uint64_t>(b) : static_cast<std::uint64_t>(b);
  return ua < ub;
}
inline bool is_zero(std::int64_t a) { return a == 0; }
inline bool is_neg(std::int64_t a) { return a < 0; }

inline Int add(const Int& a, const Int& b) { return a + b; }
inline Int sub(const Int& a, const Int& b) { return a - b; }
inline Int mul(const Int& a, const Int& b) { return a * b; }
inline Int quot(const Int& a, const Int& b) { return a / b; }  // truncating
inline bool less_abs(const Int& a, const Int& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }
inline bool is_zero(const Int& a) { return sgn(a) == 0; }
inline bool is_neg(const Int& a) { return sgn(a) < 0; }

template <class N>
struct Dense {
  std::size_t rows = 0, cols = 0;
  std::vector<N> a;
  N& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const N& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(at(i, j), at(k, j));
  }
  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(at(i, j), at(i, k));
  }
  // row i += q * row k
  void add_row(std::size_t i, std::size_t k, const N& q) {
    for (std::size_t j = 0; j < cols; ++j)
      if (!is_zero(at(k, j))) at(i, j) = add(at(i, j), mul(q, at(k, j)));
  }
  // col j += q * col k
  void add_col(std::size_t j, std::size_t k, const N& q) {
    for (std::size_t i = 0; i < rows; ++i)
      if (!is_zero(at(i, k))) at(i, j) = add(at(i, j), mul(q, at(i, k)));
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols; ++j) at(i, j) = sub(N(0), at(i, j));
  }
};

template <class N>
Dense<N> identity_dense(std::size_t n) {
  Dense<N> m{n, n, std::vector<N>(n * n, N(0))};
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = N(1);
  return m;
}

template <class N>
std::size_t snf_core(Dense<N>& a, Dense<N>& u, Dense<N>& v) {
  const std::size_t m = a.rows, n = a.cols;
  std::size_t t = 0;
  for (; t < m && t < n; ++t) {
    for (;;) {
      // Pivot: least nonzero |entry| in the trailing block, row-major ties.
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (!is_zero(a.at(i, j)) && (pi == m || less_abs(a.at(i, j), a.at(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m) return t;
      a.swap_rows(t, pi);
      u.swap_rows(t, pi);
      a.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (is_zero(a.at(i, t))) continue;
        const N q = sub(N(0), quot(a.at(i, t), a.at(t, t)));
        a.add_row(i, t, q);
        u.add_row(i, t, q);
        if (!is_zero(a.at(i, t))) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (is_zero(a.at(t, j))) continue;
        const N q = sub(N(0), quot(a.at(t, j), a.at(t, t)));
        a.add_col(j, t, q);
        v.add_col(j, t, q);
        if (!is_zero(a.at(t, j))) clean = false;
      }
      if (!clean) continue;  // a smaller remainder appeared; re-pivot

      // Divisibility: fold a row with a non-multiple into row t.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          const N& x = a.at(i, j);
          if (!is_zero(x) && !is_zero(sub(x, mul(quot(x, a.at(t, t)), a.at(t, t))))) {
            bad = i;
            break;
          }
        }
      if (bad == m) break;
      a.add_row(t, bad, N(1));
      u.add_row(t, bad, N(1));
    }
    if (is_neg(a.at(t, t))) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  return t;
}

template <class N>
Dense<N> to_dense(const IntMatrix& m);

template <>
Dense<std::int64_t> to_dense<std::int64_t>(const IntMatrix& m) {
  Dense<std::int64_t> d{m.rows(), m.cols(), std::vector<std::int64_t>(m.rows() * m.cols())};
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).fits_slong_p()) throw Overflow{};
      d.at(i, j) = m(i, j).get_si();
    }
  return d;
}

template <>
Dense<Int> to_dense<Int>(const IntMatrix& m) {
  Dense<Int> d{m.rows(), m.cols(), std::vector<Int>(m.rows() * m.cols())};
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d.at(i, j) = m(i, j);
  return d;
}

template <class N>
IntMatrix from_dense(const Dense<N>& d) {
  IntMatrix m(d.rows, d.cols);
  for (std::size_t i = 0; i < d.rows; ++i)
    for (std::size_t j = 0; j < d.cols; ++j) {
      if constexpr (std::is_same_v<N, Int>)
        m(i, j) = d.at(i, j);
      else
        m(i, j) = static_cast<long>(d.at(i, j));
    }
  return m;
}

template <class N>
SmithForm run_snf(const IntMatrix& in) {
  Dense<N> a = to_dense<N>(in);
  Dense<N> u = identity_dense<N>(in.rows());
  Dense<N> v = identity_dense<N>(in.cols());
  const std::size_t r = snf_core(a, u, v);
  return SmithForm{from_dense(u), from_dense(a), from_dense(v), r};
}

std::int64_t to_i64(const Int& x) {
  if (!x.fits_slong_p()) throw ArgumentError("invariant factor does not fit in 64 bits");
  return x.get_si();
}

}  // namespace

// -- IntMatrix -------------------------------------------------------------

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows[0].size();
  IntMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw ArgumentError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(rows[i][j]);
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows,
                                  const std::vector<std::vector<std::int64_t>>& cols) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw ArgumentError("column has wrong length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = static_cast<long>(cols[j][i]);
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw ArgumentError("matrix dimensions do not match");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& x = (*this)(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += x * rhs(k, j);
    }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::column_range(std::size_t first, std::size_t last) const {
  IntMatrix out(rows_, last - first);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = first; j < last; ++j) out(i, j - first) = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_) throw ArgumentError("row counts differ");
  IntMatrix out(rows_, cols_ + rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, cols_ + j) = rhs(i, j);
  }
  return out;
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
  std::vector<Int> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && sgn((*this)(i, j)) != 0) return false;
  return true;
}

// -- Smith normal form -----------------------------------------------------

std::vector<Int> SmithForm::diagonal() const {
  std::vector<Int> out;
  for (std::size_t i = 0; i < d.rows() && i < d.cols(); ++i) out.push_back(d(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  try {
    g_used_bignum = false;
    return run_snf<std::int64_t>(a);
  } catch (const Overflow&) {
    g_used_bignum = true;
    return run_snf<Int>(a);
  }
}

bool last_snf_used_bignum() { return g_used_bignum; }

FGAbelianGroup cokernel_invariants(const IntMatrix& a) {
  const SmithForm s = smith_normal_form(a);
  std::vector<std::int64_t> torsion;
  for (std::size_t i = 0; i < s.rank; ++i) torsion.push_back(to_i64(s.d(i, i)));
  return FGAbelianGroup::from_cyclic_orders(torsion, a.rows() - s.rank);
}

IntMatrix hermite_rows(const IntMatrix& m) {
  Dense<Int> a = to_dense<Int>(m);
  std::size_t r = 0;
  for (std::size_t j = 0; j < a.cols && r < a.rows; ++j) {
    // Euclid on column j among rows r.. until one nonzero entry remains.
    for (;;) {
      std::size_t p = a.rows;
      for (std::size_t i = r; i < a.rows; ++i)
        if (!is_zero(a.at(i, j)) && (p == a.rows || less_abs(a.at(i, j), a.at(p, j)))) p = i;
      if (p == a.rows) break;
      a.swap_rows(r, p);
      bool done = true;
      for (std::size_t i = r + 1; i < a.rows; ++i) {
        if (is_zero(a.at(i, j))) continue;
        a.add_row(i, r, Int(-quot(a.at(i, j), a.at(r, j))));
        if (!is_zero(a.at(i, j))) done = false;
      }
      if (done) break;
    }
    if (is_zero(a.at(r, j))) continue;
    if (is_neg(a.at(r, j))) a.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a.at(i, j).get_mpz_t(), a.at(r, j).get_mpz_t());
      if (!is_zero(q)) a.add_row(i, r, Int(-q));
    }
    ++r;
  }
  IntMatrix out(r, a.cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) out(i, j) = a.at(i, j);
  return out;
}

IntMatrix kernel_lattice(const IntMatrix& a) {
  const SmithForm s = smith_normal_form(a);
  const IntMatrix basis = s.v.column_range(s.rank, a.cols());
  IntMatrix h = hermite_rows(basis.transpose()).transpose();
  if (h.cols() != basis.cols()) invariant_failed("kernel basis lost rank");
  if (!(a * h).is_zero()) invariant_failed("kernel basis is not annihilated");
  return h;
}

std::optional<IntMatrix> solve_integer(const IntMatrix& k, const IntMatrix& r) {
  if (k.rows() != r.rows()) throw ArgumentError("row counts differ");
  const SmithForm s = smith_normal_form(k);
  if (s.rank != k.cols()) throw ArgumentError("columns are not independent");
  // u k v = d, so k x = r  <=>  d y = u r with x = v y.
  const IntMatrix ur = s.u * r;
  IntMatrix y(k.cols(), r.cols());
  for (std::size_t j = 0; j < r.cols(); ++j) {
    for (std::size_t i = 0; i < k.rows(); ++i) {
      if (i < s.rank) {
        if (!mpz_divisible_p(ur(i, j).get_mpz_t(), s.d(i, i).get_mpz_t())) return std::nullopt;
        y(i, j) = ur(i, j) / s.d(i, i);
      } else if (sgn(ur(i, j)) != 0) {
        return std::nullopt;
      }
    }
  }
  IntMatrix x = s.v * y;
  if (!(k * x == r)) invariant_failed("integer solve does not reproduce the right side");
  return x;
}

FGAbelianGroup subquotient_invariants(const IntMatrix& relations, const IntMatrix& sub_basis) {
  if (relations.cols() == 0) return FGAbelianGroup::from_cyclic_orders({}, sub_basis.cols());
  auto x = solve_integer(sub_basis, relations);
  if (!x) throw PreconditionError("relations do not lie in the span of the subgroup basis");
  return cokernel_invariants(*x);
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw ArgumentError("determinant needs a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Dense<Int> a = to_dense<Int>(m);
  Int sign = 1, prev = 1;
  // Fraction-free Bareiss elimination.
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a.at(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a.at(p, k)) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

IntMatrix parse_matrix(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::pair<std::size_t, std::string>> tokens;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.emplace_back(lineno, tok);
  }
  auto number = [](const std::pair<std::size_t, std::string>& t) {
    Int x;
    if (x.set_str(t.second, 10) != 0) throw ParseError(t.first, "not an integer: " + t.second);
    return x;
  };
  if (tokens.size() < 2) throw ParseError(lineno, "missing 'rows cols' header");
  const Int r = number(tokens[0]), c = number(tokens[1]);
  if (sgn(r) < 0 || sgn(c) < 0 || !r.fits_uint_p() || !c.fits_uint_p())
    throw ParseError(tokens[0].first, "bad matrix dimensions");
  IntMatrix m(r.get_ui(), c.get_ui());
  const std::size_t need = m.rows() * m.cols();
  if (tokens.size() - 2 != need)
    throw ParseError(tokens.back().first, "expected " + std::to_string(need) + " entries, got " +
                                              std::to_string(tokens.size() - 2));
  for (std::size_t k = 0; k < need; ++k) m(k / m.cols(), k % m.cols()) = number(tokens[k + 2]);
  return m;
}

IntMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j).get_str();
    out << '\n';
  }
  return out.str();
}

}  // namespace xmod
