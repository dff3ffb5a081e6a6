#include "slp/linalg.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace slp {

namespace {

// Elimination runs on unwrapped values: uint64 residues or mpq_class.
struct ModP {
  using T = std::uint64_t;
  std::uint64_t p;

  T load(const Scalar& s) const { return s.as_residue(); }
  Scalar store(const T& v) const { return Scalar::residue(v, p); }
  bool is_zero(const T& v) const { return v == 0; }
  T zero() const { return 0; }
  T one() const { return 1; }
  T mul(const T& a, const T& b) const { return a * b % p; }
  T neg(const T& a) const { return a == 0 ? 0 : p - a; }
  T inv(const T& a) const {
    std::uint64_t result = 1;
    std::uint64_t base = a;
    std::uint64_t e = p - 2;
    while (e != 0) {
      if (e & 1U) result = result * base % p;
      base = base * base % p;
      e >>= 1U;
    }
    return result;
  }
  // a -= c * b
  void submul(T& a, const T& c, const T& b) const {
    const T prod = c * b % p;
    a = a >= prod ? a - prod : a + p - prod;
  }
};

struct Rational {
  using T = mpq_class;

  T load(const Scalar& s) const { return s.as_rational(); }
  Scalar store(const T& v) const { return Scalar::rational(v); }
  bool is_zero(const T& v) const { return sgn(v) == 0; }
  T zero() const { return 0; }
  T one() const { return 1; }
  T mul(const T& a, const T& b) const { return a * b; }
  T neg(const T& a) const { return -a; }
  T inv(const T& a) const { return 1 / a; }
  void submul(T& a, const T& c, const T& b) const { a -= c * b; }
};

template <class F>
struct Work {
  F f;
  std::size_t rows;
  std::size_t cols;
  std::vector<typename F::T> a;

  Work(F field, const DenseMatrix& m) : f(field), rows(m.rows()), cols(m.cols()) {
    a.reserve(rows * cols);
    for (const auto& e : m.entries()) a.push_back(f.load(e));
  }

  typename F::T& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }

  void swap_rows(std::size_t i, std::size_t k) {
    for (std::size_t j = 0; j < cols; ++j) std::swap(at(i, j), at(k, j));
  }

  // Forward elimination (full = true also clears above pivots and normalizes).
  // Returns pivot columns; `sign_flips` counts row swaps.
  std::vector<std::size_t> eliminate(bool full, std::size_t* sign_flips = nullptr) {
    std::vector<std::size_t> pivots;
    std::size_t prow = 0;
    for (std::size_t c = 0; c < cols && prow < rows; ++c) {
      std::size_t sel = prow;
      while (sel < rows && f.is_zero(at(sel, c))) ++sel;
      if (sel == rows) continue;
      if (sel != prow) {
        swap_rows(sel, prow);
        if (sign_flips != nullptr) ++*sign_flips;
      }
      if (full) {
        const auto inv = f.inv(at(prow, c));
        for (std::size_t j = c; j < cols; ++j) at(prow, j) = f.mul(at(prow, j), inv);
      }
      const auto pinv = full ? f.one() : f.inv(at(prow, c));
      for (std::size_t i = full ? 0 : prow + 1; i < rows; ++i) {
        if (i == prow || f.is_zero(at(i, c))) continue;
        const auto factor = f.mul(at(i, c), pinv);
        for (std::size_t j = c; j < cols; ++j) f.submul(at(i, j), factor, at(prow, j));
      }
      pivots.push_back(c);
      ++prow;
    }
    return pivots;
  }

  DenseMatrix to_matrix(const FieldSpec& field) const {
    std::vector<Scalar> out;
    out.reserve(a.size());
    for (const auto& v : a) out.push_back(f.store(v));
    return DenseMatrix(field, rows, cols, std::move(out));
  }
};

template <class Fn>
decltype(auto) dispatch(const FieldSpec& field, Fn&& fn) {
  if (field.is_prime()) return fn(ModP{field.characteristic()});
  return fn(Rational{});
}

}  // namespace

DenseMatrix::DenseMatrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field)) {}

DenseMatrix::DenseMatrix(const FieldSpec& field, std::size_t rows, std::size_t cols,
                         std::vector<Scalar> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("matrix entry count does not match shape");
  }
  for (const auto& e : entries_) {
    if (!(e.field() == field_)) throw FieldMismatch("matrix entry outside " + field_.to_string());
  }
}

DenseMatrix DenseMatrix::identity(const FieldSpec& field, std::size_t n) {
  DenseMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

DenseMatrix DenseMatrix::from_ints(const FieldSpec& field, const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Scalar>> conv;
  for (const auto& r : rows) {
    auto& row = conv.emplace_back();
    for (long v : r) row.push_back(Scalar::from_int(field, v));
  }
  return from_rows(field, conv);
}

DenseMatrix DenseMatrix::from_rows(const FieldSpec& field, const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  std::vector<Scalar> entries;
  entries.reserve(rows.size() * ncols);
  for (const auto& r : rows) {
    if (r.size() != ncols) throw std::invalid_argument("ragged matrix rows");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return DenseMatrix(field, rows.size(), ncols, std::move(entries));
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

DenseMatrix DenseMatrix::submatrix(std::size_t row0, std::size_t col0, std::size_t nrows,
                                   std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) throw std::out_of_range("submatrix out of range");
  DenseMatrix s(field_, nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) s(i, j) = (*this)(row0 + i, col0 + j);
  return s;
}

void DenseMatrix::set_block(std::size_t row0, std::size_t col0, const DenseMatrix& block) {
  if (row0 + block.rows() > rows_ || col0 + block.cols() > cols_) {
    throw std::out_of_range("block out of range");
  }
  if (!(block.field() == field_)) throw FieldMismatch("block field mismatch");
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) (*this)(row0 + i, col0 + j) = block(i, j);
}

std::vector<Scalar> DenseMatrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length does not match matrix columns");
  std::vector<Scalar> out(rows_, Scalar::zero(field_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!v[j].is_zero() && !(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
    }
  return out;
}

bool DenseMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (!(a.field_ == b.field_)) throw FieldMismatch("matrix product across fields");
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  DenseMatrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    }
  return c;
}

DenseMatrix operator*(const Scalar& c, const DenseMatrix& m) {
  DenseMatrix out(m);
  for (auto& e : out.entries_) e *= c;
  return out;
}

bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string DenseMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : ", [");
    for (std::size_t j = 0; j < cols_; ++j) os << (j == 0 ? "" : ", ") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

RrefResult rref_rank(const DenseMatrix& m) {
  return dispatch(m.field(), [&](auto f) {
    Work w(f, m);
    auto pivots = w.eliminate(true);
    RrefResult out{w.to_matrix(m.field()), std::move(pivots), 0};
    out.rank = out.pivot_cols.size();
    return out;
  });
}

std::size_t rank(const DenseMatrix& m) {
  if (m.empty()) return 0;
  return dispatch(m.field(), [&](auto f) {
    Work w(f, m);
    return w.eliminate(false).size();
  });
}

std::vector<std::vector<Scalar>> kernel_basis(const DenseMatrix& m) {
  const auto r = rref_rank(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), Scalar::zero(m.field()));
    v[free] = Scalar::one(m.field());
    for (std::size_t row = 0; row < r.pivot_cols.size(); ++row) {
      v[r.pivot_cols[row]] = -r.rref(row, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Scalar determinant(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  return dispatch(m.field(), [&](auto f) {
    Work w(f, m);
    std::size_t flips = 0;
    const auto pivots = w.eliminate(false, &flips);
    if (pivots.size() < m.rows()) return Scalar::zero(m.field());
    auto det = f.one();
    for (std::size_t i = 0; i < m.rows(); ++i) det = f.mul(det, w.at(i, i));
    if (flips % 2 == 1) det = f.neg(det);
    return f.store(det);
  });
}

Scalar cauchy_determinant(const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
  if (u.size() != v.size()) throw std::invalid_argument("Cauchy determinant needs equal lengths");
  if (u.empty()) return Scalar();
  const auto field = u.front().field();
  Scalar num = Scalar::one(field);
  Scalar den = Scalar::one(field);
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) {
      const auto s = u[i] + v[j];
      if (s.is_zero()) throw std::domain_error("Cauchy matrix entry has zero denominator");
      den *= s;
    }
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t k = i + 1; k < u.size(); ++k) {
      num *= (u[k] - u[i]) * (v[k] - v[i]);
    }
  return num / den;
}

DenseMatrix cauchy_matrix(const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
  const auto field = u.empty() ? (v.empty() ? FieldSpec::rationals() : v.front().field()) : u.front().field();
  DenseMatrix m(field, u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) {
      const auto s = u[i] + v[j];
      if (s.is_zero()) throw std::domain_error("Cauchy matrix entry has zero denominator");
      m(i, j) = s.inv();
    }
  return m;
}

Scalar lower_left_minor(const DenseMatrix& f, std::size_t i) {
  const auto n = f.rows();
  if (n != f.cols()) throw std::invalid_argument("lower-left minor of a non-square matrix");
  if (i < 1 || i > n) throw std::out_of_range("lower-left minor index out of range");
  const auto size = n - i + 1;
  return determinant(f.submatrix(i - 1, 0, size, size));
}

AntiTriangularResult anti_triangularize(const DenseMatrix& f) {
  const auto n = f.rows();
  if (n != f.cols()) throw std::invalid_argument("anti_triangularize needs a square matrix");
  DenseMatrix g(f);
  // Step m (0-based) pivots on row n-1-m, column m and clears that row to the
  // right using column m; columns left of m are never touched again.
  for (std::size_t m = 0; m < n; ++m) {
    const std::size_t row = n - 1 - m;
    const Scalar pivot = g(row, m);
    if (pivot.is_zero()) return {std::nullopt, row + 1};
    const Scalar pinv = pivot.inv();
    for (std::size_t c = m + 1; c < n; ++c) {
      if (g(row, c).is_zero()) continue;
      const Scalar d = g(row, c) * pinv;
      for (std::size_t r = 0; r < n; ++r) g(r, c) -= d * g(r, m);
    }
  }
  return {std::move(g), std::nullopt};
}

}  // namespace slp
