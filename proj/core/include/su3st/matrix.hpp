#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "su3st/exact.hpp"

namespace su3st {

using Complex = std::complex<double>;

template <class S>
inline constexpr bool is_exact_backend_v = std::is_same_v<S, ExactScalar>;

// -- scalar helpers shared by both backends -----------------------------------

inline ExactScalar conj_of(const ExactScalar& z) { return z.conj(); }
inline Complex conj_of(const Complex& z) { return std::conj(z); }
inline double conj_of(double x) { return x; }

inline double abs_of(const ExactScalar& z) { return std::abs(z.to_complex()); }
inline double abs_of(const Complex& z) { return std::abs(z); }
inline double abs_of(double x) { return std::abs(x); }

inline bool is_zero_of(const ExactScalar& z) { return z.is_zero(); }
inline bool is_zero_of(const Complex& z) { return z == Complex(0.0, 0.0); }
inline bool is_zero_of(double x) { return x == 0.0; }

inline ExactScalar inverse_of(const ExactScalar& z) { return z.inverse(); }
inline Complex inverse_of(const Complex& z) { return 1.0 / z; }
inline double inverse_of(double x) { return 1.0 / x; }

/// Backend-generic spellings of the scalars the constructions need.
template <class S>
struct scalar_constants {
  static S imag_unit() { return S(0.0, 1.0); }
  static S sqrt2() { return S(1.4142135623730950488); }
  static S sqrt3() { return S(1.7320508075688772935); }
  static S sqrt6() { return S(2.4494897427831780982); }
  static S ratio(long num, long den) {
    return S(static_cast<double>(num) / static_cast<double>(den));
  }
};

template <>
struct scalar_constants<ExactScalar> {
  static ExactScalar imag_unit() { return ExactScalar::i(); }
  static ExactScalar sqrt2() { return ExactScalar(ExactReal::sqrt2()); }
  static ExactScalar sqrt3() { return ExactScalar(ExactReal::sqrt3()); }
  static ExactScalar sqrt6() { return ExactScalar(ExactReal::sqrt6()); }
  static ExactScalar ratio(long num, long den) { return ExactScalar(ExactReal::ratio(num, den)); }
};

/// The real type paired with a complex scalar backend (tensor components,
/// structure constants).
template <class S>
struct real_of {
  using type = double;
};
template <>
struct real_of<ExactScalar> {
  using type = ExactReal;
};
template <class S>
using real_of_t = typename real_of<S>::type;

inline double real_to_double(double x) { return x; }
inline double real_to_double(const ExactReal& x) { return x.to_double(); }
inline bool real_is_zero(double x) { return x == 0.0; }
inline bool real_is_zero(const ExactReal& x) { return x.is_zero(); }

// -- dense matrix --------------------------------------------------------------

/// Dense row-major matrix over one scalar backend.  Matrices are values:
/// every operation returns a fresh matrix, so instances can be shared across
/// threads freely.  Mixing backends in one expression is a compile error,
/// which is how "mixed-backend operations are rejected" is enforced.
template <class S>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
  }

  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const S& operator()(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
  S& operator()(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    same_shape(x, y, "operator+");
    Matrix out(x.rows_, x.cols_);
    for (size_t k = 0; k < x.e_.size(); ++k) out.e_[k] = x.e_[k] + y.e_[k];
    return out;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    same_shape(x, y, "operator-");
    Matrix out(x.rows_, x.cols_);
    for (size_t k = 0; k < x.e_.size(); ++k) out.e_[k] = x.e_[k] - y.e_[k];
    return out;
  }
  Matrix operator-() const {
    Matrix out(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = -e_[k];
    return out;
  }
  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_)
      throw std::invalid_argument("Matrix::operator*: inner dimensions differ");
    Matrix out(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        const S& xik = x(i, k);
        if (is_zero_of(xik)) continue;
        for (int j = 0; j < y.cols_; ++j) out(i, j) += xik * y(k, j);
      }
    return out;
  }
  friend Matrix operator*(const S& s, const Matrix& m) {
    Matrix out(m.rows_, m.cols_);
    for (size_t k = 0; k < m.e_.size(); ++k) out.e_[k] = s * m.e_[k];
    return out;
  }

  Matrix& operator+=(const Matrix& y) { return *this = *this + y; }
  Matrix& operator-=(const Matrix& y) { return *this = *this - y; }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
    for (size_t k = 0; k < x.e_.size(); ++k)
      if (!(x.e_[k] == y.e_[k])) return false;
    return true;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  Matrix dagger() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(j, i) = conj_of((*this)(i, j));
    return out;
  }
  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  S trace() const {
    if (!is_square()) throw std::invalid_argument("Matrix::trace: not square");
    S t{};
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_zero() const {
    for (const S& v : e_)
      if (!is_zero_of(v)) return false;
    return true;
  }

  double max_abs() const {
    double m = 0.0;
    for (const S& v : e_) m = std::max(m, abs_of(v));
    return m;
  }

  /// Writes `block` with its top-left corner at (r, c).
  void set_block(int r, int c, const Matrix& block) {
    if (r + block.rows_ > rows_ || c + block.cols_ > cols_)
      throw std::invalid_argument("Matrix::set_block: block does not fit");
    for (int i = 0; i < block.rows_; ++i)
      for (int j = 0; j < block.cols_; ++j) (*this)(r + i, c + j) = block(i, j);
  }
  Matrix block(int r, int c, int nrows, int ncols) const {
    if (r + nrows > rows_ || c + ncols > cols_)
      throw std::invalid_argument("Matrix::block: out of range");
    Matrix out(nrows, ncols);
    for (int i = 0; i < nrows; ++i)
      for (int j = 0; j < ncols; ++j) out(i, j) = (*this)(r + i, c + j);
    return out;
  }

 private:
  static void same_shape(const Matrix& x, const Matrix& y, const char* op) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
      throw std::invalid_argument(std::string("Matrix::") + op + ": shape mismatch");
  }

  int rows_, cols_;
  std::vector<S> e_;
};

using ExactMatrix = Matrix<ExactScalar>;
using FloatMatrix = Matrix<Complex>;
using RealMatrix = Matrix<double>;

template <class S>
Matrix<S> commutator(const Matrix<S>& a, const Matrix<S>& b) {
  if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("commutator: operands must be square and same dimension");
  return a * b - b * a;
}

template <class S>
Matrix<S> anticommutator(const Matrix<S>& a, const Matrix<S>& b) {
  if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("anticommutator: operands must be square and same dimension");
  return a * b + b * a;
}

template <class S>
double frobenius_distance(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("frobenius_distance: shape mismatch");
  double sum = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const double m = abs_of(a(i, j) - b(i, j));
      sum += m * m;
    }
  return std::sqrt(sum);
}

/// Solves A·X = B by Gaussian elimination.  The exact backend pivots on the
/// first nonzero entry (any nonzero pivot is as good as another in a field);
/// the float backend pivots on the largest magnitude column entry.
template <class S>
Matrix<S> solve_linear(Matrix<S> a, Matrix<S> b) {
  if (!a.is_square() || a.rows() != b.rows())
    throw std::invalid_argument("solve_linear: A must be square and match B");
  const int n = a.rows();
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    if constexpr (is_exact_backend_v<S>) {
      for (int r = col; r < n; ++r)
        if (!is_zero_of(a(r, col))) {
          pivot = r;
          break;
        }
    } else {
      double best = 0.0;
      for (int r = col; r < n; ++r) {
        const double m = abs_of(a(r, col));
        if (m > best) {
          best = m;
          pivot = r;
        }
      }
    }
    if (pivot < 0) throw std::domain_error("solve_linear: singular matrix");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      for (int j = 0; j < b.cols(); ++j) std::swap(b(pivot, j), b(col, j));
    }
    const S inv = inverse_of(a(col, col));
    for (int j = col; j < n; ++j) a(col, j) = inv * a(col, j);
    for (int j = 0; j < b.cols(); ++j) b(col, j) = inv * b(col, j);
    for (int r = 0; r < n; ++r) {
      if (r == col || is_zero_of(a(r, col))) continue;
      const S factor = a(r, col);
      for (int j = col; j < n; ++j) a(r, j) -= factor * a(col, j);
      for (int j = 0; j < b.cols(); ++j) b(r, j) -= factor * b(col, j);
    }
  }
  return b;
}

template <class S>
Matrix<S> inverse(const Matrix<S>& a) {
  return solve_linear(a, Matrix<S>::identity(a.rows()));
}

// -- backend conversion ---------------------------------------------------------

inline FloatMatrix to_float(const ExactMatrix& m) {
  FloatMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_complex();
  return out;
}

inline const FloatMatrix& to_float(const FloatMatrix& m) { return m; }

}  // namespace su3st
