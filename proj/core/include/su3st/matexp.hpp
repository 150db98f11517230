#pragma once

#include <array>
#include <cmath>

#include "su3st/matrix.hpp"

namespace su3st {

/// exp(M) for square float-backend matrices (double or complex<double>).
///
/// Scaling and squaring around the order-13 diagonal Padé approximant
/// (coefficients and the 5.37 scaling threshold from the standard
/// double-precision tuning of that method).  Relative error stays below
/// 1e-13 for the matrix sizes here (n ≤ 10, ‖M‖₁ ≤ 10).
///
/// The exact backend deliberately has no overload: exponentials leave
/// Q(√2,√3), so exp of an ExactMatrix is rejected at compile time.
template <class S>
Matrix<S> matrix_exp(const Matrix<S>& m) {
  static_assert(!is_exact_backend_v<S>, "matrix_exp: exact backend rejected (exp leaves the field)");
  if (!m.is_square()) throw std::invalid_argument("matrix_exp: matrix must be square");
  const int n = m.rows();

  double norm1 = 0.0;  // max column sum
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += abs_of(m(i, j));
    norm1 = std::max(norm1, s);
  }

  constexpr double theta13 = 5.371920351148152;
  int squarings = 0;
  if (norm1 > theta13) squarings = static_cast<int>(std::ceil(std::log2(norm1 / theta13)));

  Matrix<S> a = m;
  if (squarings > 0) {
    const S scale = S(1.0 / std::ldexp(1.0, squarings));
    a = scale * a;
  }

  static constexpr std::array<double, 14> b = {
      64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
      129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
      1323241920.0,        40840800.0,          960960.0,           16380.0,
      182.0,               1.0};

  const Matrix<S> eye = Matrix<S>::identity(n);
  const Matrix<S> a2 = a * a;
  const Matrix<S> a4 = a2 * a2;
  const Matrix<S> a6 = a4 * a2;

  const Matrix<S> u =
      a * (a6 * (S(b[13]) * a6 + S(b[11]) * a4 + S(b[9]) * a2) + S(b[7]) * a6 + S(b[5]) * a4 +
           S(b[3]) * a2 + S(b[1]) * eye);
  const Matrix<S> v = a6 * (S(b[12]) * a6 + S(b[10]) * a4 + S(b[8]) * a2) + S(b[6]) * a6 +
                      S(b[4]) * a4 + S(b[2]) * a2 + S(b[0]) * eye;

  Matrix<S> f = solve_linear(v - u, v + u);
  for (int k = 0; k < squarings; ++k) f = f * f;
  return f;
}

}  // namespace su3st
