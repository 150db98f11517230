#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "su3st/matexp.hpp"
#include "su3st/matrix.hpp"
#include "su3st/su3.hpp"
#include "test_util.hpp"

using namespace su3st;
using namespace su3st::testing;

TEST_CASE("commutator basics") {
  std::mt19937_64 eng(3);
  const ExactMatrix a = random_exact_matrix(eng, 4);
  CHECK(commutator(a, a).is_zero());
  CHECK(commutator(ExactMatrix::identity(4), a).is_zero());
  CHECK_THROWS_AS(commutator(a, random_exact_matrix(eng, 3)), std::invalid_argument);
  // mixed-backend operands cannot even be spelled: Matrix<ExactScalar> and
  // Matrix<Complex> are distinct types, so the rejection is a compile error.
}

TEST_CASE("[J1,J2] = i J3 in the fundamental rep") {
  const auto g = gellmann();
  CHECK(commutator(g.J(1), g.J(2)) == ExactScalar::i() * g.J(3));
}

TEST_CASE("anticommutator values frozen from the generator algebra") {
  const auto g = gellmann();
  // {J1,J1} = 2 J1^2 = diag(1/2, 1/2, 0), which equals 1/3 + (1/sqrt3) J8
  ExactMatrix want(3, 3);
  want(0, 0) = ExactScalar(ExactReal::ratio(1, 2));
  want(1, 1) = ExactScalar(ExactReal::ratio(1, 2));
  CHECK(anticommutator(g.J(1), g.J(1)) == want);
  const ExactScalar inv_sqrt3(ExactReal(Rational(0), Rational(0), make_rational(1, 3), Rational(0)));
  CHECK(anticommutator(g.J(1), g.J(1)) ==
        scalar_constants<ExactScalar>::ratio(1, 3) * ExactMatrix::identity(3) +
            inv_sqrt3 * g.J(8));

  // {J3,J8} = (1/sqrt3) J3: the d^{338} partner of d^{118}
  CHECK(anticommutator(g.J(3), g.J(8)) == inv_sqrt3 * g.J(3));

  std::mt19937_64 eng(5);
  const ExactMatrix a = random_exact_matrix(eng, 3);
  CHECK(anticommutator(a, -a) == -(ExactScalar(2) * (a * a)));
}

TEST_CASE("dagger, trace, frobenius distance") {
  const auto g = gellmann();
  CHECK(g.J(5).dagger() == g.J(5));
  CHECK(g.J(8).trace().is_zero());
  std::mt19937_64 eng(7);
  const ExactMatrix a = random_exact_matrix(eng, 3);
  CHECK(frobenius_distance(a, a) == 0.0);
  CHECK_THROWS_AS(frobenius_distance(a, random_exact_matrix(eng, 4)), std::invalid_argument);
}

TEST_CASE("backend agreement: float of exact op equals op of float") {
  std::mt19937_64 eng(9);
  for (int t = 0; t < 100; ++t) {
    const ExactMatrix a = random_exact_matrix(eng, 3);
    const ExactMatrix b = random_exact_matrix(eng, 3);
    const FloatMatrix af = to_float(a), bf = to_float(b);
    const double scale = 1.0 + af.max_abs() * bf.max_abs();
    CHECK(frobenius_distance(to_float(commutator(a, b)), commutator(af, bf)) / scale < 1e-13);
    CHECK(frobenius_distance(to_float(anticommutator(a, b)), anticommutator(af, bf)) / scale <
          1e-13);
    CHECK(std::abs(commutator(a, b).trace().to_complex() - commutator(af, bf).trace()) / scale <
          1e-13);
  }
}

TEST_CASE("exact linear solve") {
  // (1 1; 1 -1) x = (3; 1) has x = (2; 1)
  ExactMatrix a(2, 2), b(2, 1);
  a(0, 0) = ExactScalar(1);
  a(0, 1) = ExactScalar(1);
  a(1, 0) = ExactScalar(1);
  a(1, 1) = ExactScalar(-1);
  b(0, 0) = ExactScalar(3);
  b(1, 0) = ExactScalar(1);
  const ExactMatrix x = solve_linear(a, b);
  CHECK(x(0, 0) == ExactScalar(2));
  CHECK(x(1, 0) == ExactScalar(1));

  ExactMatrix singular(2, 2);
  singular(0, 0) = ExactScalar(1);
  singular(1, 0) = ExactScalar(1);
  CHECK_THROWS_AS(solve_linear(singular, b), std::domain_error);

  std::mt19937_64 eng(11);
  for (int t = 0; t < 20; ++t) {
    const FloatMatrix m = random_float_matrix(eng, 5);
    const FloatMatrix rhs = random_float_matrix(eng, 5);
    const FloatMatrix sol = solve_linear(m, rhs);
    CHECK(frobenius_distance(m * sol, rhs) < 1e-10 * (1.0 + rhs.max_abs()));
    CHECK(frobenius_distance(m * inverse(m), FloatMatrix::identity(5)) < 1e-10);
  }
}

TEST_CASE("matrix_exp: zero, diagonal, inverse, commuting sums") {
  CHECK(frobenius_distance(matrix_exp(FloatMatrix(3, 3)), FloatMatrix::identity(3)) < 1e-15);

  // exp(i theta J3) = diag(e^{i theta/2}, e^{-i theta/2}, 1)
  const auto g3 = to_float(gellmann());
  for (double theta : {0.3, -1.7, 2.9}) {
    const FloatMatrix d = matrix_exp(Complex(0.0, theta) * g3.J(3));
    FloatMatrix want(3, 3);
    want(0, 0) = std::exp(Complex(0.0, theta / 2));
    want(1, 1) = std::exp(Complex(0.0, -theta / 2));
    want(2, 2) = 1.0;
    CHECK(frobenius_distance(d, want) < 1e-13);
  }

  std::mt19937_64 eng(13);
  for (int t = 0; t < 25; ++t) {
    FloatMatrix m = random_float_matrix(eng, 6);
    // scale into the contract range |M| <= 10
    double norm = m.max_abs() * 6;
    if (norm > 10.0) m = Complex(10.0 / norm) * m;
    const FloatMatrix e = matrix_exp(m);
    const FloatMatrix einv = matrix_exp(-m);
    CHECK(frobenius_distance(e * einv, FloatMatrix::identity(6)) < 1e-12 * (1.0 + e.max_abs()));

    // A = m, B = m^2/4 commute, so exp(A+B) = exp(A)exp(B)
    const FloatMatrix b = Complex(0.25) * (m * m);
    CHECK(frobenius_distance(matrix_exp(m + b), matrix_exp(m) * matrix_exp(b)) <
          1e-11 * (1.0 + matrix_exp(m + b).max_abs()));
  }
}

TEST_CASE("matrix_exp accuracy against a scalar oracle") {
  // nilpotent: exp exactly I + N
  FloatMatrix n(3, 3);
  n(0, 1) = 2.5;
  n(1, 2) = -1.25;
  n(0, 2) = 0.5;
  const FloatMatrix e = matrix_exp(n);
  FloatMatrix want = FloatMatrix::identity(3) + n;
  want(0, 2) += 0.5 * 2.5 * -1.25;  // N^2/2 contribution
  CHECK(frobenius_distance(e, want) < 1e-14);

  // rank-checkable 1x1
  FloatMatrix one(1, 1);
  one(0, 0) = 9.5;  // near the |M| = 10 contract edge
  CHECK(std::abs(matrix_exp(one)(0, 0) - std::exp(Complex(9.5))) / std::abs(std::exp(9.5)) <
        1e-12);
}
