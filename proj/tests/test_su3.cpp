#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "su3st/su3.hpp"
#include "test_util.hpp"

using namespace su3st;

namespace {

ExactScalar rat(long num, long den = 1) { return ExactScalar(ExactReal::ratio(num, den)); }

// q/r * sqrt3
ExactScalar r3(long num, long den) {
  return ExactScalar(ExactReal(Rational(0), Rational(0), make_rational(num, den), Rational(0)));
}

}  // namespace

TEST_CASE("the eight fundamental generators, entry by entry") {
  const auto g = gellmann();
  REQUIRE(g.js.size() == 8);

  ExactMatrix j3(3, 3);
  j3(0, 0) = rat(1, 2);
  j3(1, 1) = rat(-1, 2);
  CHECK(g.J(3) == j3);

  // J8 = 1/(2 sqrt3) diag(1,1,-2), i.e. sqrt3/6 diag(1,1,-2)
  ExactMatrix j8(3, 3);
  j8(0, 0) = r3(1, 6);
  j8(1, 1) = r3(1, 6);
  j8(2, 2) = r3(-1, 3);
  CHECK(g.J(8) == j8);

  ExactMatrix j1(3, 3);
  j1(0, 1) = rat(1, 2);
  j1(1, 0) = rat(1, 2);
  CHECK(g.J(1) == j1);

  ExactMatrix j5(3, 3);
  j5(0, 2) = ExactScalar(ExactReal(0), ExactReal::ratio(-1, 2));
  j5(2, 0) = ExactScalar(ExactReal(0), ExactReal::ratio(1, 2));
  CHECK(g.J(5) == j5);

  CHECK(check_hermitian_traceless(g.js).exact_zero);
}

TEST_CASE("trace normalization tr(JiJj) = delta/2 for all 64 pairs") {
  const auto g = gellmann();
  const ExactScalar half = rat(1, 2);
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) {
      const ExactScalar t = (g.J(i) * g.J(j)).trace();
      if (i == j)
        CHECK(t == half);
      else
        CHECK(t.is_zero());
    }
}

TEST_CASE("antitriplet matrices and their closure") {
  const auto g = gellmann();
  const auto gbar = antitriplet();

  ExactMatrix want(3, 3);
  want(0, 0) = rat(-1, 2);
  want(1, 1) = rat(1, 2);
  CHECK(gbar.J(3) == want);

  for (int i = 1; i <= 8; ++i) CHECK(gbar.J(i) == -g.J(i).transpose());

  const auto sc = extract_structure(g);
  CHECK(check_commutator_closure(gbar.js, sc.f).exact_zero);
  CHECK(check_anticommutator_closure(gbar.js, sc.d, -1).exact_zero);
  // with the wrong d sign the antitriplet closure must fail
  CHECK_FALSE(check_anticommutator_closure(gbar.js, sc.d, +1).exact_zero);
}

TEST_CASE("extracted f values: frozen canonical table") {
  const auto f = extract_f(gellmann());
  CHECK(f(1, 2, 3) == ExactReal(1));
  CHECK(f(1, 4, 7) == ExactReal::ratio(1, 2));
  CHECK(f(1, 5, 6) == ExactReal::ratio(-1, 2));
  CHECK(f(2, 4, 6) == ExactReal::ratio(1, 2));
  CHECK(f(2, 5, 7) == ExactReal::ratio(1, 2));
  CHECK(f(3, 4, 5) == ExactReal::ratio(1, 2));
  CHECK(f(3, 6, 7) == ExactReal::ratio(-1, 2));
  CHECK(f(4, 5, 8) == ExactReal::sqrt3() * ExactReal::ratio(1, 2));
  CHECK(f(6, 7, 8) == ExactReal::sqrt3() * ExactReal::ratio(1, 2));
  // extended slots vanish
  for (int j = 1; j <= 9; ++j)
    for (int k = 1; k <= 9; ++k) {
      CHECK(f(9, j, k).is_zero());
      CHECK(f(j, 9, k).is_zero());
      CHECK(f(j, k, 9).is_zero());
    }
}

TEST_CASE("extracted d values: frozen canonical table") {
  const auto d = extract_d(gellmann());
  const ExactReal third_r3 = ExactReal(Rational(0), Rational(0), make_rational(1, 3), Rational(0));
  const ExactReal sixth_r3 = ExactReal(Rational(0), Rational(0), make_rational(1, 6), Rational(0));
  CHECK(d(1, 1, 8) == third_r3);
  CHECK(d(1, 4, 6) == ExactReal::ratio(1, 2));
  CHECK(d(1, 5, 7) == ExactReal::ratio(1, 2));
  CHECK(d(2, 2, 8) == third_r3);
  CHECK(d(2, 4, 7) == ExactReal::ratio(-1, 2));
  CHECK(d(2, 5, 6) == ExactReal::ratio(1, 2));
  CHECK(d(3, 3, 8) == third_r3);
  CHECK(d(3, 4, 4) == ExactReal::ratio(1, 2));
  CHECK(d(3, 5, 5) == ExactReal::ratio(1, 2));
  CHECK(d(3, 6, 6) == ExactReal::ratio(-1, 2));
  CHECK(d(3, 7, 7) == ExactReal::ratio(-1, 2));
  CHECK(d(4, 4, 8) == -sixth_r3);
  CHECK(d(5, 5, 8) == -sixth_r3);
  CHECK(d(6, 6, 8) == -sixth_r3);
  CHECK(d(7, 7, 8) == -sixth_r3);
  CHECK(d(8, 8, 8) == -third_r3);
  CHECK(d(9, 1, 1).is_zero());
}

TEST_CASE("closure validates the extraction independently") {
  const auto g = gellmann();
  const auto sc = extract_structure(g);
  CHECK(check_commutator_closure(g.js, sc.f).exact_zero);
  CHECK(check_anticommutator_closure(g.js, sc.d, +1).exact_zero);
  CHECK(verify_tensor_symmetries(sc).exact_zero);
}

TEST_CASE("the three f/d identities, exact and float") {
  const auto exact = verify_fd_identities(canonical_structure());
  CHECK(exact.jacobi.exact_zero);
  CHECK(exact.mixed.exact_zero);
  CHECK(exact.dd.exact_zero);

  const auto fl = verify_fd_identities(canonical_structure_float());
  CHECK(fl.jacobi.max <= 1e-13);
  CHECK(fl.mixed.max <= 1e-13);
  CHECK(fl.dd.max <= 1e-13);
}

TEST_CASE("extraction rejects unnormalized generators") {
  auto g = gellmann();
  for (auto& j : g.js) j = ExactScalar(2) * j;
  CHECK_THROWS_AS(extract_f(g), std::invalid_argument);
  CHECK_THROWS_AS(extract_d(g), std::invalid_argument);
}

TEST_CASE("float-backend extraction agrees with the exact tensors") {
  const auto fl = extract_structure(to_float(gellmann()));
  const auto& ex = canonical_structure();
  double worst = 0.0;
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j)
      for (int k = 1; k <= 8; ++k) {
        worst = std::max(worst, std::abs(fl.f(i, j, k) - ex.f(i, j, k).to_double()));
        worst = std::max(worst, std::abs(fl.d(i, j, k) - ex.d(i, j, k).to_double()));
      }
  CHECK(worst < 1e-14);
}
