#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "su3st/invariants.hpp"
#include "su3st/ninerep.hpp"
#include "test_util.hpp"

using namespace su3st;
using namespace su3st::testing;

TEST_CASE("zero parameters give the identity") {
  TransformParams p;
  CHECK(frobenius_distance(lorentz9(p), RealMatrix::identity(9)) < 1e-14);
  CHECK(frobenius_distance(poincare10(p), RealMatrix::identity(10)) < 1e-14);
}

TEST_CASE("first-order expansion of a small boost") {
  const double eps = 1e-4;
  std::array<double, 8> phi{};
  phi[0] = eps;
  const RealMatrix d = lorentz9(TransformParams::boost(phi, Branch::Plus));
  const auto k9 = k9_generators<Complex>(Branch::Plus);
  double worst = 0.0;
  for (int r = 0; r < 9; ++r)
    for (int c = 0; c < 9; ++c) {
      const double lin = (r == c ? 1.0 : 0.0) + eps * (Complex(0, 1) * k9[0](r, c)).real();
      worst = std::max(worst, std::abs(d(r, c) - lin));
    }
  CHECK(worst < 5e-8);  // the O(eps^2) remainder
}

TEST_CASE("rotations fix the time axis") {
  std::mt19937_64 eng(17);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int t = 0; t < 25; ++t) {
    std::array<double, 8> theta{};
    for (double& v : theta) v = u(eng);
    const RealMatrix r = lorentz9(TransformParams::rotation(theta));
    const NineVector e9 = NineVector::unit(9);
    const NineVector re9 = apply(r, e9);
    CHECK((re9 - e9).norm() < 1e-12);
    // orthogonality
    CHECK(frobenius_distance(r.transpose() * r, RealMatrix::identity(9)) < 1e-10);
  }
}

TEST_CASE("boosts are symmetric positive definite") {
  std::mt19937_64 eng(19);
  std::uniform_real_distribution<double> u(-0.9, 0.9);
  for (int t = 0; t < 25; ++t) {
    std::array<double, 8> phi{};
    for (double& v : phi) v = u(eng);
    const Branch b = t % 2 ? Branch::Plus : Branch::Minus;
    const RealMatrix m = lorentz9(TransformParams::boost(phi, b));
    CHECK(frobenius_distance(m, m.transpose()) < 1e-10);
    CHECK(is_positive_definite(m));
  }
}

TEST_CASE("one-parameter additivity along a boost direction") {
  std::array<double, 8> dir{0.2, -0.1, 0.05, 0.3, 0.0, -0.25, 0.15, 0.1};
  auto scaled = [&](double s) {
    std::array<double, 8> out = dir;
    for (double& v : out) v *= s;
    return out;
  };
  const RealMatrix whole = lorentz9(TransformParams::boost(scaled(1.7), Branch::Plus));
  const RealMatrix part =
      lorentz9(TransformParams::boost(scaled(1.0), Branch::Plus)) *
      lorentz9(TransformParams::boost(scaled(0.7), Branch::Plus));
  CHECK(frobenius_distance(whole, part) < 1e-10);
}

TEST_CASE("the affine device") {
  std::mt19937_64 eng(23);
  std::uniform_real_distribution<double> u(-2.0, 2.0);

  TransformParams pure;
  for (double& v : pure.a) v = u(eng);
  NineVector x;
  for (double& v : x.v) v = u(eng);
  const NineVector moved = apply(poincare10(pure), x);
  for (int mu = 1; mu <= 9; ++mu)
    CHECK(moved.comp(mu) == doctest::Approx(x.comp(mu) + pure.a[static_cast<size_t>(mu) - 1])
                                .epsilon(1e-14));

  // composition: upper block multiplies, translation column is L2 a1 + a2,
  // last row stays (0,...,0,1)
  TransformParams p1, p2;
  for (double& v : p1.theta) v = u(eng);
  for (double& v : p1.phi) v = 0.3 * u(eng);
  for (double& v : p1.a) v = u(eng);
  for (double& v : p2.theta) v = u(eng);
  for (double& v : p2.phi) v = 0.3 * u(eng);
  for (double& v : p2.a) v = u(eng);
  const RealMatrix t1 = poincare10(p1), t2 = poincare10(p2);
  const RealMatrix prod = t2 * t1;
  const RealMatrix l1 = lorentz9(p1), l2 = lorentz9(p2);
  CHECK(frobenius_distance(prod.block(0, 0, 9, 9), l2 * l1) < 1e-10);
  for (int c = 0; c < 9; ++c) CHECK(prod(9, c) == 0.0);
  CHECK(prod(9, 9) == 1.0);
  for (int r = 0; r < 9; ++r) {
    double want = p2.a[static_cast<size_t>(r)];
    for (int c = 0; c < 9; ++c) want += l2(r, c) * p1.a[static_cast<size_t>(c)];
    CHECK(std::abs(prod(r, 9) - want) < 1e-10);
  }
}

TEST_CASE("apply checks dimensions and preserves the rotation quadratic") {
  const RealMatrix bad(4, 4);
  NineVector x;
  x.comp(2) = 1.0;
  CHECK_THROWS_AS(apply(bad, x), std::invalid_argument);
  CHECK((apply(RealMatrix::identity(9), x) - x).norm() == 0.0);

  std::array<double, 8> theta{0.0, 3.141592653589793, 0.4, 0.0, -1.1, 0.0, 0.0, 2.2};
  const NineVector xr = apply(lorentz9(TransformParams::rotation(theta)), x);
  CHECK(std::abs(quad_space(xr) - quad_space(x)) < 1e-12);
}

TEST_CASE("intertwining residuals") {
  std::mt19937_64 eng(29);
  std::uniform_real_distribution<double> u(-0.35, 0.35);  // keeps |theta|,|phi| <= 1

  for (Branch b : {Branch::Plus, Branch::Minus}) {
    const GeneratorSet<Complex> six = to_float(six_rep<ExactScalar>(b));
    const GeneratorSet<Complex> ten = to_float(ten_rep<ExactScalar>(b));

    TransformParams zero;
    zero.branch = b;
    CHECK(intertwine_residual(six, zero) < 1e-13);

    for (int t = 0; t < 10; ++t) {
      TransformParams p;
      p.branch = b;
      for (double& v : p.theta) v = u(eng);
      for (double& v : p.phi) v = u(eng);
      CHECK(intertwine_residual(six, p) < 1e-9);
      CHECK(intertwine_residual(ten, p) < 1e-9);
    }
  }

  // a rep without a V family is rejected
  GeneratorSet<Complex> bare;
  bare.rep = RepLabel::Rep9;
  bare.js = j9_generators<Complex>();
  bare.ks = k9_generators<Complex>(Branch::Plus);
  TransformParams p;
  CHECK_THROWS_AS(intertwine_residual(bare, p), std::invalid_argument);

  // branch mismatch between rep and params is rejected
  const GeneratorSet<Complex> six_minus = to_float(six_rep<ExactScalar>(Branch::Minus));
  TransformParams plus_params;
  plus_params.branch = Branch::Plus;
  CHECK_THROWS_AS(intertwine_residual(six_minus, plus_params), std::invalid_argument);
}
