#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "su3st/matexp.hpp"
#include "su3st/ninerep.hpp"
#include "test_util.hpp"

using namespace su3st;

namespace {

ExactScalar minus_i_sqrt23() {
  // -i sqrt(2/3) = -i sqrt6/3
  return ExactScalar(ExactReal(0), -(ExactReal::sqrt6() * ExactReal::ratio(1, 3)));
}

}  // namespace

TEST_CASE("closed-form 9-dim generators, frozen entries") {
  const auto j9 = j9_generators<ExactScalar>();
  REQUIRE(j9.size() == 8);
  // (J3)_{12} = i f^{132} = -i, (J3)_{21} = i f^{231} = +i
  CHECK(j9[2](0, 1) == -ExactScalar::i());
  CHECK(j9[2](1, 0) == ExactScalar::i());
  // time row and column vanish
  for (const auto& j : j9)
    for (int mu = 0; mu < 9; ++mu) {
      CHECK(j(8, mu).is_zero());
      CHECK(j(mu, 8).is_zero());
    }

  for (Branch b : {Branch::Plus, Branch::Minus}) {
    const auto k9 = k9_generators<ExactScalar>(b);
    CHECK(k9[7](8, 7) == minus_i_sqrt23());  // (K8)_{98}
    CHECK(k9[7](7, 8) == minus_i_sqrt23());
    // (K1)_{18} = -i (+-) d^{118} = (+-)(-i/sqrt3)
    const ExactScalar d118(ExactReal(0), -(ExactReal::sqrt3() * ExactReal::ratio(1, 3)));
    CHECK(k9[0](0, 7) == (b == Branch::Plus ? d118 : -d118));
  }
}

TEST_CASE("J9 antisymmetric purely imaginary; K9 symmetric purely imaginary") {
  const auto j9 = j9_generators<ExactScalar>();
  const auto k9 = k9_generators<ExactScalar>(Branch::Plus);
  for (int i = 0; i < 8; ++i)
    for (int mu = 0; mu < 9; ++mu)
      for (int nu = 0; nu < 9; ++nu) {
        CHECK(j9[i](mu, nu).re().is_zero());
        CHECK(j9[i](mu, nu) == -j9[i](nu, mu));
        CHECK(k9[i](mu, nu).re().is_zero());
        CHECK(k9[i](mu, nu) == k9[i](nu, mu));
      }
}

TEST_CASE("9-dim commutation relations, both branches, exact") {
  const auto& sc = canonical_structure();
  const auto j9 = j9_generators<ExactScalar>();
  for (Branch b : {Branch::Plus, Branch::Minus}) {
    const auto k9 = k9_generators<ExactScalar>(b);
    CHECK(check_commutator_closure(j9, sc.f).exact_zero);
    CHECK(check_jk_closure(j9, k9, sc.f).exact_zero);
    CHECK(check_kk_closure(j9, k9, sc.f).exact_zero);
  }
}

TEST_CASE("adjoint-action extraction reproduces the closed forms") {
  for (Branch b : {Branch::Plus, Branch::Minus})
    CHECK(check_extraction_matches_closed_form<ExactScalar>(b).exact_zero);
}

TEST_CASE("extraction spot value: J coefficients are i f") {
  const auto p = momentum_matrices<ExactScalar>(Branch::Plus, ExactScalar(1));
  const auto six = six_rep<ExactScalar>(Branch::Plus);
  const auto& sc = canonical_structure();
  const auto act = extract_adjoint_action(p, six.J(2), "J2");
  for (int mu = 1; mu <= 9; ++mu)
    for (int nu = 1; nu <= 9; ++nu)
      CHECK(act.coeff(mu - 1, nu - 1) == ExactScalar::i() * ExactScalar(sc.f(mu, 2, nu)));
}

TEST_CASE("branch exchange is d -> -d") {
  CHECK(check_branch_exchange<ExactScalar>().exact_zero);
}

TEST_CASE("the affine 10-rep: embeddings and translations") {
  const auto ten = ten_rep<ExactScalar>(Branch::Plus);
  const auto j9 = j9_generators<ExactScalar>();
  REQUIRE(ten.js.size() == 8);
  REQUIRE(ten.vs.size() == 9);
  CHECK(ten.J(4).block(0, 0, 9, 9) == j9[3]);
  for (int i = 1; i <= 8; ++i) {
    for (int c = 0; c < 10; ++c) CHECK(ten.J(i)(9, c).is_zero());
    for (int r = 0; r < 10; ++r) CHECK(ten.J(i)(r, 9).is_zero());
  }
  for (int mu = 1; mu <= 9; ++mu) {
    for (int r = 0; r < 10; ++r)
      for (int c = 0; c < 10; ++c) {
        if (r == mu - 1 && c == 9)
          CHECK(ten.V(mu)(r, c) == ExactScalar(1));
        else
          CHECK(ten.V(mu)(r, c).is_zero());
      }
  }
}

TEST_CASE("10-rep momentum relations: [P,J] and [P,P] as-is, [P,K] sign-flipped") {
  for (Branch b : {Branch::Plus, Branch::Minus}) {
    const auto rep = verify_ten_rep_momenta(ten_rep<ExactScalar>(b));
    CHECK(rep.pj.exact_zero);
    CHECK(rep.pp.exact_zero);
    CHECK(rep.pk_flipped.exact_zero);
    CHECK(rep.p9k_flipped.exact_zero);
    CHECK_FALSE(rep.pk_standard.exact_zero);
    CHECK_FALSE(rep.p9k_standard.exact_zero);
    CHECK(rep.fitted_sign(1e-12) == -1);
  }
}

TEST_CASE("exp(a_mu P10^mu) carries the translation column") {
  const auto ten = to_float(ten_rep<ExactScalar>(Branch::Plus));
  FloatMatrix gen(10, 10);
  const std::array<double, 9> a{0.5, -1.0, 2.0, 0.0, 0.25, -0.75, 1.5, 3.0, -0.125};
  for (int mu = 1; mu <= 9; ++mu) gen += Complex(a[static_cast<size_t>(mu) - 1]) * ten.V(mu);
  const FloatMatrix t = matrix_exp(gen);
  for (int r = 0; r < 9; ++r) {
    CHECK(std::abs(t(r, 9) - Complex(a[static_cast<size_t>(r)])) < 1e-14);
    for (int c = 0; c < 9; ++c)
      CHECK(std::abs(t(r, c) - (r == c ? Complex(1) : Complex(0))) < 1e-14);
  }
  CHECK(std::abs(t(9, 9) - Complex(1)) < 1e-15);
}
