#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "su3st/ninerep.hpp"
#include "su3st/sixrep.hpp"
#include "test_util.hpp"

using namespace su3st;

namespace {

const ExactScalar kOne(1);

ExactScalar inv_sqrt6() {
  return ExactScalar(ExactReal(Rational(0), Rational(0), Rational(0), make_rational(1, 6)));
}

}  // namespace

TEST_CASE("triplet V and K families") {
  const auto t = triplet_vk<ExactScalar>(kOne, kOne);
  CHECK(t.V(9) == ExactMatrix::identity(3));
  for (int i = 1; i <= 8; ++i) {
    CHECK(t.K(i) == ExactScalar::i() * t.J(i));
    CHECK(t.V(i) == t.J(i));
  }
  const auto& sc = canonical_structure();
  CHECK(check_vj_closure(t.vs, t.js, sc.f).exact_zero);
  CHECK(check_jk_closure(t.js, t.ks, sc.f).exact_zero);
  CHECK(check_kk_closure(t.js, t.ks, sc.f).exact_zero);
  for (int j = 1; j <= 8; ++j) CHECK(commutator(t.V(9), t.J(j)).is_zero());
}

TEST_CASE("the 3-rep cannot host an ij-symmetric [V,K]") {
  const auto t = triplet_vk<ExactScalar>(ExactScalar(3), ExactScalar(-2));
  const auto rep = triplet_failure_check(t);
  CHECK(rep.symmetric_part.exact_zero);
  CHECK(rep.diagonal.exact_zero);
  CHECK(rep.time_component.exact_zero);
  // but the commutators themselves are not zero: the family is antisymmetric
  CHECK_FALSE(commutator(t.V(1), t.K(2)).is_zero());
}

TEST_CASE("6-rep block layout") {
  SixRepConfig<ExactScalar> cfg;
  cfg.c9_plus = ExactScalar(2);
  cfg.c9_minus = ExactScalar(5);
  const auto six = build_six(cfg);
  const auto g3 = gellmann();
  const ExactScalar i = ExactScalar::i();
  for (int k = 1; k <= 8; ++k) {
    CHECK(six.J(k).block(0, 0, 3, 3) == g3.J(k));
    CHECK(six.J(k).block(3, 3, 3, 3) == g3.J(k));
    CHECK(six.K(k).block(0, 0, 3, 3) == i * g3.J(k));
    CHECK(six.K(k).block(3, 3, 3, 3) == -(i * g3.J(k)));
    CHECK(six.J(k).block(0, 3, 3, 3).is_zero());
    CHECK(six.V(k).block(0, 0, 3, 3).is_zero());
    CHECK(six.V(k).block(3, 3, 3, 3).is_zero());
    CHECK(six.V(k).block(0, 3, 3, 3) == g3.J(k));  // c_plus = 1
  }
  CHECK(six.V(9).block(0, 3, 3, 3) == ExactScalar(2) * ExactMatrix::identity(3));
  CHECK(six.V(9).block(3, 0, 3, 3) == ExactScalar(5) * ExactMatrix::identity(3));

  const auto& sc = canonical_structure();
  CHECK(check_commutator_closure(six.js, sc.f).exact_zero);
  CHECK(check_jk_closure(six.js, six.ks, sc.f).exact_zero);
  CHECK(check_kk_closure(six.js, six.ks, sc.f).exact_zero);
  CHECK(check_vj_closure(six.vs, six.js, sc.f).exact_zero);
}

TEST_CASE("branch constraint solutions") {
  const auto [plus, minus] = solve_branch_constraints<ExactScalar>(kOne);
  CHECK(plus.beta == kOne);
  CHECK(plus.c_plus == kOne);
  CHECK(plus.c9_plus == inv_sqrt6());
  CHECK(plus.c_minus.is_zero());
  CHECK(plus.c9_minus.is_zero());

  CHECK(minus.beta == ExactScalar(-1));
  CHECK(minus.c_minus == kOne);
  CHECK(minus.c9_minus == -inv_sqrt6());
  CHECK(minus.c_plus.is_zero());
  CHECK(minus.c9_plus.is_zero());

  CHECK_THROWS_WITH_AS(solve_branch_constraints<ExactScalar>(ExactScalar(0)),
                       doctest::Contains("nonzero alpha"), std::invalid_argument);

  // alpha = -1 flips the time components only
  const auto [plus_m, minus_m] = solve_branch_constraints<ExactScalar>(ExactScalar(-1));
  CHECK(plus_m.c9_plus == -plus.c9_plus);
  CHECK(plus_m.c_plus == plus.c_plus);
  CHECK(minus_m.c9_minus == -minus.c9_minus);
}

TEST_CASE("delta mismatch: two routes, zero on solutions, nonzero off them") {
  SixRepConfig<ExactScalar> generic;
  generic.c9_plus = ExactScalar(ExactReal::ratio(2, 3));
  generic.c9_minus = ExactScalar(7);
  generic.beta = ExactScalar(ExactReal::ratio(1, 5));
  CHECK(delta_mismatch(generic).route_difference.exact_zero);

  const auto [plus, minus] = solve_branch_constraints<ExactScalar>(kOne);
  for (const auto& cfg : {plus, minus}) {
    const auto dm = delta_mismatch(cfg);
    CHECK(dm.route_difference.exact_zero);
    CHECK(dm.all_zero());
  }

  SixRepConfig<ExactScalar> degenerate;
  degenerate.c_plus = ExactScalar(0);
  degenerate.c_minus = ExactScalar(0);
  degenerate.beta = ExactScalar(4);
  CHECK(delta_mismatch(degenerate).all_zero());

  // c+ = c- = 1, c9 = 0, alpha = beta = 1 violates the constraints:
  // Delta^{11} = -1/3 I in the upper block, +1/3 I + 2 d^{11k}J^k below
  SixRepConfig<ExactScalar> violating;
  const auto dm = delta_mismatch(violating);
  CHECK(dm.route_difference.exact_zero);
  CHECK_FALSE(dm.all_zero());
  const ExactMatrix& d11 = dm.at(1, 1);
  CHECK(d11.block(0, 3, 3, 3) ==
        ExactScalar(ExactReal::ratio(-1, 3)) * ExactMatrix::identity(3));
  const auto g3 = gellmann();
  const ExactScalar two_inv_sqrt3(
      ExactReal(Rational(0), Rational(0), make_rational(2, 3), Rational(0)));
  CHECK(d11.block(3, 0, 3, 3) ==
        ExactScalar(ExactReal::ratio(1, 3)) * ExactMatrix::identity(3) +
            two_inv_sqrt3 * g3.J(8));
}

TEST_CASE("[V,K] is ij-symmetric for every config; Delta = 0 controls closure") {
  // the off-diagonal blocks of [V^i,K^j] are anticommutators, so the ij
  // symmetry is structural: it holds on and off the constraint surface
  SixRepConfig<ExactScalar> violating;
  SixRepConfig<ExactScalar> generic;
  generic.c9_plus = ExactScalar(3);
  generic.beta = ExactScalar(7);
  for (const auto& cfg : {violating, generic}) {
    const auto six = build_six(cfg);
    for (int i = 1; i <= 8; ++i)
      for (int j = 1; j <= 8; ++j)
        CHECK(commutator(six.V(i), six.K(j)) == commutator(six.V(j), six.K(i)));
  }
  // hermitian and traceless J's persist in the 6-rep and the antitriplet
  CHECK(check_hermitian_traceless(build_six(generic).js).exact_zero);
  CHECK(check_hermitian_traceless(antitriplet().js).exact_zero);
}

TEST_CASE("momentum matrices commute and sit in one block") {
  for (Branch b : {Branch::Plus, Branch::Minus}) {
    const auto p = momentum_matrices<ExactScalar>(b, kOne);
    CHECK(check_pp_commute(p).exact_zero);
    CHECK(check_momentum_block_pattern(p).exact_zero);
  }
  const auto pp = momentum_matrices<ExactScalar>(Branch::Plus, kOne);
  CHECK(pp.P(9).block(0, 3, 3, 3) == inv_sqrt6() * ExactMatrix::identity(3));
  const auto pm = momentum_matrices<ExactScalar>(Branch::Minus, kOne);
  CHECK(pm.P(9).block(3, 0, 3, 3) == -inv_sqrt6() * ExactMatrix::identity(3));
}

TEST_CASE("the full commutation-relation set, both branches") {
  const auto& sc = canonical_structure();
  for (Branch b : {Branch::Plus, Branch::Minus}) {
    const auto p = momentum_matrices<ExactScalar>(b, kOne);
    const auto six = six_rep<ExactScalar>(b);
    CHECK(check_pk_relation(p, six.ks, sc.d, kOne, branch_sign(b)).exact_zero);
    CHECK(check_p9k_relation(p, six.ks, kOne).exact_zero);
    CHECK(check_vj_closure(p.ps, six.js, sc.f).exact_zero);
    CHECK(check_pp_commute(p).exact_zero);
    CHECK(check_abelian_ideal(p, six).exact_zero);
    CHECK(check_block_preservation(p, six).exact_zero);
    // the branch fixes the d sign
    CHECK_FALSE(check_pk_relation(p, six.ks, sc.d, kOne, -branch_sign(b)).exact_zero);
  }
}

TEST_CASE("relation-level independence of the free scale") {
  const auto& sc = canonical_structure();
  const std::array<std::pair<long, long>, 3> sweep{{{1, 2}, {2, 1}, {-1, 1}}};
  for (const auto& [num, den] : sweep) {
    const ExactScalar c(ExactReal::ratio(num, den));
    const auto p = momentum_matrices<ExactScalar>(Branch::Plus, kOne, c);
    const auto six = six_rep<ExactScalar>(Branch::Plus);
    CHECK(check_pk_relation(p, six.ks, sc.d, kOne, +1).exact_zero);
    CHECK(check_p9k_relation(p, six.ks, kOne).exact_zero);
    CHECK(check_pp_commute(p).exact_zero);
  }
}

TEST_CASE("span fits solve the membership system and reject outsiders") {
  const auto p = momentum_matrices<ExactScalar>(Branch::Plus, kOne);
  const auto six = six_rep<ExactScalar>(Branch::Plus);

  const auto fit = momentum_span_fit(p, commutator(p.P(1), six.K(1)));
  CHECK(fit.reconstruction.exact_zero);
  // [P1, K1] = -i(sqrt(2/3) P9 + d^{11k} P^k): the P9 coefficient is -i sqrt(2/3)
  const ExactScalar want(ExactReal(0),
                         -(ExactReal::sqrt6() * ExactReal::ratio(1, 3)));
  CHECK(fit.coeff[8] == want);

  // J6^1 itself is not in the momentum span (it lives in the diagonal blocks)
  const auto bad = momentum_span_fit(p, six.J(1));
  CHECK_FALSE(bad.reconstruction.exact_zero);

  // a lower-left seed pushes [P, X] outside the upper-right block
  ExactMatrix outsider(6, 6);
  outsider(3, 0) = ExactScalar(1);
  CHECK_THROWS_WITH_AS(extract_adjoint_action(p, outsider, "probe"),
                       doctest::Contains("not in momentum span"), std::domain_error);
}
