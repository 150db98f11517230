#pragma once

#include <string>

#include "su3st/sixrep.hpp"

namespace su3st {

/// Coefficients of a generator's adjoint action on the momentum family:
/// [P^ρ, X] = coeff(ρ,ν)·P^ν, indices 0-based in the matrix, 1-based in the
/// algebra.
template <class S>
struct AdjointAction {
  std::string source_label;
  Matrix<S> coeff;  // 9×9
};

/// Solves the nine 9-unknown systems on the branch's nonzero 3×3 blocks.
/// Rejects X whose commutators leave the momentum span (reconstruction
/// residual nonzero exactly, or above 1e-12 on the float backend).
template <class S>
AdjointAction<S> extract_adjoint_action(const MomentumSet<S>& p, const Matrix<S>& x,
                                        std::string label = {}) {
  AdjointAction<S> out{std::move(label), Matrix<S>(9, 9)};
  for (int rho = 1; rho <= 9; ++rho) {
    const SpanFit<S> fit = momentum_span_fit(p, commutator(p.P(rho), x));
    const bool ok = is_exact_backend_v<S> ? fit.reconstruction.exact_zero
                                          : fit.reconstruction.max <= 1e-12;
    if (!ok)
      throw std::domain_error("extract_adjoint_action: commutator not in momentum span (" +
                              out.source_label + ")");
    for (int nu = 1; nu <= 9; ++nu)
      out.coeff(rho - 1, nu - 1) = fit.coeff[static_cast<size_t>(nu) - 1];
  }
  return out;
}

// -- closed-form 9-dimensional generators --------------------------------------------

/// (J⁹)^i_{μν} = i f^{μiν}: purely imaginary, antisymmetric, time row and
/// column zero.
template <class S>
std::vector<Matrix<S>> j9_generators() {
  const auto& sc = canonical_structure_for<real_of_t<S>>();
  const S iunit = scalar_constants<S>::imag_unit();
  std::vector<Matrix<S>> js;
  js.reserve(8);
  for (int i = 1; i <= 8; ++i) {
    Matrix<S> m(9, 9);
    for (int mu = 1; mu <= 9; ++mu)
      for (int nu = 1; nu <= 9; ++nu) m(mu - 1, nu - 1) = iunit * S(sc.f(mu, i, nu));
    js.push_back(std::move(m));
  }
  return js;
}

/// (K⁹)^{±i}_{μν} = −i[√(2/3)(δ^i_μ δ^9_ν + δ^i_ν δ^9_μ) ± d^{μiν}]:
/// purely imaginary, symmetric; d carries the branch sign.
template <class S>
std::vector<Matrix<S>> k9_generators(Branch branch) {
  const auto& sc = canonical_structure_for<real_of_t<S>>();
  const S minus_i = -scalar_constants<S>::imag_unit();
  const S sqrt23 = scalar_constants<S>::sqrt6() * scalar_constants<S>::ratio(1, 3);
  const int sign = branch_sign(branch);
  std::vector<Matrix<S>> ks;
  ks.reserve(8);
  for (int i = 1; i <= 8; ++i) {
    Matrix<S> m(9, 9);
    for (int mu = 1; mu <= 9; ++mu)
      for (int nu = 1; nu <= 9; ++nu) {
        S val = sign > 0 ? S(sc.d(mu, i, nu)) : -S(sc.d(mu, i, nu));
        if (mu == i && nu == 9) val += sqrt23;
        if (nu == i && mu == 9) val += sqrt23;
        m(mu - 1, nu - 1) = minus_i * val;
      }
    ks.push_back(std::move(m));
  }
  return ks;
}

template <class S>
GeneratorSet<S> nine_rep(Branch branch) {
  GeneratorSet<S> g;
  g.rep = RepLabel::Rep9;
  g.branch = branch;
  g.js = j9_generators<S>();
  g.ks = k9_generators<S>(branch);
  return g;
}

/// Entrywise difference between the adjoint-action extraction from the
/// 6-rep and the closed forms; zero is the consistency claim of Step 3.
template <class S>
Residual check_extraction_matches_closed_form(Branch branch) {
  const S alpha = S(1);
  const MomentumSet<S> p = momentum_matrices<S>(branch, alpha);
  const auto cfgs = solve_branch_constraints<S>(alpha);
  const GeneratorSet<S> six = build_six(branch == Branch::Plus ? cfgs.first : cfgs.second);
  const auto j9 = j9_generators<S>();
  const auto k9 = k9_generators<S>(branch);

  Residual res;
  for (int i = 1; i <= 8; ++i) {
    res.add(extract_adjoint_action(p, six.J(i), "J" + std::to_string(i)).coeff -
            j9[static_cast<size_t>(i) - 1]);
    res.add(extract_adjoint_action(p, six.K(i), "K" + std::to_string(i)).coeff -
            k9[static_cast<size_t>(i) - 1]);
  }
  return res;
}

// -- the 10-dimensional affine rep ----------------------------------------------------

/// J and K embedded in the upper-left 9×9 block; translations P^μ = E_{μ,10}
/// (single 1 in the last column), so exp(a_μ P^μ) carries the translation
/// column (a, 1) of the affine device.
template <class S>
GeneratorSet<S> ten_rep(Branch branch) {
  GeneratorSet<S> g;
  g.rep = RepLabel::Rep10;
  g.branch = branch;
  for (const auto& m : j9_generators<S>()) {
    Matrix<S> big(10, 10);
    big.set_block(0, 0, m);
    g.js.push_back(std::move(big));
  }
  for (const auto& m : k9_generators<S>(branch)) {
    Matrix<S> big(10, 10);
    big.set_block(0, 0, m);
    g.ks.push_back(std::move(big));
  }
  for (int mu = 1; mu <= 9; ++mu) {
    Matrix<S> p(10, 10);
    p(mu - 1, 9) = S(1);
    g.vs.push_back(std::move(p));
  }
  return g;
}

/// Residuals of the momentum sector of the 10-rep against the standard
/// [P,K] relations (the sign of the 6-rep algebra) and against the globally
/// sign-flipped ones.  Exactly one of the two vanishes; the affine
/// translations pick the flipped sign, which is the answer this report
/// records for the "what about the signs" question.
template <class S>
struct TenRepMomentumReport {
  Residual pj;             // [P^μ, J^j] − i f^{μjk} P^k
  Residual pp;             // [P^μ, P^ν]
  Residual pk_standard;    // [P^i,K^j] + i(√(2/3)δ_ij P⁹ ± d^{ijk}P^k)
  Residual pk_flipped;     // [P^i,K^j] − i(√(2/3)δ_ij P⁹ ± d^{ijk}P^k)
  Residual p9k_standard;   // [P⁹,K^j] + i√(2/3) P^j
  Residual p9k_flipped;    // [P⁹,K^j] − i√(2/3) P^j

  /// +1 if the standard sign holds, −1 if the flipped sign holds, 0 if
  /// neither (never expected).
  int fitted_sign(double tol) const {
    const bool std_ok = pk_standard.max <= tol && p9k_standard.max <= tol;
    const bool flip_ok = pk_flipped.max <= tol && p9k_flipped.max <= tol;
    if (std_ok && !flip_ok) return +1;
    if (flip_ok && !std_ok) return -1;
    return 0;
  }
};

template <class S>
TenRepMomentumReport<S> verify_ten_rep_momenta(const GeneratorSet<S>& g) {
  if (g.rep != RepLabel::Rep10 || !g.has_V())
    throw std::invalid_argument("verify_ten_rep_momenta: need a ten_rep generator set");
  const auto& sc = canonical_structure_for<real_of_t<S>>();
  const S iunit = scalar_constants<S>::imag_unit();
  const S sqrt23 = scalar_constants<S>::sqrt6() * scalar_constants<S>::ratio(1, 3);
  const int bsign = branch_sign(*g.branch);

  TenRepMomentumReport<S> rep;
  for (int mu = 1; mu <= 9; ++mu) {
    for (int j = 1; j <= 8; ++j) {
      Matrix<S> rhs(10, 10);
      for (int k = 1; k <= 9; ++k) rhs += S(sc.f(mu, j, k)) * g.vs[static_cast<size_t>(k) - 1];
      rep.pj.add(commutator(g.V(mu), g.J(j)) - iunit * rhs);
    }
    for (int nu = 1; nu <= 9; ++nu) rep.pp.add(commutator(g.V(mu), g.V(nu)));
  }
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) {
      Matrix<S> rhs(10, 10);
      if (i == j) rhs += sqrt23 * g.V(9);
      for (int k = 1; k <= 8; ++k) {
        const S coef = bsign > 0 ? S(sc.d(i, j, k)) : -S(sc.d(i, j, k));
        rhs += coef * g.V(k);
      }
      const Matrix<S> comm = commutator(g.V(i), g.K(j));
      rep.pk_standard.add(comm + iunit * rhs);
      rep.pk_flipped.add(comm - iunit * rhs);
    }
  for (int j = 1; j <= 8; ++j) {
    const Matrix<S> comm = commutator(g.V(9), g.K(j));
    rep.p9k_standard.add(comm + (iunit * sqrt23) * g.V(j));
    rep.p9k_flipped.add(comm - (iunit * sqrt23) * g.V(j));
  }
  return rep;
}

/// The K⁹ families of the two branches are exchanged by d → −d: their sum
/// is twice the δ part, their difference twice the d part.
template <class S>
Residual check_branch_exchange() {
  const auto& sc = canonical_structure_for<real_of_t<S>>();
  const S minus_i = -scalar_constants<S>::imag_unit();
  const S two = S(2);
  const S sqrt23 = scalar_constants<S>::sqrt6() * scalar_constants<S>::ratio(1, 3);
  const auto kp = k9_generators<S>(Branch::Plus);
  const auto km = k9_generators<S>(Branch::Minus);

  Residual res;
  for (int i = 1; i <= 8; ++i)
    for (int mu = 1; mu <= 9; ++mu)
      for (int nu = 1; nu <= 9; ++nu) {
        S delta_part{};
        if (mu == i && nu == 9) delta_part += sqrt23;
        if (nu == i && mu == 9) delta_part += sqrt23;
        const S sum = kp[static_cast<size_t>(i) - 1](mu - 1, nu - 1) +
                      km[static_cast<size_t>(i) - 1](mu - 1, nu - 1);
        const S diff = kp[static_cast<size_t>(i) - 1](mu - 1, nu - 1) -
                       km[static_cast<size_t>(i) - 1](mu - 1, nu - 1);
        res.add(sum - two * (minus_i * delta_part));
        res.add(diff - two * (minus_i * S(sc.d(mu, i, nu))));
      }
  return res;
}

}  // namespace su3st
