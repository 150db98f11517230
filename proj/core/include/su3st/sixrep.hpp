#pragma once

#include <array>
#include <utility>

#include "su3st/su3.hpp"

namespace su3st {

/// Scale constants of the 6-rep vector family and the α, β coefficients of
/// its [V,K] decomposition.  A branch solution zeroes the Δ mismatch; see
/// solve_branch_constraints.
template <class S>
struct SixRepConfig {
  S c_plus = S(1);
  S c9_plus = S(0);
  S c_minus = S(1);
  S c9_minus = S(0);
  S alpha = S(1);
  S beta = S(1);
};

/// Nine commuting 6×6 momentum matrices.  Branch + lives in the upper-right
/// 3×3 block, branch − in the lower-left.
template <class S>
struct MomentumSet {
  Branch branch = Branch::Plus;
  std::vector<Matrix<S>> ps;

  const Matrix<S>& P(int mu) const { return ps.at(static_cast<size_t>(mu) - 1); }
  int block_row() const { return branch == Branch::Plus ? 0 : 3; }
  int block_col() const { return branch == Branch::Plus ? 3 : 0; }
};

// -- Step 1: triplet-level vector and boost matrices ---------------------------------

/// V^μ = {c·J^i, c⁹·1} (nine matrices, μ = 9 the identity block) together
/// with K^i = +i·J^i on the fundamental rep.
template <class S>
GeneratorSet<S> triplet_vk(const S& c, const S& c9) {
  GeneratorSet<S> g = fundamental<S>();
  const S iunit = scalar_constants<S>::imag_unit();
  for (const auto& j : g.js) {
    g.ks.push_back(iunit * j);
    g.vs.push_back(c * j);
  }
  g.vs.push_back(c9 * Matrix<S>::identity(3));
  return g;
}

struct TripletFailureReport {
  Residual symmetric_part;   // [V^i,K^j] + [V^j,K^i] over all pairs
  Residual diagonal;         // [V^i,K^i]
  Residual time_component;   // [V^9,K^j]
};

/// Demonstrates why the 3-rep cannot host an ij-symmetric [V,K]: the
/// commutator is ij-antisymmetric, so its symmetric part vanishes
/// identically.
template <class S>
TripletFailureReport triplet_failure_check(const GeneratorSet<S>& g) {
  if (!g.has_K() || !g.has_V())
    throw std::invalid_argument("triplet_failure_check: need a triplet_vk generator set");
  TripletFailureReport rep;
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) {
      const Matrix<S> sym = commutator(g.V(i), g.K(j)) + commutator(g.V(j), g.K(i));
      rep.symmetric_part.add(sym);
      if (i == j) rep.diagonal.add(commutator(g.V(i), g.K(i)));
    }
  for (int j = 1; j <= 8; ++j) rep.time_component.add(commutator(g.V(9), g.K(j)));
  return rep;
}

// -- Step 2: the 3⊕3 construction ----------------------------------------------------

/// J⁶ = diag(J, J); K⁶ = diag(+iJ, −iJ) (the opposite i-convention in the
/// two blocks is what routes [V,K] through anticommutators);
/// V⁶ off-diagonal with the two V families of the config.
template <class S>
GeneratorSet<S> build_six(const SixRepConfig<S>& cfg) {
  const GeneratorSet<S> g3 = fundamental<S>();
  const S iunit = scalar_constants<S>::imag_unit();
  const Matrix<S> eye3 = Matrix<S>::identity(3);

  GeneratorSet<S> g;
  g.rep = RepLabel::Rep6;
  for (int i = 1; i <= 8; ++i) {
    Matrix<S> j6(6, 6), k6(6, 6);
    j6.set_block(0, 0, g3.J(i));
    j6.set_block(3, 3, g3.J(i));
    k6.set_block(0, 0, iunit * g3.J(i));
    k6.set_block(3, 3, -(iunit * g3.J(i)));
    g.js.push_back(std::move(j6));
    g.ks.push_back(std::move(k6));
  }
  for (int mu = 1; mu <= 9; ++mu) {
    const Matrix<S> upper = mu <= 8 ? cfg.c_plus * g3.J(mu) : cfg.c9_plus * eye3;
    const Matrix<S> lower = mu <= 8 ? cfg.c_minus * g3.J(mu) : cfg.c9_minus * eye3;
    Matrix<S> v6(6, 6);
    v6.set_block(0, 3, upper);
    v6.set_block(3, 0, lower);
    g.vs.push_back(std::move(v6));
  }
  return g;
}

template <class S>
struct DeltaMismatch {
  std::array<Matrix<S>, 64> delta;   // closed form, row-major over (i,j)
  Residual route_difference;         // closed form vs the [V,K] residual route

  const Matrix<S>& at(int i, int j) const {
    return delta[static_cast<size_t>(i - 1) * 8 + static_cast<size_t>(j - 1)];
  }
  bool all_zero() const {
    for (const auto& m : delta)
      if (!m.is_zero()) return false;
    return true;
  }
};

/// Δ^{ij} computed two ways: the closed form in the c's, α, β, and the
/// remainder of [V^i,K^j] after subtracting its V-expansion.  Their
/// difference is returned in route_difference (identically zero).
template <class S>
DeltaMismatch<S> delta_mismatch(const SixRepConfig<S>& cfg) {
  const GeneratorSet<S> g3 = fundamental<S>();
  const GeneratorSet<S> six = build_six(cfg);
  const auto& sc = canonical_structure_for<real_of_t<S>>();
  const S iunit = scalar_constants<S>::imag_unit();
  const S third = scalar_constants<S>::ratio(1, 3);
  const S sqrt6 = scalar_constants<S>::sqrt6();
  const S sqrt23 = sqrt6 * third;  // √(2/3) = √6/3
  const Matrix<S> eye3 = Matrix<S>::identity(3);

  const S upper_c = sqrt6 * cfg.alpha * cfg.c9_plus - cfg.c_plus;
  const S lower_c = sqrt6 * cfg.alpha * cfg.c9_minus + cfg.c_minus;

  DeltaMismatch<S> out;
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) {
      Matrix<S> closed(6, 6);
      if (i == j) {
        closed.set_block(0, 3, (third * upper_c) * eye3);
        closed.set_block(3, 0, (third * lower_c) * eye3);
      }
      Matrix<S> upper_d(3, 3), lower_d(3, 3);
      for (int k = 1; k <= 8; ++k) {
        const S dijk = S(sc.d(i, j, k));
        upper_d += (dijk * (cfg.c_plus * (cfg.beta - S(1)))) * g3.J(k);
        lower_d += (dijk * (cfg.c_minus * (cfg.beta + S(1)))) * g3.J(k);
      }
      Matrix<S> dpart(6, 6);
      dpart.set_block(0, 3, upper_d);
      dpart.set_block(3, 0, lower_d);
      closed += dpart;

      // residual route: iΔ^{ij} = [V^i,K^j] + i√(2/3)α δ_ij V⁹ + i β d^{ijk} V^k
      Matrix<S> route = commutator(six.V(i), six.K(j));
      if (i == j) route += (iunit * sqrt23 * cfg.alpha) * six.V(9);
      for (int k = 1; k <= 8; ++k) route += (iunit * cfg.beta * S(sc.d(i, j, k))) * six.V(k);

      out.route_difference.add(route - iunit * closed);
      out.delta[static_cast<size_t>(i - 1) * 8 + static_cast<size_t>(j - 1)] = std::move(closed);
    }
  return out;
}

/// The two Δ = 0 solutions for nonzero α: β = +1 kills the lower family
/// (c₋ = c⁹₋ = 0, c⁹₊ = c₊/(√6α)); β = −1 kills the upper one
/// (c₊ = c⁹₊ = 0, c⁹₋ = −c₋/(√6α)).  The surviving scale defaults to 1.
template <class S>
std::pair<SixRepConfig<S>, SixRepConfig<S>> solve_branch_constraints(const S& alpha,
                                                                     const S& c_free = S(1)) {
  if (is_zero_of(alpha))
    throw std::invalid_argument(
        "solve_branch_constraints: the branch solutions exist only for nonzero alpha");
  const S inv_sqrt6_alpha = inverse_of(scalar_constants<S>::sqrt6() * alpha);

  SixRepConfig<S> plus;
  plus.beta = S(1);
  plus.c_plus = c_free;
  plus.c9_plus = c_free * inv_sqrt6_alpha;
  plus.c_minus = S(0);
  plus.c9_minus = S(0);
  plus.alpha = alpha;

  SixRepConfig<S> minus;
  minus.beta = S(0) - S(1);
  minus.c_plus = S(0);
  minus.c9_plus = S(0);
  minus.c_minus = c_free;
  minus.c9_minus = S(0) - c_free * inv_sqrt6_alpha;
  minus.alpha = alpha;

  return {plus, minus};
}

/// Momentum matrices of one branch: the surviving V family of the branch
/// solution, with all 81 pairwise commutators vanishing.
template <class S>
MomentumSet<S> momentum_matrices(Branch branch, const S& alpha, const S& c_free = S(1)) {
  const auto cfgs = solve_branch_constraints(alpha, c_free);
  const SixRepConfig<S>& cfg = branch == Branch::Plus ? cfgs.first : cfgs.second;
  MomentumSet<S> out;
  out.branch = branch;
  out.ps = build_six(cfg).vs;
  return out;
}

/// build_six at the branch solution, with the V slots holding that branch's
/// momentum family and the branch recorded.
template <class S>
GeneratorSet<S> six_rep(Branch branch, const S& alpha = S(1)) {
  const auto cfgs = solve_branch_constraints<S>(alpha);
  GeneratorSet<S> g = build_six(branch == Branch::Plus ? cfgs.first : cfgs.second);
  g.branch = branch;
  return g;
}

// -- relation checks -----------------------------------------------------------------

/// [V^μ, J^j] − i f^{μjk} V^k over μ ∈ 1..9, j ∈ 1..8 (f extended by zero).
template <class S>
Residual check_vj_closure(const std::vector<Matrix<S>>& vs, const std::vector<Matrix<S>>& js,
                          const Tensor3<real_of_t<S>>& f) {
  Residual res;
  const S iunit = scalar_constants<S>::imag_unit();
  const int n = vs.front().rows();
  for (int mu = 1; mu <= 9; ++mu)
    for (int j = 1; j <= 8; ++j) {
      Matrix<S> rhs(n, n);
      for (int k = 1; k <= 9; ++k)
        rhs += S(f(mu, j, k)) * vs[static_cast<size_t>(k) - 1];
      res.add(commutator(vs[static_cast<size_t>(mu) - 1], js[static_cast<size_t>(j) - 1]) -
              iunit * rhs);
    }
  return res;
}

/// [J^i, K^j] − i f^{ijk} K^k.
template <class S>
Residual check_jk_closure(const std::vector<Matrix<S>>& js, const std::vector<Matrix<S>>& ks,
                          const Tensor3<real_of_t<S>>& f) {
  Residual res;
  const S iunit = scalar_constants<S>::imag_unit();
  const int n = js.front().rows();
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) {
      Matrix<S> rhs(n, n);
      for (int k = 1; k <= 8; ++k) rhs += S(f(i, j, k)) * ks[static_cast<size_t>(k) - 1];
      res.add(commutator(js[static_cast<size_t>(i) - 1], ks[static_cast<size_t>(j) - 1]) -
              iunit * rhs);
    }
  return res;
}

/// [K^i, K^j] + i f^{ijk} J^k.
template <class S>
Residual check_kk_closure(const std::vector<Matrix<S>>& js, const std::vector<Matrix<S>>& ks,
                          const Tensor3<real_of_t<S>>& f) {
  Residual res;
  const S iunit = scalar_constants<S>::imag_unit();
  const int n = js.front().rows();
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) {
      Matrix<S> rhs(n, n);
      for (int k = 1; k <= 8; ++k) rhs += S(f(i, j, k)) * js[static_cast<size_t>(k) - 1];
      res.add(commutator(ks[static_cast<size_t>(i) - 1], ks[static_cast<size_t>(j) - 1]) +
              iunit * rhs);
    }
  return res;
}

/// [P^i, K^j] + i(√(2/3) α δ_ij P⁹ + s·d^{ijk} P^k) with s the branch sign.
template <class S>
Residual check_pk_relation(const MomentumSet<S>& p, const std::vector<Matrix<S>>& ks,
                           const Tensor3<real_of_t<S>>& d, const S& alpha, int d_sign) {
  Residual res;
  const S iunit = scalar_constants<S>::imag_unit();
  const S sqrt23 = scalar_constants<S>::sqrt6() * scalar_constants<S>::ratio(1, 3);
  const int n = p.ps.front().rows();
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) {
      Matrix<S> rhs(n, n);
      if (i == j) rhs += (sqrt23 * alpha) * p.P(9);
      for (int k = 1; k <= 9; ++k) {
        const S coef = d_sign > 0 ? S(d(i, j, k)) : S(0) - S(d(i, j, k));
        rhs += coef * p.ps[static_cast<size_t>(k) - 1];
      }
      res.add(commutator(p.P(i), ks[static_cast<size_t>(j) - 1]) + iunit * rhs);
    }
  return res;
}

/// α[P⁹, K^j] + i√(2/3) P^j.
template <class S>
Residual check_p9k_relation(const MomentumSet<S>& p, const std::vector<Matrix<S>>& ks,
                            const S& alpha) {
  Residual res;
  const S iunit = scalar_constants<S>::imag_unit();
  const S sqrt23 = scalar_constants<S>::sqrt6() * scalar_constants<S>::ratio(1, 3);
  for (int j = 1; j <= 8; ++j)
    res.add(alpha * commutator(p.P(9), ks[static_cast<size_t>(j) - 1]) + (iunit * sqrt23) * p.P(j));
  return res;
}

/// All 81 pairwise [P^μ, P^ν].
template <class S>
Residual check_pp_commute(const MomentumSet<S>& p) {
  Residual res;
  for (int mu = 1; mu <= 9; ++mu)
    for (int nu = 1; nu <= 9; ++nu) res.add(commutator(p.P(mu), p.P(nu)));
  return res;
}

/// Entries outside the branch's off-diagonal 3×3 block.
template <class S>
Residual check_momentum_block_pattern(const MomentumSet<S>& p) {
  Residual res;
  for (const auto& m : p.ps)
    for (int r = 0; r < 6; ++r)
      for (int c = 0; c < 6; ++c) {
        const bool inside = r >= p.block_row() && r < p.block_row() + 3 && c >= p.block_col() &&
                            c < p.block_col() + 3;
        if (!inside) res.add(m(r, c));
      }
  return res;
}

// -- momentum-span solves (the abelian-ideal structure) ------------------------------

template <class S>
struct SpanFit {
  std::array<S, 9> coeff;
  Residual reconstruction;  // Σ coeff_ν P^ν minus the target, full 6×6
};

/// Expresses C in the momentum family: solves the 9-unknown system on the
/// branch's nonzero 3×3 block (those nine blocks are linearly independent),
/// then measures the full-matrix reconstruction error.
template <class S>
SpanFit<S> momentum_span_fit(const MomentumSet<S>& p, const Matrix<S>& c) {
  const int br = p.block_row(), bc = p.block_col();
  Matrix<S> a(9, 9), b(9, 1);
  for (int r = 0; r < 3; ++r)
    for (int cc = 0; cc < 3; ++cc) {
      const int row = r * 3 + cc;
      for (int nu = 0; nu < 9; ++nu) a(row, nu) = p.ps[static_cast<size_t>(nu)](br + r, bc + cc);
      b(row, 0) = c(br + r, bc + cc);
    }
  const Matrix<S> x = solve_linear(a, b);

  SpanFit<S> fit;
  Matrix<S> recon(c.rows(), c.cols());
  for (int nu = 0; nu < 9; ++nu) {
    fit.coeff[static_cast<size_t>(nu)] = x(nu, 0);
    recon += x(nu, 0) * p.ps[static_cast<size_t>(nu)];
  }
  fit.reconstruction.add(recon - c);
  return fit;
}

/// Remark-style ideal check: [P^μ, X] stays in span{P^ν} for every X among
/// the rep's J's, K's and P's.
template <class S>
Residual check_abelian_ideal(const MomentumSet<S>& p, const GeneratorSet<S>& six) {
  Residual res;
  std::vector<const Matrix<S>*> xs;
  for (const auto& m : six.js) xs.push_back(&m);
  for (const auto& m : six.ks) xs.push_back(&m);
  for (const auto& m : p.ps) xs.push_back(&m);
  for (int mu = 1; mu <= 9; ++mu)
    for (const Matrix<S>* x : xs)
      res.merge(momentum_span_fit(p, commutator(p.P(mu), *x)).reconstruction);
  return res;
}

/// Left products J⁶·P^μ and K⁶·P^μ must keep the branch block pattern.
template <class S>
Residual check_block_preservation(const MomentumSet<S>& p, const GeneratorSet<S>& six) {
  Residual res;
  auto outside = [&](const Matrix<S>& m) {
    for (int r = 0; r < 6; ++r)
      for (int c = 0; c < 6; ++c) {
        const bool inside = r >= p.block_row() && r < p.block_row() + 3 && c >= p.block_col() &&
                            c < p.block_col() + 3;
        if (!inside) res.add(m(r, c));
      }
  };
  for (int mu = 1; mu <= 9; ++mu)
    for (int j = 1; j <= 8; ++j) {
      outside(six.J(j) * p.P(mu));
      outside(six.K(j) * p.P(mu));
    }
  return res;
}

}  // namespace su3st
