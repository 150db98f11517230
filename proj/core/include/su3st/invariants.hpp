#pragma once

#include "su3st/transforms.hpp"

namespace su3st {

/// Σ_{i≤8} (x^i)², the squared distance in the eight-dimensional space.
double quad_space(const NineVector& x);

/// d^{ijk} x^i x^j x^k over the spatial components.
double cubic_sym(const NineVector& x);

double time_component(const NineVector& x);

/// quad_space(x) − (x⁹)².  Rotation-invariant; not boost-invariant here.
double interval(const NineVector& x);

/// I±(x) = ∓√(3/2)·d_{ijk}x^ix^jx^k + (3/2)·Σ(x^i)²·x⁹ − (x⁹)³.
/// Invariant under rotations and under boosts of the matching branch.
double cubic_invariant(const NineVector& x, Branch branch);

/// The symmetric tensor polarizing I±: spatial slots carry
/// ½(δ_ij δ⁹_k + δ_ki δ⁹_j + δ_jk δ⁹_i) ∓ √(3/2)·d_ijk and the (9,9,9)
/// slot is −1.
template <class R>
struct TrilinearForm {
  Branch branch = Branch::Plus;
  Tensor3<R> g;

  R eval(const std::array<R, 9>& x, const std::array<R, 9>& y, const std::array<R, 9>& z) const {
    R sum{};
    for (int a = 1; a <= 9; ++a)
      for (int b = 1; b <= 9; ++b)
        for (int c = 1; c <= 9; ++c) {
          const R& coef = g(a, b, c);
          if (real_is_zero(coef)) continue;
          sum += coef * x[static_cast<size_t>(a) - 1] * y[static_cast<size_t>(b) - 1] *
                 z[static_cast<size_t>(c) - 1];
        }
    return sum;
  }
};

template <class R>
TrilinearForm<R> build_g(Branch branch);

extern template TrilinearForm<ExactReal> build_g<ExactReal>(Branch);
extern template TrilinearForm<double> build_g<double>(Branch);

/// g±(x, y, z) evaluated with float coefficients.
double trilinear(const NineVector& x, const NineVector& y, const NineVector& z, Branch branch);

/// g must be invariant under every index permutation; exhaustive over 9³.
template <class R>
Residual check_g_symmetry(const TrilinearForm<R>& form) {
  Residual res;
  for (int a = 1; a <= 9; ++a)
    for (int b = 1; b <= 9; ++b)
      for (int c = 1; c <= 9; ++c) {
        const R& v = form.g(a, b, c);
        res.add(v - form.g(b, a, c));
        res.add(v - form.g(a, c, b));
        res.add(v - form.g(c, b, a));
      }
  return res;
}

// -- boost defect of the quadratic interval ------------------------------------------

struct BoostDefectReport {
  double first_order;  // ±2h·d^{jmk}x^j x^k, the predicted leading defect
  double r_h;          // interval drift minus first_order at step h
  double r_half;       // same at step h/2
  double ratio;        // r_h / r_half, → 4 as h → 0
};

/// Boosts x by exp(h·iK^{±m}) exactly (to float precision), subtracts the
/// first-order defect, and measures the second-order smallness of the rest.
BoostDefectReport boost_defect_check(const NineVector& x, int m, double h, Branch branch);

// -- rotation scalar products (eight-dimensional space) -------------------------------

struct RotationProductsReport {
  double dot_before, dot_after;  // x^i y^i
  double tri_before, tri_after;  // d_{ijk} x^i y^j z^k
  double dot_polarized;          // ½[q(x+y) − q(x) − q(y)], the polarization route
  double tri_polarized;          // inclusion–exclusion over cubic_sym
};

/// Applies one shared rotation to x, y, z (time components ignored) and
/// reports both scalar products before and after, plus the
/// polarization-identity routes to the same numbers.
RotationProductsReport rotation_scalar_products(const NineVector& x, const NineVector& y,
                                                const NineVector& z,
                                                const std::array<double, 8>& theta);

// -- exact first-order invariance conditions ------------------------------------------

/// Coefficient-level vanishing of the derivative of g± along the boost flow
/// x ↦ x + ε(iK^{±m})x, all m: Σ_μ [g_{μβγ}S_{μν} + g_{μβν}S_{μγ} + g_{μνγ}S_{μβ}] = 0.
/// Exactly zero is what makes the finite invariance of I± exact.
Residual lie_condition_g_boost_exact(Branch branch);

/// Same along the rotation flow (A = iJ^m, real antisymmetric).
Residual lie_condition_g_rotation_exact(Branch branch);

/// First-order rotation invariance of the spatial cubic d_{ijk}x^ix^jx^k;
/// holds by the mixed f·d identity.
Residual lie_condition_cubic_rotation_exact();

}  // namespace su3st
