#pragma once

#include <array>

#include "su3st/su3.hpp"

namespace su3st {

/// Point or coordinate difference in 8+1 spacetime; component 9 is time
/// (distance and time share one unit).
struct NineVector {
  std::array<double, 9> v{};

  double& comp(int mu) { return v.at(static_cast<size_t>(mu) - 1); }
  double comp(int mu) const { return v.at(static_cast<size_t>(mu) - 1); }

  static NineVector unit(int mu) {
    NineVector x;
    x.comp(mu) = 1.0;
    return x;
  }

  friend NineVector operator+(const NineVector& x, const NineVector& y) {
    NineVector out;
    for (size_t k = 0; k < 9; ++k) out.v[k] = x.v[k] + y.v[k];
    return out;
  }
  friend NineVector operator-(const NineVector& x, const NineVector& y) {
    NineVector out;
    for (size_t k = 0; k < 9; ++k) out.v[k] = x.v[k] - y.v[k];
    return out;
  }
  double norm() const;
};

/// Rotation angles, boost parameters, translation, and the momentum-branch
/// selector keying the sign of the d-terms in the boosts.
struct TransformParams {
  std::array<double, 8> theta{};
  std::array<double, 8> phi{};
  std::array<double, 9> a{};
  Branch branch = Branch::Plus;

  static TransformParams rotation(const std::array<double, 8>& theta, Branch b = Branch::Plus);
  static TransformParams boost(const std::array<double, 8>& phi, Branch b);
  static TransformParams translation(const std::array<double, 9>& a);
};

/// exp(iφ_i K^{±i}) · exp(iθ_i J^i) in the 9-dim rep: rotation first, then
/// boost.  The complex product is asserted real to 1e-12 (relative) before
/// the imaginary parts are dropped.
RealMatrix lorentz9(const TransformParams& p);

/// The affine device: lorentz9 in the upper-left block, translation column
/// (a, 1), last row (0,...,0,1).
RealMatrix poincare10(const TransformParams& p);

/// 9×9 matrix action, or 10×10 affine action with the homogeneous 1
/// appended and stripped.
NineVector apply(const RealMatrix& m, const NineVector& x);

/// Exercise-style intertwining check: conjugating the rep's V (or P) family
/// by D = exp(iφK)exp(iθJ) transports it by the 9-dim transformation.
/// For families obeying the six-rep [P,K] relations the transport is
/// D⁻¹V^μD = Λ_{μν}V^ν; the affine translations of the 10-rep obey the
/// sign-flipped relations and transport contragrediently, by Λ^{-T}.
/// Returns max_μ ‖D⁻¹V^μD − (transport)_{μν}V^ν‖_F.
double intertwine_residual(const GeneratorSet<Complex>& rep, const TransformParams& p);

}  // namespace su3st
