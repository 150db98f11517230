#include "su3st/invariants.hpp"

#include <cmath>

#include "su3st/ninerep.hpp"

namespace su3st {

namespace {

constexpr double kSqrt32 = 1.2247448713915890491;  // √(3/2)

const Tensor3<double>& d_float() { return canonical_structure_float().d; }

}  // namespace

double quad_space(const NineVector& x) {
  double s = 0.0;
  for (int i = 1; i <= 8; ++i) s += x.comp(i) * x.comp(i);
  return s;
}

double cubic_sym(const NineVector& x) {
  const auto& d = d_float();
  double s = 0.0;
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j)
      for (int k = 1; k <= 8; ++k) {
        const double c = d(i, j, k);
        if (c != 0.0) s += c * x.comp(i) * x.comp(j) * x.comp(k);
      }
  return s;
}

double time_component(const NineVector& x) { return x.comp(9); }

double interval(const NineVector& x) {
  return quad_space(x) - x.comp(9) * x.comp(9);
}

double cubic_invariant(const NineVector& x, Branch branch) {
  const double t = x.comp(9);
  return -branch_sign(branch) * kSqrt32 * cubic_sym(x) + 1.5 * quad_space(x) * t - t * t * t;
}

template <class R>
TrilinearForm<R> build_g(Branch branch) {
  const auto& sc = canonical_structure_for<R>();
  const R half = R(1) / R(2);
  R sqrt32;  // √(3/2) = √6/2
  if constexpr (std::is_same_v<R, ExactReal>)
    sqrt32 = ExactReal::sqrt6() * half;
  else
    sqrt32 = kSqrt32;
  const int bsign = branch_sign(branch);

  TrilinearForm<R> form;
  form.branch = branch;
  for (int a = 1; a <= 9; ++a)
    for (int b = 1; b <= 9; ++b)
      for (int c = 1; c <= 9; ++c) {
        if (a == 9 && b == 9 && c == 9) {
          form.g(a, b, c) = R(0) - R(1);
          continue;
        }
        R val{};
        if (a == b && c == 9) val += half;
        if (c == a && b == 9) val += half;
        if (b == c && a == 9) val += half;
        const R dterm = sqrt32 * sc.d(a, b, c);
        val = bsign > 0 ? val - dterm : val + dterm;
        form.g(a, b, c) = val;
      }
  return form;
}

template TrilinearForm<ExactReal> build_g<ExactReal>(Branch);
template TrilinearForm<double> build_g<double>(Branch);

double trilinear(const NineVector& x, const NineVector& y, const NineVector& z, Branch branch) {
  static const TrilinearForm<double> plus = build_g<double>(Branch::Plus);
  static const TrilinearForm<double> minus = build_g<double>(Branch::Minus);
  const TrilinearForm<double>& form = branch == Branch::Plus ? plus : minus;

  std::array<double, 9> xs, ys, zs;
  for (size_t k = 0; k < 9; ++k) {
    xs[k] = x.v[k];
    ys[k] = y.v[k];
    zs[k] = z.v[k];
  }
  return form.eval(xs, ys, zs);
}

BoostDefectReport boost_defect_check(const NineVector& x, int m, double h, Branch branch) {
  if (m < 1 || m > 8) throw std::invalid_argument("boost_defect_check: m must be in 1..8");
  if (h <= 0.0) throw std::invalid_argument("boost_defect_check: h must be positive");

  const auto& d = d_float();
  double contraction = 0.0;
  for (int j = 1; j <= 8; ++j)
    for (int k = 1; k <= 8; ++k) contraction += d(j, m, k) * x.comp(j) * x.comp(k);
  const int s = branch_sign(branch);

  auto residual_at = [&](double step) {
    std::array<double, 8> phi{};
    phi[static_cast<size_t>(m) - 1] = step;
    const NineVector boosted = apply(lorentz9(TransformParams::boost(phi, branch)), x);
    return interval(boosted) - interval(x) - s * 2.0 * step * contraction;
  };

  BoostDefectReport rep;
  rep.first_order = s * 2.0 * h * contraction;
  rep.r_h = residual_at(h);
  rep.r_half = residual_at(h / 2.0);
  rep.ratio = rep.r_half != 0.0 ? rep.r_h / rep.r_half : 0.0;
  return rep;
}

RotationProductsReport rotation_scalar_products(const NineVector& x, const NineVector& y,
                                                const NineVector& z,
                                                const std::array<double, 8>& theta) {
  const auto& d = d_float();
  const RealMatrix r = lorentz9(TransformParams::rotation(theta));
  const NineVector xr = apply(r, x), yr = apply(r, y), zr = apply(r, z);

  auto dot8 = [](const NineVector& a, const NineVector& b) {
    double s = 0.0;
    for (int i = 1; i <= 8; ++i) s += a.comp(i) * b.comp(i);
    return s;
  };
  auto tri8 = [&](const NineVector& a, const NineVector& b, const NineVector& c) {
    double s = 0.0;
    for (int i = 1; i <= 8; ++i)
      for (int j = 1; j <= 8; ++j)
        for (int k = 1; k <= 8; ++k) {
          const double coef = d(i, j, k);
          if (coef != 0.0) s += coef * a.comp(i) * b.comp(j) * c.comp(k);
        }
    return s;
  };

  RotationProductsReport rep;
  rep.dot_before = dot8(x, y);
  rep.dot_after = dot8(xr, yr);
  rep.tri_before = tri8(x, y, z);
  rep.tri_after = tri8(xr, yr, zr);
  rep.dot_polarized = 0.5 * (quad_space(x + y) - quad_space(x) - quad_space(y));
  // d(x,y,z) by inclusion–exclusion over the symmetric cube
  rep.tri_polarized = (cubic_sym(x + y + z) - cubic_sym(x + y) - cubic_sym(x + z) -
                       cubic_sym(y + z) + cubic_sym(x) + cubic_sym(y) + cubic_sym(z)) /
                      6.0;
  return rep;
}

namespace {

// Derivative of the cubic form g along the linear flow x ↦ x + εSx vanishes
// iff for all (β,γ,ν): Σ_μ g_{μβγ}S_{μν} + g_{μβν}S_{μγ} + g_{μνγ}S_{μβ} = 0.
Residual lie_condition(const TrilinearForm<ExactReal>& form, const ExactMatrix& s_real) {
  Residual res;
  for (int b = 1; b <= 9; ++b)
    for (int c = 1; c <= 9; ++c)
      for (int n = 1; n <= 9; ++n) {
        ExactReal sum;
        for (int mu = 1; mu <= 9; ++mu) {
          sum += form.g(mu, b, c) * s_real(mu - 1, n - 1).re();
          sum += form.g(mu, b, n) * s_real(mu - 1, c - 1).re();
          sum += form.g(mu, n, c) * s_real(mu - 1, b - 1).re();
        }
        res.add(sum);
      }
  return res;
}

ExactMatrix times_i(const ExactMatrix& m) { return ExactScalar::i() * m; }

}  // namespace

Residual lie_condition_g_boost_exact(Branch branch) {
  const TrilinearForm<ExactReal> form = build_g<ExactReal>(branch);
  const auto k9 = k9_generators<ExactScalar>(branch);
  Residual res;
  for (const auto& k : k9) res.merge(lie_condition(form, times_i(k)));
  return res;
}

Residual lie_condition_g_rotation_exact(Branch branch) {
  const TrilinearForm<ExactReal> form = build_g<ExactReal>(branch);
  const auto j9 = j9_generators<ExactScalar>();
  Residual res;
  for (const auto& j : j9) res.merge(lie_condition(form, times_i(j)));
  return res;
}

Residual lie_condition_cubic_rotation_exact() {
  const auto& sc = canonical_structure();
  const auto j9 = j9_generators<ExactScalar>();
  Residual res;
  // d has no time slots and iJ does not mix 9 in, so the sweep over 1..9
  // covers the spatial cubic.
  for (const auto& j : j9) {
    const ExactMatrix a = times_i(j);
    for (int b = 1; b <= 9; ++b)
      for (int c = 1; c <= 9; ++c)
        for (int n = 1; n <= 9; ++n) {
          ExactReal sum;
          for (int mu = 1; mu <= 9; ++mu) {
            sum += sc.d(mu, b, c) * a(mu - 1, n - 1).re();
            sum += sc.d(mu, b, n) * a(mu - 1, c - 1).re();
            sum += sc.d(mu, n, c) * a(mu - 1, b - 1).re();
          }
          res.add(sum);
        }
  }
  return res;
}

}  // namespace su3st
