#include "su3st/transforms.hpp"

#include <cmath>

#include "su3st/matexp.hpp"
#include "su3st/ninerep.hpp"

namespace su3st {

double NineVector::norm() const {
  double s = 0.0;
  for (double c : v) s += c * c;
  return std::sqrt(s);
}

TransformParams TransformParams::rotation(const std::array<double, 8>& theta, Branch b) {
  TransformParams p;
  p.theta = theta;
  p.branch = b;
  return p;
}

TransformParams TransformParams::boost(const std::array<double, 8>& phi, Branch b) {
  TransformParams p;
  p.phi = phi;
  p.branch = b;
  return p;
}

TransformParams TransformParams::translation(const std::array<double, 9>& a) {
  TransformParams p;
  p.a = a;
  return p;
}

namespace {

const std::vector<FloatMatrix>& j9_float() {
  static const std::vector<FloatMatrix> js = j9_generators<Complex>();
  return js;
}

const std::vector<FloatMatrix>& k9_float(Branch b) {
  static const std::vector<FloatMatrix> plus = k9_generators<Complex>(Branch::Plus);
  static const std::vector<FloatMatrix> minus = k9_generators<Complex>(Branch::Minus);
  return b == Branch::Plus ? plus : minus;
}

FloatMatrix weighted_sum(const std::vector<FloatMatrix>& gens, const std::array<double, 8>& w,
                         const Complex& prefactor) {
  FloatMatrix sum(gens.front().rows(), gens.front().cols());
  for (size_t i = 0; i < 8; ++i)
    if (w[i] != 0.0) sum += (prefactor * w[i]) * gens[i];
  return sum;
}

/// Asserts the matrix is real to within 1e-12 relative and strips the
/// imaginary parts.
RealMatrix require_real_matrix(const FloatMatrix& m, const char* what) {
  const double scale = 1.0 + m.max_abs();
  RealMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (std::abs(m(i, j).imag()) > 1e-12 * scale)
        throw std::domain_error(std::string(what) + ": result has a non-real entry");
      out(i, j) = m(i, j).real();
    }
  return out;
}

}  // namespace

RealMatrix lorentz9(const TransformParams& p) {
  const Complex iunit(0.0, 1.0);
  const FloatMatrix rot = matrix_exp(weighted_sum(j9_float(), p.theta, iunit));
  const FloatMatrix boost = matrix_exp(weighted_sum(k9_float(p.branch), p.phi, iunit));
  return require_real_matrix(boost * rot, "lorentz9");
}

RealMatrix poincare10(const TransformParams& p) {
  const RealMatrix lambda = lorentz9(p);
  RealMatrix out(10, 10);
  out.set_block(0, 0, lambda);
  for (int mu = 0; mu < 9; ++mu) out(mu, 9) = p.a[static_cast<size_t>(mu)];
  out(9, 9) = 1.0;
  return out;
}

NineVector apply(const RealMatrix& m, const NineVector& x) {
  if (m.rows() == 9 && m.cols() == 9) {
    NineVector out;
    for (int r = 0; r < 9; ++r) {
      double s = 0.0;
      for (int c = 0; c < 9; ++c) s += m(r, c) * x.v[static_cast<size_t>(c)];
      out.v[static_cast<size_t>(r)] = s;
    }
    return out;
  }
  if (m.rows() == 10 && m.cols() == 10) {
    NineVector out;
    for (int r = 0; r < 9; ++r) {
      double s = m(r, 9);  // homogeneous coordinate is 1
      for (int c = 0; c < 9; ++c) s += m(r, c) * x.v[static_cast<size_t>(c)];
      out.v[static_cast<size_t>(r)] = s;
    }
    return out;
  }
  throw std::invalid_argument("apply: expected a 9x9 or 10x10 matrix");
}

double intertwine_residual(const GeneratorSet<Complex>& rep, const TransformParams& p) {
  if (!rep.has_V())
    throw std::invalid_argument("intertwine_residual: rep carries no V or P family");
  if (rep.branch && *rep.branch != p.branch)
    throw std::invalid_argument("intertwine_residual: params branch must match the rep's branch");

  const Complex iunit(0.0, 1.0);
  const int n = rep.dim();
  FloatMatrix grot(n, n), gboost(n, n);
  for (size_t i = 0; i < 8; ++i) {
    grot += (iunit * p.theta[i]) * rep.js[i];
    gboost += (iunit * p.phi[i]) * rep.ks[i];
  }
  const FloatMatrix d = matrix_exp(gboost) * matrix_exp(grot);
  const FloatMatrix dinv = inverse(d);

  const RealMatrix lambda = lorentz9(p);
  RealMatrix transport = lambda;
  if (rep.rep == RepLabel::Rep10) transport = inverse(lambda).transpose();

  double worst = 0.0;
  for (int mu = 1; mu <= 9; ++mu) {
    FloatMatrix expected(n, n);
    for (int nu = 1; nu <= 9; ++nu)
      expected += Complex(transport(mu - 1, nu - 1)) * rep.vs[static_cast<size_t>(nu) - 1];
    worst = std::max(worst, frobenius_distance(dinv * rep.V(mu) * d, expected));
  }
  return worst;
}

}  // namespace su3st
