#pragma once

#include <optional>
#include <string>
#include <vector>

#include "su3st/matrix.hpp"
#include "su3st/residual.hpp"

namespace su3st {

enum class RepLabel { Rep3, Rep3Bar, Rep6, Rep9, Rep10 };
enum class Branch { Plus, Minus };

inline int branch_sign(Branch b) { return b == Branch::Plus ? +1 : -1; }
inline const char* branch_name(Branch b) { return b == Branch::Plus ? "+" : "-"; }

std::string rep_name(RepLabel rep);
int rep_dim(RepLabel rep);

/// Spatial generator indices run 1..8; vector/momentum indices run 1..9
/// with 9 the time slot.  All public accessors are 1-based.
template <class S>
struct GeneratorSet {
  RepLabel rep = RepLabel::Rep3;
  std::vector<Matrix<S>> js;  // 8 angular momentum matrices
  std::vector<Matrix<S>> ks;  // 8 boost matrices, may be absent
  std::vector<Matrix<S>> vs;  // 9 vector or momentum matrices, may be absent
  std::optional<Branch> branch;

  const Matrix<S>& J(int i) const { return js.at(static_cast<size_t>(i) - 1); }
  const Matrix<S>& K(int i) const { return ks.at(static_cast<size_t>(i) - 1); }
  const Matrix<S>& V(int mu) const { return vs.at(static_cast<size_t>(mu) - 1); }
  bool has_K() const { return !ks.empty(); }
  bool has_V() const { return !vs.empty(); }
  int dim() const { return js.empty() ? 0 : js.front().rows(); }
};

GeneratorSet<Complex> to_float(const GeneratorSet<ExactScalar>& g);

/// 9×9×9 tensor with 1-based indices; slots touching index 9 stay zero for
/// the structure constants but are stored so extended-index contractions
/// are uniform.
template <class R>
class Tensor3 {
 public:
  Tensor3() : v_(9 * 9 * 9) {}

  R& operator()(int i, int j, int k) { return v_[index(i, j, k)]; }
  const R& operator()(int i, int j, int k) const { return v_[index(i, j, k)]; }

 private:
  static size_t index(int i, int j, int k) {
    return static_cast<size_t>(i - 1) * 81 + static_cast<size_t>(j - 1) * 9 +
           static_cast<size_t>(k - 1);
  }
  std::vector<R> v_;
};

template <class R>
struct StructureConstants {
  Tensor3<R> f;  // totally antisymmetric
  Tensor3<R> d;  // totally symmetric
};

StructureConstants<double> to_float(const StructureConstants<ExactReal>& sc);

// -- fundamental rep -------------------------------------------------------------

/// The eight canonical 3×3 generators, exact entries: hermitian, traceless,
/// tr(J^i J^j) = δ^{ij}/2.
GeneratorSet<ExactScalar> gellmann();

/// Antitriplet: J̄^i = −(J^i)* = −(J^i)ᵀ.  Same commutators, d → −d in the
/// anticommutators.
GeneratorSet<ExactScalar> antitriplet();

namespace detail {

template <class S>
real_of_t<S> require_real(const S& z, const char* what) {
  if constexpr (is_exact_backend_v<S>) {
    if (!z.is_real()) throw std::domain_error(std::string(what) + ": value is not real");
    return z.re();
  } else {
    if (std::abs(z.imag()) > 1e-12 * (1.0 + std::abs(z.real())))
      throw std::domain_error(std::string(what) + ": value is not real");
    return z.real();
  }
}

template <class S>
void require_normalized(const GeneratorSet<S>& g) {
  if (g.js.size() != 8) throw std::invalid_argument("structure extraction: need 8 generators");
  Residual res;
  const S half = scalar_constants<S>::ratio(1, 2);
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) {
      S t = (g.J(i) * g.J(j)).trace();
      if (i == j) t -= half;
      res.add(t);
    }
  const bool ok = is_exact_backend_v<S> ? res.exact_zero : res.max <= 1e-12;
  if (!ok)
    throw std::invalid_argument(
        "structure extraction: generators fail tr(J^i J^j) = delta/2 normalization");
}

}  // namespace detail

/// f^{ijk} = −2i · tr([J^i, J^j] J^k), extended so all index-9 slots vanish.
/// The prefactor comes from the tr(J^i J^j) = δ^{ij}/2 normalization:
/// contracting the closure relation with J^k isolates one coefficient.
template <class S>
Tensor3<real_of_t<S>> extract_f(const GeneratorSet<S>& g) {
  detail::require_normalized(g);
  Tensor3<real_of_t<S>> f;
  const S minus_two_i = S(0) - (scalar_constants<S>::imag_unit() + scalar_constants<S>::imag_unit());
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) {
      const Matrix<S> c = commutator(g.J(i), g.J(j));
      for (int k = 1; k <= 8; ++k)
        f(i, j, k) = detail::require_real(minus_two_i * (c * g.J(k)).trace(), "extract_f");
    }
  return f;
}

/// d^{ijk} = 2 · tr({J^i, J^j} J^k); same normalization argument as extract_f.
template <class S>
Tensor3<real_of_t<S>> extract_d(const GeneratorSet<S>& g) {
  detail::require_normalized(g);
  Tensor3<real_of_t<S>> d;
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) {
      const Matrix<S> ac = anticommutator(g.J(i), g.J(j));
      for (int k = 1; k <= 8; ++k) {
        S t = (ac * g.J(k)).trace();
        d(i, j, k) = detail::require_real(t + t, "extract_d");
      }
    }
  return d;
}

template <class S>
StructureConstants<real_of_t<S>> extract_structure(const GeneratorSet<S>& g) {
  return {extract_f(g), extract_d(g)};
}

/// gellmann() in the requested backend.
template <class S>
GeneratorSet<S> fundamental() {
  if constexpr (is_exact_backend_v<S>)
    return gellmann();
  else
    return to_float(gellmann());
}

/// Exact tensors extracted once from gellmann(); shared, immutable.
const StructureConstants<ExactReal>& canonical_structure();
const StructureConstants<double>& canonical_structure_float();

template <class R>
const StructureConstants<R>& canonical_structure_for() {
  if constexpr (std::is_same_v<R, ExactReal>)
    return canonical_structure();
  else
    return canonical_structure_float();
}

// -- identity and closure checks ---------------------------------------------------

struct FdIdentityReport {
  Residual jacobi;   // f·f cyclic sum
  Residual mixed;    // f·d cyclic sum
  Residual dd;       // d·d sum against the δ combination
};

/// Sweeps all 4096 index tuples of each identity.
template <class R>
FdIdentityReport verify_fd_identities(const StructureConstants<R>& sc) {
  FdIdentityReport rep;
  const R third = R(1) / R(3);
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j)
      for (int k = 1; k <= 8; ++k)
        for (int l = 1; l <= 8; ++l) {
          R jac{}, mix{}, dd{};
          for (int s = 1; s <= 8; ++s) {
            jac += sc.f(i, j, s) * sc.f(s, k, l) + sc.f(k, j, s) * sc.f(s, l, i) +
                   sc.f(i, k, s) * sc.f(s, l, j);
            mix += sc.f(i, j, s) * sc.d(s, k, l) + sc.f(l, j, s) * sc.d(s, k, i) +
                   sc.f(k, j, s) * sc.d(s, i, l);
            dd += sc.d(i, j, s) * sc.d(s, k, l) + sc.d(l, j, s) * sc.d(s, k, i) +
                  sc.d(l, i, s) * sc.d(s, k, j);
          }
          const R delta = third * (R((k == i) && (l == j) ? 1 : 0) + R((k == l) && (i == j) ? 1 : 0) +
                                   R((k == j) && (i == l) ? 1 : 0));
          rep.jacobi.add(jac);
          rep.mixed.add(mix);
          rep.dd.add(dd - delta);
        }
  return rep;
}

/// f antisymmetric and d symmetric under every index permutation, plus all
/// extended (index 9) slots zero.  Exhaustive over 9³ triples.
template <class R>
Residual verify_tensor_symmetries(const StructureConstants<R>& sc) {
  Residual res;
  for (int i = 1; i <= 9; ++i)
    for (int j = 1; j <= 9; ++j)
      for (int k = 1; k <= 9; ++k) {
        const R& f = sc.f(i, j, k);
        const R& d = sc.d(i, j, k);
        res.add(f + sc.f(j, i, k));
        res.add(f + sc.f(i, k, j));
        res.add(f + sc.f(k, j, i));
        res.add(d - sc.d(j, i, k));
        res.add(d - sc.d(i, k, j));
        res.add(d - sc.d(k, j, i));
        if (i == 9 || j == 9 || k == 9) {
          res.add(f);
          res.add(d);
        }
      }
  return res;
}

/// [J^i, J^j] − i f^{ijk} J^k over all 64 pairs; works for any rep whose J's
/// close on the given f.
template <class S>
Residual check_commutator_closure(const std::vector<Matrix<S>>& js,
                                  const Tensor3<real_of_t<S>>& f) {
  Residual res;
  const S iunit = scalar_constants<S>::imag_unit();
  const int n = js.front().rows();
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) {
      Matrix<S> rhs(n, n);
      for (int k = 1; k <= 8; ++k) rhs += S(f(i, j, k)) * js[static_cast<size_t>(k) - 1];
      res.add(commutator(js[static_cast<size_t>(i) - 1], js[static_cast<size_t>(j) - 1]) -
              iunit * rhs);
    }
  return res;
}

/// {J^i, J^j} − δ^{ij}·1/3 − s·d^{ijk} J^k with s = +1 for the triplet and
/// s = −1 for the antitriplet.
template <class S>
Residual check_anticommutator_closure(const std::vector<Matrix<S>>& js,
                                      const Tensor3<real_of_t<S>>& d, int d_side) {
  Residual res;
  const int n = js.front().rows();
  const S third = scalar_constants<S>::ratio(1, 3);
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) {
      Matrix<S> rhs(n, n);
      for (int k = 1; k <= 8; ++k) rhs += S(d(i, j, k)) * js[static_cast<size_t>(k) - 1];
      if (d_side < 0) rhs = -rhs;
      if (i == j) rhs += third * Matrix<S>::identity(n);
      res.add(anticommutator(js[static_cast<size_t>(i) - 1], js[static_cast<size_t>(j) - 1]) - rhs);
    }
  return res;
}

/// Hermiticity and tracelessness of each J.
template <class S>
Residual check_hermitian_traceless(const std::vector<Matrix<S>>& js) {
  Residual res;
  for (const auto& j : js) {
    res.add(j - j.dagger());
    res.add(j.trace());
  }
  return res;
}

}  // namespace su3st
