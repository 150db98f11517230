#pragma once

#include <algorithm>

#include "su3st/matrix.hpp"

namespace su3st {

/// Accumulates the magnitude of quantities that some identity says must
/// vanish.  `exact_zero` survives only if every accumulated value was
/// exactly zero, which is the pass condition on the exact backend; `max`
/// is compared against a tolerance on the float backend.
struct Residual {
  double max = 0.0;
  bool exact_zero = true;

  void add(double v) {
    if (v != 0.0) exact_zero = false;
    max = std::max(max, std::abs(v));
  }
  void add(const Complex& v) {
    if (v != Complex{}) exact_zero = false;
    max = std::max(max, std::abs(v));
  }
  void add(const ExactReal& v) {
    if (!v.is_zero()) exact_zero = false;
    max = std::max(max, std::abs(v.to_double()));
  }
  void add(const ExactScalar& v) {
    if (!v.is_zero()) exact_zero = false;
    max = std::max(max, abs_of(v));
  }
  template <class S>
  void add(const Matrix<S>& m) {
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) add(m(i, j));
  }
  void merge(const Residual& other) {
    max = std::max(max, other.max);
    exact_zero = exact_zero && other.exact_zero;
  }
};

}  // namespace su3st
