#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace su3st {

using Rational = mpq_class;

/// Rational with guaranteed lowest terms and positive denominator.
inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Element of the real field Q(√2, √3), stored on the basis {1, √2, √3, √6}.
///
/// The field is closed under +, -, *, / and contains every scalar this
/// library needs exactly: 1/2, 1/(2√3), √3/2, 1/√3, 1/√6, √(2/3), √(3/2).
/// Components are GMP rationals, kept canonical (lowest terms, positive
/// denominator), so equality is exact and products never overflow.
class ExactReal {
 public:
  ExactReal() : a_(0), b_(0), c_(0), d_(0) {}
  ExactReal(long n) : a_(n), b_(0), c_(0), d_(0) {}  // NOLINT(google-explicit-constructor)
  ExactReal(const Rational& rat) : a_(rat), b_(0), c_(0), d_(0) { a_.canonicalize(); }  // NOLINT
  ExactReal(Rational rat, Rational r2, Rational r3, Rational r6)
      : a_(std::move(rat)), b_(std::move(r2)), c_(std::move(r3)), d_(std::move(r6)) {
    a_.canonicalize();
    b_.canonicalize();
    c_.canonicalize();
    d_.canonicalize();
  }

  static ExactReal ratio(long num, long den) { return ExactReal(make_rational(num, den)); }
  static ExactReal sqrt2() { return ExactReal(Rational(0), Rational(1), Rational(0), Rational(0)); }
  static ExactReal sqrt3() { return ExactReal(Rational(0), Rational(0), Rational(1), Rational(0)); }
  static ExactReal sqrt6() { return ExactReal(Rational(0), Rational(0), Rational(0), Rational(1)); }

  const Rational& rat() const { return a_; }
  const Rational& coef_sqrt2() const { return b_; }
  const Rational& coef_sqrt3() const { return c_; }
  const Rational& coef_sqrt6() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
  bool is_rational() const { return b_ == 0 && c_ == 0 && d_ == 0; }

  friend ExactReal operator+(const ExactReal& x, const ExactReal& y) {
    return ExactReal(x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_);
  }
  friend ExactReal operator-(const ExactReal& x, const ExactReal& y) {
    return ExactReal(x.a_ - y.a_, x.b_ - y.b_, x.c_ - y.c_, x.d_ - y.d_);
  }
  ExactReal operator-() const { return ExactReal(-a_, -b_, -c_, -d_); }

  // (a + b√2 + c√3 + d√6)(a' + b'√2 + c'√3 + d'√6); uses √2√3 = √6,
  // √2√6 = 2√3, √3√6 = 3√2.
  friend ExactReal operator*(const ExactReal& x, const ExactReal& y) {
    return ExactReal(
        x.a_ * y.a_ + 2 * x.b_ * y.b_ + 3 * x.c_ * y.c_ + 6 * x.d_ * y.d_,
        x.a_ * y.b_ + x.b_ * y.a_ + 3 * (x.c_ * y.d_ + x.d_ * y.c_),
        x.a_ * y.c_ + x.c_ * y.a_ + 2 * (x.b_ * y.d_ + x.d_ * y.b_),
        x.a_ * y.d_ + x.d_ * y.a_ + x.b_ * y.c_ + x.c_ * y.b_);
  }
  friend ExactReal operator/(const ExactReal& x, const ExactReal& y) { return x * y.inverse(); }

  ExactReal& operator+=(const ExactReal& y) { return *this = *this + y; }
  ExactReal& operator-=(const ExactReal& y) { return *this = *this - y; }
  ExactReal& operator*=(const ExactReal& y) { return *this = *this * y; }

  friend bool operator==(const ExactReal& x, const ExactReal& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  friend bool operator!=(const ExactReal& x, const ExactReal& y) { return !(x == y); }

  ExactReal inverse() const;

  double to_double() const;

  /// Canonical text form, e.g. "0", "1/2", "-1/2 + 1/3√3", "1/6√6".
  std::string str() const;
  /// Parses the str() format (also accepts "sqrt2"/"sqrt3"/"sqrt6" spellings).
  static ExactReal parse(std::string_view text);

 private:
  Rational a_, b_, c_, d_;  // a + b√2 + c√3 + d√6
};

/// Complex scalar over Q(√2,√3): the exact backend's matrix entry type.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long n) : re_(n) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(ExactReal re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(ExactReal re, ExactReal im) : re_(std::move(re)), im_(std::move(im)) {}

  static ExactScalar i() { return ExactScalar(ExactReal(0), ExactReal(1)); }

  const ExactReal& re() const { return re_; }
  const ExactReal& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  ExactScalar conj() const { return ExactScalar(re_, -im_); }

  friend ExactScalar operator+(const ExactScalar& x, const ExactScalar& y) {
    return ExactScalar(x.re_ + y.re_, x.im_ + y.im_);
  }
  friend ExactScalar operator-(const ExactScalar& x, const ExactScalar& y) {
    return ExactScalar(x.re_ - y.re_, x.im_ - y.im_);
  }
  ExactScalar operator-() const { return ExactScalar(-re_, -im_); }
  friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
    return ExactScalar(x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_);
  }
  friend ExactScalar operator/(const ExactScalar& x, const ExactScalar& y) { return x * y.inverse(); }

  ExactScalar& operator+=(const ExactScalar& y) { return *this = *this + y; }
  ExactScalar& operator-=(const ExactScalar& y) { return *this = *this - y; }
  ExactScalar& operator*=(const ExactScalar& y) { return *this = *this * y; }

  friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
    return x.re_ == y.re_ && x.im_ == y.im_;
  }
  friend bool operator!=(const ExactScalar& x, const ExactScalar& y) { return !(x == y); }

  ExactScalar inverse() const;

  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

  std::string str() const;

 private:
  ExactReal re_, im_;
};

inline ExactScalar operator*(const ExactReal& r, const ExactScalar& z) { return ExactScalar(r) * z; }

}  // namespace su3st
