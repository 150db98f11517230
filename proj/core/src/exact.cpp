#include "su3st/exact.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace su3st {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kSqrt3 = 1.7320508075688772935;
constexpr double kSqrt6 = 2.4494897427831780982;

}  // namespace

double ExactReal::to_double() const {
  return a_.get_d() + b_.get_d() * kSqrt2 + c_.get_d() * kSqrt3 + d_.get_d() * kSqrt6;
}

// Inverse via two conjugations. conj2 negates the √2-odd part (b, d); the
// product z·conj2(z) lands in Q(√3), where (p + q√3)⁻¹ = (p − q√3)/(p² − 3q²).
// Both norms vanish only at z = 0 because √2 ∉ Q(√3) and √3 ∉ Q.
ExactReal ExactReal::inverse() const {
  if (is_zero()) throw std::domain_error("ExactReal::inverse: division by zero");
  const ExactReal conj2(a_, -b_, c_, -d_);
  const ExactReal n = *this * conj2;  // b = d = 0
  const Rational p = n.a_, q = n.c_;
  const Rational denom = p * p - 3 * q * q;
  return conj2 * ExactReal(p / denom, Rational(0), -q / denom, Rational(0));
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw std::domain_error("ExactScalar::inverse: division by zero");
  const ExactReal norm = re_ * re_ + im_ * im_;
  const ExactReal inv_norm = norm.inverse();
  return ExactScalar(re_ * inv_norm, -(im_ * inv_norm));
}

namespace {

void append_term(std::string& out, const Rational& coef, const char* symbol) {
  if (coef == 0) return;
  const bool negative = coef < 0;
  const Rational mag = abs(coef);
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  out += mag.get_str();
  out += symbol;
}

}  // namespace

std::string ExactReal::str() const {
  std::string out;
  append_term(out, a_, "");
  append_term(out, b_, "√2");
  append_term(out, c_, "√3");
  append_term(out, d_, "√6");
  return out.empty() ? "0" : out;
}

std::string ExactScalar::str() const {
  if (im_.is_zero()) return re_.str();
  std::string out = re_.is_zero() ? "" : re_.str();
  std::string im = im_.str();
  if (out.empty()) return "(" + im + ")i";
  return out + " + (" + im + ")i";
}

namespace {

struct Cursor {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() { return s[pos]; }
  bool consume(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool consume(std::string_view word) {
    skip_ws();
    if (s.substr(pos, word.size()) == word) {
      pos += word.size();
      return true;
    }
    return false;
  }
};

[[noreturn]] void parse_fail(std::string_view text) {
  throw std::invalid_argument("ExactReal::parse: malformed value '" + std::string(text) + "'");
}

}  // namespace

ExactReal ExactReal::parse(std::string_view text) {
  Cursor cur{text};
  Rational comp[4] = {Rational(0), Rational(0), Rational(0), Rational(0)};
  bool any_term = false;

  while (!cur.done()) {
    int sign = 1;
    if (cur.consume('-')) {
      sign = -1;
    } else if (cur.consume('+')) {
      if (!any_term) parse_fail(text);  // no leading '+'
    } else if (any_term) {
      parse_fail(text);  // terms must be joined by +/-
    }

    cur.skip_ws();
    std::string digits;
    while (cur.pos < cur.s.size() &&
           (std::isdigit(static_cast<unsigned char>(cur.s[cur.pos])) || cur.s[cur.pos] == '/')) {
      digits += cur.s[cur.pos];
      ++cur.pos;
    }

    Rational coef(1);
    if (!digits.empty()) {
      if (digits.front() == '/' || digits.back() == '/' ||
          digits.find("//") != std::string::npos) {
        parse_fail(text);
      }
      coef = Rational(digits);
      coef.canonicalize();
    }

    int slot = 0;
    if (cur.consume("√2") || cur.consume("sqrt2")) {
      slot = 1;
    } else if (cur.consume("√3") || cur.consume("sqrt3")) {
      slot = 2;
    } else if (cur.consume("√6") || cur.consume("sqrt6")) {
      slot = 3;
    } else if (digits.empty()) {
      parse_fail(text);  // bare sign with neither number nor radical
    }

    comp[slot] += sign * coef;
    any_term = true;
  }

  if (!any_term) parse_fail(text);
  return ExactReal(comp[0], comp[1], comp[2], comp[3]);
}

}  // namespace su3st
