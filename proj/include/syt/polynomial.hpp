#pragma once

/*
 * Dense univariate polynomials with arbitrary-precision integer
 * coefficients. Coefficient i is the coefficient of q^i. Normal form has no
 * trailing zero coefficients; the zero polynomial is the empty vector.
 */

#include <algorithm>
#include <string>
#include <vector>

#include "syt/base.hpp"

namespace syt {

class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPolynomial one() { return IntPolynomial({Int(1)}); }
  static IntPolynomial monomial(int degree, Int coeff = Int(1)) {
    std::vector<Int> c(static_cast<std::size_t>(degree + 1), Int(0));
    c.back() = std::move(coeff);
    return IntPolynomial(std::move(c));
  }
  // 1 + q + ... + q^(a-1), the q-analogue of the integer a >= 0.
  static IntPolynomial q_int(int a) {
    return IntPolynomial(std::vector<Int>(static_cast<std::size_t>(a), Int(1)));
  }

  bool zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(int i) const {
    return i >= 0 && i <= degree() ? c_[static_cast<std::size_t>(i)] : Int(0);
  }
  void add_to_coeff(int i, const Int& v) {
    if (i < 0) fail(errc::bad_argument, "negative exponent");
    if (i >= static_cast<int>(c_.size())) c_.resize(static_cast<std::size_t>(i + 1), Int(0));
    c_[static_cast<std::size_t>(i)] += v;
    trim();
  }

  Int sum_of_coeffs() const {
    Int s = 0;
    for (const Int& v : c_) s += v;
    return s;
  }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return IntPolynomial(std::move(c));
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.zero() || b.zero()) return IntPolynomial();
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(c));
  }

  // Exact division; the remainder must vanish.
  friend IntPolynomial operator/(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.zero()) fail(errc::bad_argument, "division by the zero polynomial");
    std::vector<Int> rem = a.c_;
    std::vector<Int> quot(rem.size() >= b.c_.size() ? rem.size() - b.c_.size() + 1 : 0, Int(0));
    for (int i = static_cast<int>(rem.size()) - static_cast<int>(b.c_.size()); i >= 0; --i) {
      Int lead = rem[static_cast<std::size_t>(i) + b.c_.size() - 1];
      if (lead == 0) continue;
      Int q, r;
      boost::multiprecision::divide_qr(lead, b.c_.back(), q, r);
      if (r != 0) fail(errc::bad_argument, "polynomial division is not exact");
      quot[static_cast<std::size_t>(i)] = q;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        rem[static_cast<std::size_t>(i) + j] -= q * b.c_[j];
    }
    for (const Int& v : rem)
      if (v != 0) fail(errc::bad_argument, "polynomial division is not exact");
    return IntPolynomial(std::move(quot));
  }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

  // Palindromic between its lowest and highest nonzero coefficients.
  bool palindromic() const {
    if (zero()) return true;
    int lo = 0;
    while (c_[static_cast<std::size_t>(lo)] == 0) ++lo;
    for (int i = lo, j = degree(); i < j; ++i, --j)
      if (c_[static_cast<std::size_t>(i)] != c_[static_cast<std::size_t>(j)]) return false;
    return true;
  }

  // JSON array of decimal strings, lowest degree first.
  std::string to_json() const {
    std::string out = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) out += ',';
      out += '"' + c_[i].str() + '"';
    }
    return out + "]";
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

}  // namespace syt
