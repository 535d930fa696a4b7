#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bforest/polynomial.hpp"

namespace bforest {

/// eta_0 + sum_{j=1..k} eta_j (z^j + z^-j) with integer eta and eta_k != 0.
///
/// Palindromic by construction, so P(z) = P(1/z) always holds. The zero
/// polynomial has no coefficients and degree -1.
class SymmetricLaurentPoly {
 public:
  SymmetricLaurentPoly() = default;
  explicit SymmetricLaurentPoly(std::vector<Integer> eta) : eta_(std::move(eta)) { trim(); }

  static SymmetricLaurentPoly constant(const Integer& v) { return SymmetricLaurentPoly({v}); }

  /// z^j + z^-j (or the constant 2 for j = 0).
  static SymmetricLaurentPoly cosine(std::size_t j) {
    if (j == 0) return constant(2);
    std::vector<Integer> eta(j + 1, Integer(0));
    eta[j] = 1;
    return SymmetricLaurentPoly(std::move(eta));
  }

  /// Reads back the centred coefficients of z^k * P for some k; the input
  /// must be palindromic of even length 2k + 1 (trailing cancellations allowed).
  static SymmetricLaurentPoly from_shifted(const IntPoly& shifted, std::size_t k) {
    std::vector<Integer> eta(k + 1, Integer(0));
    for (std::size_t j = 0; j <= k; ++j) {
      const Integer hi = shifted[k + j];
      if (hi != shifted[k - j])
        throw Error(Errc::InvalidArgument, "polynomial is not palindromic about z^k");
      eta[j] = hi;
    }
    for (std::size_t i = 2 * k + 1; i < shifted.coeffs().size(); ++i)
      if (shifted[i] != 0) throw Error(Errc::InvalidArgument, "degree exceeds 2k");
    return SymmetricLaurentPoly(std::move(eta));
  }

  int degree() const noexcept { return static_cast<int>(eta_.size()) - 1; }
  bool is_zero() const noexcept { return eta_.empty(); }
  const std::vector<Integer>& eta() const noexcept { return eta_; }
  Integer eta(std::size_t j) const { return j < eta_.size() ? eta_[j] : Integer(0); }
  /// eta_k, the coefficient of z^k.
  const Integer& lead() const { return eta_.back(); }

  /// z^k * P(z), an ordinary polynomial of degree 2k.
  IntPoly shifted() const {
    if (is_zero()) return {};
    const std::size_t k = eta_.size() - 1;
    std::vector<Integer> c(2 * k + 1);
    c[k] = eta_[0];
    for (std::size_t j = 1; j <= k; ++j) c[k + j] = c[k - j] = eta_[j];
    return IntPoly(std::move(c));
  }

  /// Exact value at a nonzero rational point.
  Rational eval(const Rational& z) const {
    if (z == 0) throw Error(Errc::InvalidArgument, "Laurent polynomial evaluated at 0");
    Rational acc = 0;
    Rational zj = 1, zinv = 1 / z, zinvj = 1;
    for (std::size_t j = 0; j < eta_.size(); ++j) {
      if (j == 0) acc += Rational(eta_[0]);
      else acc += Rational(eta_[j]) * (zj + zinvj);
      zj *= z;
      zinvj *= zinv;
    }
    return acc;
  }

  /// P(e^{i theta}) = eta_0 + 2 sum eta_j cos(j theta), real on the unit circle.
  double eval_on_circle(double theta) const {
    double acc = eta_.empty() ? 0.0 : eta_[0].get_d();
    for (std::size_t j = 1; j < eta_.size(); ++j)
      acc += 2.0 * eta_[j].get_d() * std::cos(static_cast<double>(j) * theta);
    return acc;
  }

  /// P'(1) is always zero; P''(1) = 2 sum_j j^2 eta_j.
  Integer second_derivative_at_one() const {
    Integer acc = 0;
    for (std::size_t j = 1; j < eta_.size(); ++j)
      acc += Integer(2) * Integer(static_cast<unsigned long>(j * j)) * eta_[j];
    return acc;
  }

  Integer first_derivative_at_one() const {
    // sum_j j (c_j - c_{-j}) with c_j = c_{-j}
    return 0;
  }

  Integer value_at_one() const {
    Integer acc = eta(0);
    for (std::size_t j = 1; j < eta_.size(); ++j) acc += Integer(2) * eta_[j];
    return acc;
  }

  Integer value_at_minus_one() const {
    Integer acc = eta(0);
    for (std::size_t j = 1; j < eta_.size(); ++j) acc += (j % 2 ? Integer(-2) : Integer(2)) * eta_[j];
    return acc;
  }

  friend SymmetricLaurentPoly operator+(const SymmetricLaurentPoly& a, const SymmetricLaurentPoly& b) {
    std::vector<Integer> eta(std::max(a.eta_.size(), b.eta_.size()), Integer(0));
    for (std::size_t j = 0; j < eta.size(); ++j) eta[j] = a.eta(j) + b.eta(j);
    return SymmetricLaurentPoly(std::move(eta));
  }

  friend SymmetricLaurentPoly operator-(const SymmetricLaurentPoly& a, const SymmetricLaurentPoly& b) {
    std::vector<Integer> eta(std::max(a.eta_.size(), b.eta_.size()), Integer(0));
    for (std::size_t j = 0; j < eta.size(); ++j) eta[j] = a.eta(j) - b.eta(j);
    return SymmetricLaurentPoly(std::move(eta));
  }

  friend SymmetricLaurentPoly operator*(const SymmetricLaurentPoly& a, const SymmetricLaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const std::size_t k = a.eta_.size() - 1 + b.eta_.size() - 1;
    return from_shifted(a.shifted() * b.shifted(), k);
  }

  friend bool operator==(const SymmetricLaurentPoly& a, const SymmetricLaurentPoly& b) {
    return a.eta_ == b.eta_;
  }

  /// e.g. "10 - 6(z^1+z^-1) + (z^2+z^-2)".
  std::string to_string() const {
    if (eta_.empty()) return "0";
    std::string out;
    for (std::size_t j = 0; j < eta_.size(); ++j) {
      const Integer& v = eta_[j];
      if (v == 0 && !(j == 0 && eta_.size() == 1)) continue;
      Integer mag = abs_int(v);
      if (out.empty()) out += v < 0 ? "-" : "";
      else out += v < 0 ? " - " : " + ";
      if (j == 0) {
        out += mag.get_str();
      } else {
        if (mag != 1) out += mag.get_str();
        out += "(z^" + std::to_string(j) + "+z^-" + std::to_string(j) + ")";
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!eta_.empty() && eta_.back() == 0) eta_.pop_back();
  }

  std::vector<Integer> eta_;
};

/// K(w) with P(z) = K((z + 1/z) / 2): K = eta_0 + sum 2 eta_j T_j(w).
inline IntPoly chebyshev_transform(const SymmetricLaurentPoly& p) {
  if (p.is_zero()) return {};
  IntPoly k = IntPoly::constant(p.eta(0));
  IntPoly prev{Integer(1)};
  IntPoly cur{Integer(0), Integer(1)};
  const IntPoly two_w{Integer(0), Integer(2)};
  for (std::size_t j = 1; j < p.eta().size(); ++j) {
    k += cur * (Integer(2) * p.eta(j));
    IntPoly next = two_w * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return k;
}

}  // namespace bforest
