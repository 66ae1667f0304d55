#pragma once

#include "drsocle/exact.hpp"

#include <cstddef>
#include <vector>

namespace drsocle {

/// Power series in q truncated after q^order, with exact coefficients.
///
/// A series may carry an unknown constant term (constant_known() == false):
/// this happens for regularized sums whose q^0 coefficient diverges. Adding
/// or scaling such a series propagates the flag; multiplying it throws,
/// since every product coefficient would read the unknown value.
class QSeries {
 public:
  QSeries() = default;
  explicit QSeries(int order);
  QSeries(int order, std::vector<Rational> coeffs, bool constant_known = true);

  static QSeries constant(int order, const Rational& c);
  static QSeries zero(int order) { return QSeries(order); }

  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] bool constant_known() const { return constant_known_; }

  /// Coefficient of q^n; 0 past the truncation. Throws std::logic_error for
  /// n == 0 when the constant is unknown.
  [[nodiscard]] const Rational& operator[](int n) const;
  /// Unchecked access, including a placeholder q^0 entry.
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }

  void set(int n, const Rational& c);
  void mark_constant_unknown();

  [[nodiscard]] QSeries truncated(int order) const;

  QSeries& operator+=(const QSeries& rhs);
  QSeries& operator-=(const QSeries& rhs);
  QSeries& operator*=(const Rational& s);

  friend bool operator==(const QSeries& a, const QSeries& b);

 private:
  int order_ = 0;
  std::vector<Rational> coeffs_{Rational(0)};
  bool constant_known_ = true;
};

QSeries operator+(QSeries a, const QSeries& b);
QSeries operator-(QSeries a, const QSeries& b);
QSeries operator-(QSeries a);
QSeries operator*(QSeries a, const Rational& s);
QSeries operator*(const Rational& s, QSeries a);
/// Cauchy product truncated at min(a.order(), b.order()).
QSeries operator*(const QSeries& a, const QSeries& b);

/// Exact agreement of q^from..q^min(order) coefficients, ignoring flags.
bool agree_from(const QSeries& a, const QSeries& b, int from);

/// q d/dq: multiplies the q^n coefficient by n. Result has a known constant (0).
QSeries q_d_q(const QSeries& s);
QSeries q_d_q(const QSeries& s, int times);

/// Sum of d^power over positive divisors d of n (n >= 1).
Integer divisor_power_sum(int n, int power);

/// Which divisor power enters the Eisenstein coefficients.
enum class DivisorExponent {
  k_minus_one,  ///< sigma_{k-1}(n): the weight-k convention.
  k,            ///< sigma_k(n): as literally printed in the source display.
};

/// G_k(q) = -B_k/(2k) + sum_{n>=1} sigma(n) q^n, k even >= 2.
QSeries eisenstein(int k, int order, DivisorExponent exponent = DivisorExponent::k_minus_one);

}  // namespace drsocle
