#include "drsocle/qseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace drsocle {

QSeries::QSeries(int order) : order_(order), coeffs_(static_cast<std::size_t>(order) + 1, Rational(0)) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
}

QSeries::QSeries(int order, std::vector<Rational> coeffs, bool constant_known)
    : order_(order), coeffs_(std::move(coeffs)), constant_known_(constant_known) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  if (coeffs_.size() > static_cast<std::size_t>(order) + 1) {
    throw std::invalid_argument("more coefficients than the truncation order admits");
  }
  coeffs_.resize(static_cast<std::size_t>(order) + 1, Rational(0));
}

QSeries QSeries::constant(int order, const Rational& c) {
  QSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

const Rational& QSeries::operator[](int n) const {
  static const Rational zero(0);
  if (n < 0 || n > order_) return zero;
  if (n == 0 && !constant_known_) {
    throw std::logic_error("read of an unknown (regularized) q^0 coefficient");
  }
  return coeffs_[static_cast<std::size_t>(n)];
}

void QSeries::set(int n, const Rational& c) {
  if (n < 0 || n > order_) throw std::out_of_range("coefficient index outside truncation window");
  coeffs_[static_cast<std::size_t>(n)] = c;
  if (n == 0) constant_known_ = true;
}

void QSeries::mark_constant_unknown() {
  coeffs_[0] = 0;
  constant_known_ = false;
}

QSeries QSeries::truncated(int order) const {
  if (order > order_) throw std::invalid_argument("cannot extend a truncated series");
  std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + order + 1);
  return QSeries(order, std::move(c), constant_known_);
}

QSeries& QSeries::operator+=(const QSeries& rhs) {
  if (rhs.order_ < order_) {
    order_ = rhs.order_;
    coeffs_.resize(static_cast<std::size_t>(order_) + 1);
  }
  for (int n = 0; n <= order_; ++n) coeffs_[n] += rhs.coeffs_[n];
  constant_known_ = constant_known_ && rhs.constant_known_;
  if (!constant_known_) coeffs_[0] = 0;
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& rhs) { return *this += -rhs; }

QSeries& QSeries::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

bool operator==(const QSeries& a, const QSeries& b) {
  return a.order_ == b.order_ && a.constant_known_ == b.constant_known_ && a.coeffs_ == b.coeffs_;
}

QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }

QSeries operator-(QSeries a) {
  a *= Rational(-1);
  return a;
}

QSeries operator*(QSeries a, const Rational& s) { return a *= s; }
QSeries operator*(const Rational& s, QSeries a) { return a *= s; }

QSeries operator*(const QSeries& a, const QSeries& b) {
  if (!a.constant_known() || !b.constant_known()) {
    throw std::logic_error("product with a series whose q^0 coefficient is unknown");
  }
  const int order = std::min(a.order(), b.order());
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  for (int i = 0; i <= order; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; i + j <= order; ++j) c[i + j] += x[i] * y[j];
  }
  return QSeries(order, std::move(c));
}

bool agree_from(const QSeries& a, const QSeries& b, int from) {
  const int order = std::min(a.order(), b.order());
  for (int n = std::max(from, 0); n <= order; ++n) {
    if (a.coeffs()[n] != b.coeffs()[n]) return false;
  }
  return true;
}

QSeries q_d_q(const QSeries& s) {
  std::vector<Rational> c(s.coeffs());
  c[0] = 0;
  for (int n = 1; n <= s.order(); ++n) c[n] *= n;
  return QSeries(s.order(), std::move(c));
}

QSeries q_d_q(const QSeries& s, int times) {
  if (times < 0) throw std::invalid_argument("negative derivative count");
  if (times == 0) return s;
  QSeries r = q_d_q(s);
  for (int i = 1; i < times; ++i) r = q_d_q(r);
  return r;
}

Integer divisor_power_sum(int n, int power) {
  if (n < 1) throw std::invalid_argument("divisor sum needs n >= 1");
  Integer acc(0);
  for (int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    acc += ipow(Integer(d), power);
    if (d != n / d) acc += ipow(Integer(n / d), power);
  }
  return acc;
}

QSeries eisenstein(int k, int order, DivisorExponent exponent) {
  if (k < 2 || k % 2 != 0) {
    throw std::invalid_argument("eisenstein weight must be even and >= 2, got " + std::to_string(k));
  }
  const int power = exponent == DivisorExponent::k_minus_one ? k - 1 : k;
  QSeries s(order);
  s.set(0, -bernoulli(k) / Rational(2 * k));
  for (int n = 1; n <= order; ++n) s.set(n, Rational(divisor_power_sum(n, power)));
  return s;
}

}  // namespace drsocle
