#include "drsocle/elliptic.hpp"

#include <stdexcept>

namespace drsocle {

LaurentQW::LaurentQW(int pole_order, int w_order, int q_order)
    : pole_order_(pole_order),
      w_order_(w_order),
      q_order_(q_order),
      coeffs_(static_cast<std::size_t>(pole_order + w_order + 1), QSeries(q_order)),
      zero_(q_order) {
  if (pole_order < 0 || w_order < -pole_order - 1) throw std::invalid_argument("bad Laurent window");
}

const QSeries& LaurentQW::coeff(int e) const {
  if (e < -pole_order_ || e > w_order_) return zero_;
  return coeffs_[static_cast<std::size_t>(e + pole_order_)];
}

QSeries& LaurentQW::coeff_mut(int e) {
  if (e < -pole_order_ || e > w_order_) throw std::out_of_range("w-power outside Laurent window");
  return coeffs_[static_cast<std::size_t>(e + pole_order_)];
}

LaurentQW LaurentQW::principal_part() const {
  LaurentQW out(pole_order_, w_order_, q_order_);
  for (int e = -pole_order_; e < 0 && e <= w_order_; ++e) out.coeff_mut(e) = coeff(e);
  return out;
}

LaurentQW LaurentQW::regular_part() const {
  LaurentQW out(pole_order_, w_order_, q_order_);
  for (int e = 0; e <= w_order_; ++e) out.coeff_mut(e) = coeff(e);
  return out;
}

LaurentQW operator-(const LaurentQW& a, const LaurentQW& b) {
  LaurentQW out(std::max(a.pole_order_, b.pole_order_), std::min(a.w_order_, b.w_order_),
                std::min(a.q_order_, b.q_order_));
  for (int e = -out.pole_order_; e <= out.w_order_; ++e) out.coeff_mut(e) = a.coeff(e) - b.coeff(e);
  return out;
}

LaurentQW propagator_expansion(int q_order, int pole_order, int w_order) {
  if (pole_order < 2) throw std::invalid_argument("propagator needs pole order >= 2");
  LaurentQW out(pole_order, w_order, q_order);

  // e^w/(e^w-1)^2 = -d/dw (1/(e^w-1)) = w^-2 - sum_{n>=2} (n-1) B_n w^{n-2} / n!
  out.coeff_mut(-2).set(0, Rational(1));
  for (int e = 0; e <= w_order; ++e) {
    const int n = e + 2;
    const Rational c = -Rational(n - 1) * bernoulli(n) / Rational(factorial(n));
    out.coeff_mut(e).set(0, c);
  }

  // sum_{a|n} a (e^{aw} + e^{-aw}): only even w-powers survive.
  for (int n = 1; n <= q_order; ++n) {
    for (int a = 1; a <= n; ++a) {
      if (n % a != 0) continue;
      for (int e = 0; e <= w_order; e += 2) {
        const Rational term = ratio(2 * ipow(Integer(a), e + 1), factorial(e));
        QSeries& s = out.coeff_mut(e);
        s.set(n, s.coeffs()[n] + term);
      }
    }
  }
  return out;
}

LaurentQW weierstrass_expansion(int q_order, int w_order, DivisorExponent exponent) {
  LaurentQW out(2, w_order, q_order);
  out.coeff_mut(-2).set(0, Rational(1));
  for (int l = 0; 2 * l <= w_order; ++l) {
    out.coeff_mut(2 * l) = eisenstein(2 * l + 2, q_order, exponent) * ratio(2, factorial(2 * l));
  }
  return out;
}

std::optional<Mismatch> check_propagator_identity(int q_order, int w_order, DivisorExponent exponent) {
  const LaurentQW lhs = propagator_expansion(q_order, 2, w_order);
  const LaurentQW rhs = weierstrass_expansion(q_order, w_order, exponent);
  for (int n = 0; n <= q_order; ++n) {
    for (int e = -2; e <= w_order; ++e) {
      if (lhs.coeff(e).coeffs()[n] != rhs.coeff(e).coeffs()[n]) return Mismatch{n, e};
    }
  }
  return std::nullopt;
}

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Adds c * q^{shift} / (1 - q^a)^m to `out`, skipping the q^0 term when
// skip_constant is set.
void add_shifted_geometric_power(std::vector<Rational>& out, int q_order, const Integer& c, int a,
                                 int shift, int m, bool skip_constant) {
  for (int k = 0; shift + a * k <= q_order; ++k) {
    const int n = shift + a * k;
    if (n == 0 && skip_constant) continue;
    out[static_cast<std::size_t>(n)] += Rational(c * binomial(k + m - 1, m - 1));
  }
}

}  // namespace

NecklaceCoefficientSeries necklace_coefficient_series(int g, int j_plus, int j_minus, int q_order) {
  if (g < 1 || j_plus < 1 || j_minus < 0) {
    throw std::invalid_argument("necklace series needs g >= 1, j_plus >= 1, j_minus >= 0");
  }
  const int m = j_plus + j_minus;
  const int power = 2 * g - 2 + m;
  std::vector<Rational> c(static_cast<std::size_t>(q_order) + 1, Rational(0));

  // a > 0:  a^{2g-2+m} q^{a j_minus} / (1-q^a)^m
  const int a_max = q_order == 0 ? 0 : ceil_div(q_order, std::max(1, j_minus));
  for (int a = 1; a <= a_max; ++a) {
    add_shifted_geometric_power(c, q_order, ipow(Integer(a), power), a, a * j_minus, m, j_minus == 0);
  }
  // a = -b < 0:  b^{2g-2+m} q^{b j_plus} / (1-q^b)^m
  const int b_max = q_order == 0 ? 0 : ceil_div(q_order, j_plus);
  for (int b = 1; b <= b_max; ++b) {
    add_shifted_geometric_power(c, q_order, ipow(Integer(b), power), b, b * j_plus, m, false);
  }

  QSeries s(q_order, std::move(c));
  if (j_minus == 0) s.mark_constant_unknown();
  return {g, j_plus, j_minus, std::move(s)};
}

QSeries top_weight_target(int g, int m, int q_order) {
  return q_d_q(eisenstein(2 * g, q_order), m - 1) * ratio(2, factorial(m - 1));
}

int top_weight_min_order(int g, int m, int margin) {
  const int dim = static_cast<int>(basis(2 * g - 2 + 2 * m).size());
  return dim + margin;
}

TopWeightReport top_weight_check(int g, int j_plus, int j_minus, int q_order, int margin) {
  const int m = j_plus + j_minus;
  TopWeightReport report;
  report.weight = 2 * g - 2 + 2 * m;
  if (q_order < top_weight_min_order(g, m, margin)) {
    throw std::invalid_argument("q_order " + std::to_string(q_order) + " below the minimum " +
                                std::to_string(top_weight_min_order(g, m, margin)) + " for weight " +
                                std::to_string(report.weight));
  }
  const auto necklace = necklace_coefficient_series(g, j_plus, j_minus, q_order);
  report.fit = fit(necklace.series, report.weight, {.free_constant = j_minus == 0, .margin = margin});
  if (!report.fit.consistent) {
    report.message = "series is not quasimodular of weight <= " + std::to_string(report.weight) +
                     ": first inconsistent coefficient q^" + std::to_string(*report.fit.inconsistent_power);
    return report;
  }
  report.top_part = graded_part(report.fit.poly, report.weight);
  report.lower_part = report.fit.poly - report.top_part;
  const QSeries top = evaluate(report.top_part, q_order);
  const QSeries target = top_weight_target(g, m, q_order);
  for (int n = 0; n <= q_order; ++n) {
    if (top.coeffs()[n] != target.coeffs()[n]) {
      report.message = "top-weight part differs from (2/(m-1)!) (q d/dq)^{m-1} G_{2g} at q^" + std::to_string(n);
      return report;
    }
  }
  report.pass = true;
  return report;
}

QSeries loop_coefficient(int g, int q_order) {
  if (g < 1) throw std::invalid_argument("loop coefficient needs g >= 1");
  QSeries s = eisenstein(2 * g, q_order);
  s.set(0, s[0] + bernoulli(2 * g) / Rational(4 * g));
  return s * Rational(2);
}

}  // namespace drsocle
