#pragma once

// Laurent expansions in w = 2*pi*i*z with q-series coefficients, and the
// necklace coefficient series whose quasimodular top-weight part is checked
// against derivatives of Eisenstein series.

#include "drsocle/exact.hpp"
#include "drsocle/modfit.hpp"
#include "drsocle/qseries.hpp"

#include <optional>
#include <string>
#include <vector>

namespace drsocle {

/// sum_{e=-pole_order}^{w_order} coeff(e) * w^e, each coeff a QSeries of a
/// common q-order.
class LaurentQW {
 public:
  LaurentQW(int pole_order, int w_order, int q_order);

  [[nodiscard]] int pole_order() const { return pole_order_; }
  [[nodiscard]] int w_order() const { return w_order_; }
  [[nodiscard]] int q_order() const { return q_order_; }

  /// Coefficient of w^e; the zero series outside the window.
  [[nodiscard]] const QSeries& coeff(int e) const;
  QSeries& coeff_mut(int e);

  /// Terms with e < 0.
  [[nodiscard]] LaurentQW principal_part() const;
  /// Terms with e >= 0 (the regularized expansion).
  [[nodiscard]] LaurentQW regular_part() const;

  friend LaurentQW operator-(const LaurentQW& a, const LaurentQW& b);
  friend bool operator==(const LaurentQW&, const LaurentQW&) = default;

 private:
  int pole_order_;
  int w_order_;
  int q_order_;
  std::vector<QSeries> coeffs_;
  QSeries zero_;
};

/// sum_{a != 0} a p^a / (1 - q^a) in 0 < |q| < |p| < 1, expanded at p = e^w.
/// The q^0 part is e^w/(e^w - 1)^2; the q^n part is sum_{a | n} a (e^{aw} + e^{-aw}).
LaurentQW propagator_expansion(int q_order, int pole_order, int w_order);

/// w^-2 + 2 sum_l G_{2l+2}(q) w^{2l} / (2l)!.
LaurentQW weierstrass_expansion(int q_order, int w_order,
                                DivisorExponent exponent = DivisorExponent::k_minus_one);

struct Mismatch {
  int q_power;
  int w_power;
};

/// Coefficient-wise comparison of the two expansions over the window
/// w^-2..w^w_order, q^0..q^q_order. Returns the first mismatch scanning
/// q-powers outermost.
std::optional<Mismatch> check_propagator_identity(
    int q_order, int w_order, DivisorExponent exponent = DivisorExponent::k_minus_one);

struct NecklaceCoefficientSeries {
  int g;
  int j_plus;
  int j_minus;
  /// Constant is unknown exactly when j_minus == 0.
  QSeries series;
};

/// sum_{a != 0} a^{2g-2} (a/(1-q^a))^{j_plus} (-a/(1-q^{-a}))^{j_minus}, to q^q_order.
NecklaceCoefficientSeries necklace_coefficient_series(int g, int j_plus, int j_minus, int q_order);

/// (2/(m-1)!) (q d/dq)^{m-1} G_{2g}.
QSeries top_weight_target(int g, int m, int q_order);

struct TopWeightReport {
  bool pass = false;
  int weight = 0;
  FitResult fit;
  QuasimodularPoly top_part;
  /// Lower-weight remainder of the fit.
  QuasimodularPoly lower_part;
  std::string message;
};

/// Smallest q-order accepted by top_weight_check for m = j_plus + j_minus.
int top_weight_min_order(int g, int m, int margin = 5);

/// Fit the necklace series in weight <= 2g-2+2m, take the weight 2g-2+2m
/// part and compare it exactly with top_weight_target.
TopWeightReport top_weight_check(int g, int j_plus, int j_minus, int q_order, int margin = 5);

/// 2 (B_{2g}/(4g) + G_{2g}(q)), the one-loop (m = 1) coefficient.
QSeries loop_coefficient(int g, int q_order);

}  // namespace drsocle
