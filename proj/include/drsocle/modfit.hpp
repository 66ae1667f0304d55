#pragma once

// The graded ring of quasimodular forms Q[G2, G4, G6] and recognition of a
// truncated q-series as an element of it by exact linear algebra.

#include "drsocle/exact.hpp"
#include "drsocle/qseries.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace drsocle {

/// Exponents (a, b, c) of the monomial G2^a G4^b G6^c.
using Exponent = std::array<int, 3>;

inline int weight(const Exponent& e) { return 2 * e[0] + 4 * e[1] + 6 * e[2]; }

class QuasimodularPoly {
 public:
  using Terms = std::map<Exponent, Rational>;

  QuasimodularPoly() = default;
  explicit QuasimodularPoly(Terms terms);

  static QuasimodularPoly monomial(const Exponent& e, const Rational& c = Rational(1));

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  /// Coefficient of a monomial (0 when absent).
  [[nodiscard]] Rational coeff(const Exponent& e) const;
  /// Highest monomial weight; -1 for the zero polynomial.
  [[nodiscard]] int max_weight() const;

  void add_term(const Exponent& e, const Rational& c);

  QuasimodularPoly& operator+=(const QuasimodularPoly& rhs);
  QuasimodularPoly& operator*=(const Rational& s);

  friend bool operator==(const QuasimodularPoly&, const QuasimodularPoly&) = default;

 private:
  Terms terms_;
};

QuasimodularPoly operator+(QuasimodularPoly a, const QuasimodularPoly& b);
QuasimodularPoly operator-(QuasimodularPoly a, const QuasimodularPoly& b);
QuasimodularPoly operator*(QuasimodularPoly a, const Rational& s);
QuasimodularPoly operator*(const QuasimodularPoly& a, const QuasimodularPoly& b);

/// All exponents of weight <= max_weight, ordered by weight, then
/// lexicographically descending within a weight.
std::vector<Exponent> basis(int max_weight);

/// Substitute the Eisenstein series and expand to q^order.
QSeries evaluate(const QuasimodularPoly& p, int order);

/// Terms of weight exactly `w`.
QuasimodularPoly graded_part(const QuasimodularPoly& p, int w);

struct FitOptions {
  /// Drop the q^0 equation (the series constant is a placeholder).
  bool free_constant = false;
  /// Required surplus equations beyond the number of unknowns.
  int margin = 5;
};

struct FitResult {
  bool consistent = false;
  QuasimodularPoly poly;
  /// Equations beyond rank that were checked and matched.
  int surplus = 0;
  /// First q-power whose equation contradicts the earlier ones.
  std::optional<int> inconsistent_power;
  /// In free-constant mode: q^0 coefficient of evaluate(poly). The weight-0
  /// monomial cannot be identified without that row and is fixed to 0.
  std::optional<Rational> implied_constant;
};

/// Solve exactly for the coefficients of `s` over basis(max_weight).
/// Throws std::invalid_argument if the system has fewer than
/// unknowns + margin equations or is rank deficient, and std::logic_error
/// when s has an unknown constant but free_constant is off.
FitResult fit(const QSeries& s, int max_weight, FitOptions options = {});

}  // namespace drsocle
