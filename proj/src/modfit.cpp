#include "drsocle/modfit.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace drsocle {

QuasimodularPoly::QuasimodularPoly(Terms terms) {
  for (auto& [e, c] : terms) add_term(e, c);
}

QuasimodularPoly QuasimodularPoly::monomial(const Exponent& e, const Rational& c) {
  QuasimodularPoly p;
  p.add_term(e, c);
  return p;
}

Rational QuasimodularPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int QuasimodularPoly::max_weight() const {
  int w = -1;
  for (const auto& [e, c] : terms_) w = std::max(w, weight(e));
  return w;
}

void QuasimodularPoly::add_term(const Exponent& e, const Rational& c) {
  if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw std::invalid_argument("negative exponent in monomial");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QuasimodularPoly& QuasimodularPoly::operator+=(const QuasimodularPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

QuasimodularPoly& QuasimodularPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

QuasimodularPoly operator+(QuasimodularPoly a, const QuasimodularPoly& b) { return a += b; }
QuasimodularPoly operator-(QuasimodularPoly a, const QuasimodularPoly& b) { return a += b * Rational(-1); }
QuasimodularPoly operator*(QuasimodularPoly a, const Rational& s) { return a *= s; }

QuasimodularPoly operator*(const QuasimodularPoly& a, const QuasimodularPoly& b) {
  QuasimodularPoly r;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    }
  }
  return r;
}

std::vector<Exponent> basis(int max_weight) {
  std::vector<Exponent> out;
  for (int c = 0; 6 * c <= max_weight; ++c) {
    for (int b = 0; 6 * c + 4 * b <= max_weight; ++b) {
      for (int a = 0; 6 * c + 4 * b + 2 * a <= max_weight; ++a) out.push_back({a, b, c});
    }
  }
  std::sort(out.begin(), out.end(), [](const Exponent& x, const Exponent& y) {
    if (weight(x) != weight(y)) return weight(x) < weight(y);
    return x > y;
  });
  return out;
}

namespace {

// Powers G^0..G^max of one generator, expanded to a fixed order.
class PowerTable {
 public:
  PowerTable(int k, int order) : base_(eisenstein(k, order)), powers_{QSeries::constant(order, Rational(1))} {}

  const QSeries& power(int e) {
    while (static_cast<int>(powers_.size()) <= e) powers_.push_back(powers_.back() * base_);
    return powers_[static_cast<std::size_t>(e)];
  }

 private:
  QSeries base_;
  std::vector<QSeries> powers_;
};

QSeries evaluate_monomial(const Exponent& e, PowerTable& g2, PowerTable& g4, PowerTable& g6) {
  return g2.power(e[0]) * g4.power(e[1]) * g6.power(e[2]);
}

}  // namespace

QSeries evaluate(const QuasimodularPoly& p, int order) {
  PowerTable g2(2, order), g4(4, order), g6(6, order);
  QSeries out(order);
  for (const auto& [e, c] : p.terms()) out += evaluate_monomial(e, g2, g4, g6) * c;
  return out;
}

QuasimodularPoly graded_part(const QuasimodularPoly& p, int w) {
  QuasimodularPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (weight(e) == w) out.add_term(e, c);
  }
  return out;
}

FitResult fit(const QSeries& s, int max_weight, FitOptions options) {
  if (max_weight < 0) throw std::invalid_argument("max_weight must be non-negative");
  if (!s.constant_known() && !options.free_constant) {
    throw std::logic_error("series constant is unknown; fit requires free_constant mode");
  }
  if (options.margin < 1) throw std::invalid_argument("fit margin must be at least 1");

  std::vector<Exponent> unknowns = basis(max_weight);
  if (options.free_constant) unknowns.erase(unknowns.begin());  // the weight-0 monomial
  const int first_row = options.free_constant ? 1 : 0;
  const int rows = s.order() - first_row + 1;
  const int cols = static_cast<int>(unknowns.size());
  if (rows < cols + options.margin) {
    throw std::invalid_argument("underdetermined fit: " + std::to_string(rows) + " equations for " +
                                std::to_string(cols) + " unknowns with margin " +
                                std::to_string(options.margin) + "; raise the series order");
  }

  PowerTable g2(2, s.order()), g4(4, s.order()), g6(6, s.order());
  std::vector<QSeries> columns;
  columns.reserve(unknowns.size());
  for (const auto& e : unknowns) columns.push_back(evaluate_monomial(e, g2, g4, g6));

  // Rows are fed in increasing q-power and reduced against the pivot rows
  // accumulated so far. Each stored row is zero in the pivot columns of the
  // rows stored before it.
  struct PivotRow {
    int pivot;
    std::vector<Rational> a;
    Rational rhs;
  };
  std::vector<PivotRow> echelon;
  FitResult result;

  for (int n = first_row; n <= s.order(); ++n) {
    std::vector<Rational> a(static_cast<std::size_t>(cols));
    for (int j = 0; j < cols; ++j) a[j] = columns[j].coeffs()[n];
    Rational rhs = s.coeffs()[n];
    for (const auto& row : echelon) {
      if (a[row.pivot] == 0) continue;
      const Rational f = a[row.pivot];
      for (int j = 0; j < cols; ++j) {
        if (row.a[j] != 0) a[j] -= f * row.a[j];
      }
      rhs -= f * row.rhs;
    }
    auto nz = std::find_if(a.begin(), a.end(), [](const Rational& x) { return x != 0; });
    if (nz == a.end()) {
      if (rhs != 0) {
        result.inconsistent_power = n;
        return result;
      }
      ++result.surplus;
      continue;
    }
    const int pivot = static_cast<int>(nz - a.begin());
    const Rational inv = 1 / a[pivot];
    for (auto& x : a) x *= inv;
    rhs *= inv;
    echelon.push_back({pivot, std::move(a), std::move(rhs)});
  }

  if (static_cast<int>(echelon.size()) < cols) {
    throw std::invalid_argument("rank-deficient fit: rank " + std::to_string(echelon.size()) + " of " +
                                std::to_string(cols));
  }
  if (result.surplus < options.margin) {
    throw std::invalid_argument("fit verified only " + std::to_string(result.surplus) +
                                " surplus equations, need " + std::to_string(options.margin));
  }

  std::vector<Rational> x(static_cast<std::size_t>(cols), Rational(0));
  for (auto it = echelon.rbegin(); it != echelon.rend(); ++it) {
    Rational v = it->rhs;
    for (int j = 0; j < cols; ++j) {
      if (j != it->pivot && it->a[j] != 0) v -= it->a[j] * x[j];
    }
    x[it->pivot] = v;
  }
  for (int j = 0; j < cols; ++j) result.poly.add_term(unknowns[j], x[j]);
  result.consistent = true;
  if (options.free_constant) {
    Rational c(0);
    for (int j = 0; j < cols; ++j) c += x[j] * columns[j].coeffs()[0];
    result.implied_constant = c;
  }
  return result;
}

}  // namespace drsocle
