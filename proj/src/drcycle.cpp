#include "drsocle/drcycle.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

namespace drsocle {

namespace {

void require_genus(int g) {
  if (g < 0) throw std::invalid_argument("genus must be non-negative, got " + std::to_string(g));
}

}  // namespace

Rational dr3_closed(const DRQuery& q) {
  require_genus(q.g);
  const Integer a1(q.a1), a2(q.a2);
  const Integer sum_sq = (a1 + a2) * (a1 + a2);
  const Integer quad = a1 * a1 - a1 * a2 + a2 * a2;
  const Integer outer = double_factorial_odd(2 * q.g + 1) * ipow(Integer(12), q.g);
  Rational total(0);
  for (int j = 0; j <= q.g; ++j) {
    const Integer even_df = ipow(Integer(2), j) * factorial(j);  // (2j)!!
    total += ratio(double_factorial_odd(2 * j - 1) * ipow(sum_sq, j) * ipow(quad, q.g - j), outer * even_df);
  }
  return total;
}

Rational dr3_recursive(const DRQuery& q) {
  require_genus(q.g);
  const Integer a1(q.a1), a2(q.a2);
  const Integer sum_sq = (a1 + a2) * (a1 + a2);
  const Integer quad = a1 * a1 - a1 * a2 + a2 * a2;

  using Key = std::tuple<int, std::string, std::string>;
  static std::mutex mutex;
  static std::map<Key, Rational> memo;
  const std::string quad_key = quad.get_str(), sum_key = sum_sq.get_str();

  std::unique_lock lock(mutex);
  int start = 0;
  Rational value(1);
  for (int g = q.g; g > 0; --g) {
    auto it = memo.find(Key{g, quad_key, sum_key});
    if (it != memo.end()) {
      start = g;
      value = it->second;
      break;
    }
  }
  for (int g = start + 1; g <= q.g; ++g) {
    const Rational two_point = ratio(ipow(sum_sq, g), ipow(Integer(24), g) * factorial(g));
    value = (two_point + ratio(quad, 12) * value) / Rational(2 * g + 1);
    memo.emplace(Key{g, quad_key, sum_key}, value);
  }
  return value;
}

Rational dr2(int g, long b) {
  require_genus(g);
  return ratio(ipow(Integer(b), 2 * g), ipow(Integer(24), g) * factorial(g));
}

BsszOutcome dr3_bssz_check(int g, long a1, long a2) {
  if (g < 1 || a1 <= 0 || a2 <= 0) {
    throw std::invalid_argument("BSSZ relation is checked for g >= 1 and positive multiplicities");
  }
  const Rational s(Integer(a1) + Integer(a2));
  BsszOutcome out;
  out.lhs = s * Rational(2 * g + 1) * dr3_closed({g, a1, a2});
  out.rhs = s * dr2(g, a1 + a2) +
            2 * dr3_closed({g - 1, a1, a2}) * (Rational(a1) * dr2(1, a1) + Rational(a2) * dr2(1, a2));
  out.pass = out.lhs == out.rhs;
  return out;
}

Rational dr_standard(int g) { return dr3_closed({g, 1, -1}); }

}  // namespace drsocle
