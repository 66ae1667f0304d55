#include "drsocle/exact.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace drsocle {

namespace {

struct BernoulliCache {
  std::mutex mutex;
  std::vector<Rational> values{Rational(1)};
};

struct FactorialCache {
  std::mutex mutex;
  std::vector<Integer> values{Integer(1)};
};

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

FactorialCache& factorial_cache() {
  static FactorialCache cache;
  return cache;
}

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

std::string to_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  auto num_text = text.substr(0, slash);
  if (!num_text.empty() && num_text[0] == '+') num_text.remove_prefix(1);
  if (!is_integer_literal(num_text, true)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  Integer num{std::string(num_text)};
  Integer den(1);
  if (slash != std::string_view::npos) {
    const auto den_text = text.substr(slash + 1);
    if (!is_integer_literal(den_text, true)) {
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    den = Integer(std::string(den_text[0] == '+' ? den_text.substr(1) : den_text));
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("division by zero");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative integer");
  auto& cache = factorial_cache();
  std::lock_guard lock(cache.mutex);
  while (static_cast<int>(cache.values.size()) <= n) {
    const auto i = cache.values.size();
    cache.values.push_back(cache.values.back() * static_cast<unsigned long>(i));
  }
  return cache.values[static_cast<std::size_t>(n)];
}

Integer binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("binomial requires 0 <= k <= n");
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational bernoulli(int k) {
  if (k < 0) throw std::invalid_argument("bernoulli index must be non-negative");
  auto& cache = bernoulli_cache();
  std::lock_guard lock(cache.mutex);
  // sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1
  while (static_cast<int>(cache.values.size()) <= k) {
    const int n = static_cast<int>(cache.values.size());
    Rational acc(0);
    for (int j = 0; j < n; ++j) {
      if (j > 1 && j % 2 == 1) continue;
      acc += Rational(binomial(n + 1, j)) * cache.values[static_cast<std::size_t>(j)];
    }
    Rational b = -acc / Rational(n + 1);
    b.canonicalize();
    cache.values.push_back(b);
  }
  return cache.values[static_cast<std::size_t>(k)];
}

Integer double_factorial_odd(int m) {
  if (m < -1 || m % 2 == 0) {
    throw std::invalid_argument("double_factorial_odd requires odd m >= -1, got " + std::to_string(m));
  }
  Integer r(1);
  for (int i = m; i > 1; i -= 2) r *= i;
  return r;
}

Integer ipow(const Integer& base, int exp) {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

Rational rpow(const Rational& base, int exp) {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  Rational r(ipow(base.get_num(), exp), ipow(base.get_den(), exp));
  r.canonicalize();
  return r;
}

}  // namespace drsocle
