#include "drsocle/socle.hpp"

#include "drsocle/drcycle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace drsocle {

namespace {

int total(const std::vector<int>& d) { return std::accumulate(d.begin(), d.end(), 0); }

std::string format_list(const std::vector<int>& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + "]";
}

// Compositions of `sum` into `parts` non-negative parts, lexicographic.
void for_each_composition(int sum, int parts, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> c(static_cast<std::size_t>(parts), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == parts - 1) {
      c[i] = left;
      visit(c);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      c[i] = v;
      rec(i + 1, left - v);
    }
  };
  if (parts > 0) rec(0, sum);
}

// (-1)^{g-1} B_{2g} (2g-2+m)! / (2 (2g)!)
Rational necklace_prefactor(int g, int m) {
  return Rational(sign_pow(g - 1)) * bernoulli(2 * g) * ratio(factorial(2 * g - 2 + m), 2 * factorial(2 * g));
}

void require_necklace_shape(int g, const std::vector<int>& d) {
  if (g < 1 || d.empty()) throw std::invalid_argument("necklace evaluation needs g >= 1 and m >= 1");
  if (std::any_of(d.begin(), d.end(), [](int x) { return x < 1; })) {
    throw std::invalid_argument("necklace evaluation needs every d_i >= 1, got " + format_list(d));
  }
  const int genus_sum = total(d) - static_cast<int>(d.size());
  if (genus_sum != g - 1) {
    throw DimensionError("necklace vertex genera sum(d_i - 1) = " + std::to_string(genus_sum) +
                         " must equal g - 1 = " + std::to_string(g - 1));
  }
}

}  // namespace

void check_dimension(const SocleQuery& q) {
  if (q.g < 1) throw std::invalid_argument("genus must be >= 1, got " + std::to_string(q.g));
  if (q.d.empty()) throw std::invalid_argument("at least one marked point is required");
  if (std::any_of(q.d.begin(), q.d.end(), [](int x) { return x < 0; })) {
    throw std::invalid_argument("psi exponents must be non-negative, got " + format_list(q.d));
  }
  const int n = static_cast<int>(q.d.size());
  if (total(q.d) != q.g - 2 + n) {
    throw DimensionError("dimension constraint sum d_i = g - 2 + n violated: sum d_i = " +
                         std::to_string(total(q.d)) + ", g - 2 + n = " + std::to_string(q.g - 2 + n));
  }
}

std::vector<SocleQuery> valid_queries(int g, int n) {
  std::vector<SocleQuery> out;
  if (g < 1 || n < 1 || g - 2 + n < 0) return out;
  for_each_composition(g - 2 + n, n, [&](const std::vector<int>& c) { out.push_back({g, c}); });
  return out;
}

Rational faber(const SocleQuery& q) {
  check_dimension(q);
  const int g = q.g;
  const int n = static_cast<int>(q.d.size());
  Integer den = ipow(Integer(2), 2 * g - 1) * factorial(2 * g);
  for (int di : q.d) den *= double_factorial_odd(2 * di - 1);
  return Rational(sign_pow(g - 1)) * bernoulli(2 * g) * ratio(factorial(2 * g - 3 + n), den);
}

EdgeOrientation orientation_counts(const Wheel& w) {
  if (w.m < 2) throw std::invalid_argument("index orientation is defined for m >= 2");
  EdgeOrientation o;
  for (int i = 0; i < w.m; ++i) {
    const int from = w.cycle[i];
    const int to = w.cycle[(i + 1) % w.m];
    (from < to ? o.j_plus : o.j_minus)++;
  }
  return o;
}

void for_each_wheel(int m, int total_genus, const std::function<void(const Wheel&)>& visit) {
  if (m < 1) throw std::invalid_argument("a wheel needs at least one vertex");
  if (total_genus < 0) return;
  Wheel w;
  w.m = m;
  w.cycle.resize(static_cast<std::size_t>(m));
  std::iota(w.cycle.begin(), w.cycle.end(), 1);
  do {
    for_each_composition(total_genus, m, [&](const std::vector<int>& genera) {
      w.genera = genera;
      visit(w);
    });
  } while (std::next_permutation(w.cycle.begin() + 1, w.cycle.end()));
}

std::vector<Wheel> wheels_enumerate(int m, int total_genus) {
  std::vector<Wheel> out;
  for_each_wheel(m, total_genus, [&](const Wheel& w) { out.push_back(w); });
  return out;
}

Rational necklace_lhs(int g, const std::vector<int>& d) {
  require_necklace_shape(g, d);
  const int m = static_cast<int>(d.size());
  // vertex i contributes int DR_{g_i}(0,1,-1) lambda_{g_i} psi^{d_i - 1}, which
  // vanishes unless g_i = d_i - 1
  std::vector<Rational> vertex(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) vertex[i] = dr3_closed({d[i] - 1, 1, -1});
  Rational sum(0);
  for_each_wheel(m, g - 1, [&](const Wheel& w) {
    for (int i = 0; i < m; ++i) {
      if (w.genera[i] != d[i] - 1) return;
    }
    Rational term(1);
    for (const auto& v : vertex) term *= v;
    sum += term;
  });
  return sum / Rational(factorial(m - 1));
}

Rational necklace_lhs_collapsed(const std::vector<int>& d) {
  Rational p(1);
  for (int di : d) p *= dr_standard(di - 1);
  return p;
}

Rational necklace_socle(int g, const std::vector<int>& d) {
  check_dimension({g, d});
  if (d.size() < 2 || std::count(d.begin(), d.end(), 0) != 1) {
    throw std::invalid_argument("canonical necklace query needs exactly one zero among n >= 2 entries, got " +
                                format_list(d));
  }
  std::vector<int> positive;
  std::copy_if(d.begin(), d.end(), std::back_inserter(positive), [](int x) { return x > 0; });
  const int m = static_cast<int>(positive.size());
  return necklace_prefactor(g, m) * necklace_lhs(g, positive);
}

std::vector<SocleQuery> string_apply(const SocleQuery& q, ZeroRemoval which) {
  if (q.d.size() < 2) throw std::invalid_argument("string equation needs n >= 2");
  std::vector<std::size_t> zeros;
  for (std::size_t i = 0; i < q.d.size(); ++i) {
    if (q.d[i] == 0) zeros.push_back(i);
  }
  if (zeros.empty()) throw std::invalid_argument("string equation needs a zero entry, got " + format_list(q.d));
  const std::size_t removed = which == ZeroRemoval::last ? zeros.back() : zeros.front();
  std::vector<int> rest = q.d;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(removed));
  if (std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; })) {
    throw std::invalid_argument("string equation has no reduction for " + format_list(q.d));
  }
  std::vector<SocleQuery> out;
  for (std::size_t j = 0; j < rest.size(); ++j) {
    if (rest[j] == 0) continue;
    SocleQuery r{q.g, rest};
    --r.d[j];
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

class NecklacePath {
 public:
  NecklacePath(int g, ZeroRemoval which) : g_(g), which_(which) {}

  Rational value(const std::vector<int>& d) {
    if (auto it = memo_.find(d); it != memo_.end()) return it->second;
    Rational v = compute(d);
    memo_.emplace(d, v);
    return v;
  }

 private:
  Rational compute(const std::vector<int>& d) {
    check_dimension({g_, d});
    const auto zeros = std::count(d.begin(), d.end(), 0);
    if (d.size() == 1 && zeros == 1) {
      // g = 1, d = [0]: the only reduction of (1, [1, 0]) is (1, [0]).
      return necklace_socle(1, {1, 0});
    }
    if (zeros == 1) return necklace_socle(g_, d);
    if (zeros >= 2) {
      Rational sum(0);
      for (const auto& r : string_apply({g_, d}, which_)) sum += value(r.d);
      return sum;
    }
    // No zero: (d + e_1, 0) is canonical and its reductions are d and
    // d + e_1 - e_j for j > 1.
    std::vector<int> lifted = d;
    ++lifted[0];
    std::vector<int> canonical = lifted;
    canonical.push_back(0);
    Rational v = necklace_socle(g_, canonical);
    for (std::size_t j = 1; j < d.size(); ++j) {
      std::vector<int> branch = lifted;
      --branch[j];
      v -= value(branch);
    }
    return v;
  }

  int g_;
  ZeroRemoval which_;
  std::map<std::vector<int>, Rational> memo_;
};

}  // namespace

Rational socle_necklace(const SocleQuery& q, ZeroRemoval which) {
  check_dimension(q);
  return NecklacePath(q.g, which).value(q.d);
}

SocleResult socle_compute(const SocleQuery& q, Method method) {
  check_dimension(q);
  SocleResult r;
  if (method != Method::necklace) r.faber = faber(q);
  if (method != Method::faber) r.necklace = socle_necklace(q);
  r.value = r.faber ? *r.faber : *r.necklace;
  r.agree = !(r.faber && r.necklace) || *r.faber == *r.necklace;
  return r;
}

IdentityCheck verify_string_consistency(int g, const std::vector<int>& d) {
  SocleQuery lifted{g, d};
  lifted.d.push_back(0);
  if (total(lifted.d) != g - 2 + static_cast<int>(lifted.d.size())) {
    // d is a valid query itself: lift it to (d + e_1, 0), whose reductions contain d.
    check_dimension({g, d});
    lifted.d = d;
    ++lifted.d[0];
    lifted.d.push_back(0);
  }
  IdentityCheck c;
  c.lhs = faber(lifted);
  c.rhs = 0;
  for (const auto& r : string_apply(lifted)) c.rhs += faber(r);
  c.pass = c.lhs == c.rhs;
  return c;
}

IdentityCheck relation_integral_check(int g, const std::vector<int>& d) {
  require_necklace_shape(g, d);
  const int m = static_cast<int>(d.size());
  IdentityCheck c;
  c.lhs = necklace_lhs(g, d);
  Rational sum(0);
  for (int i = 0; i < m; ++i) {
    std::vector<int> reduced = d;
    --reduced[i];
    sum += faber({g, reduced});
  }
  c.rhs = sum / necklace_prefactor(g, m);
  c.pass = c.lhs == c.rhs;
  return c;
}

}  // namespace drsocle
