#pragma once

// Socle intersection numbers  int_{Mbar_{g,n}} lambda_g lambda_{g-1} prod psi_i^{d_i}
// evaluated two ways: the closed Bernoulli formula, and the necklace (wheel)
// sum of DR integrals reached through the string equation.

#include "drsocle/exact.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace drsocle {

struct SocleQuery {
  int g = 1;
  std::vector<int> d;

  friend bool operator==(const SocleQuery&, const SocleQuery&) = default;
};

/// Raised when sum d_i != g - 2 + n.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws DimensionError (or std::invalid_argument for g < 1, n < 1, d_i < 0).
void check_dimension(const SocleQuery& q);

/// Every d in N^n with sum d = g - 2 + n, in lexicographic order.
std::vector<SocleQuery> valid_queries(int g, int n);

Rational faber(const SocleQuery& q);

/// Oriented necklace: vertices 1..m in cyclic order cycle[0] = 1, cycle[1], ...
/// with genera[i] the genus of vertex i+1.
struct Wheel {
  int m = 1;
  std::vector<int> cycle;
  std::vector<int> genera;
};

struct EdgeOrientation {
  int j_plus = 0;   ///< edges where cycle direction goes from lower to higher index
  int j_minus = 0;
};

/// For m >= 2 (the m = 1 loop has no index orientation).
EdgeOrientation orientation_counts(const Wheel& w);

/// Streams all (m-1)! cyclic orders times all genus compositions of total_genus.
void for_each_wheel(int m, int total_genus, const std::function<void(const Wheel&)>& visit);
std::vector<Wheel> wheels_enumerate(int m, int total_genus);

/// (1/(m-1)!) sum over wheels with genus g-1 of prod_i [g(v_i) = d_i - 1] dr_standard(g(v_i)).
/// Requires every d_i >= 1 and sum (d_i - 1) = g - 1.
Rational necklace_lhs(int g, const std::vector<int>& d);

/// prod_i dr_standard(d_i - 1), the value the wheel sum collapses to.
Rational necklace_lhs_collapsed(const std::vector<int>& d);

/// Canonical query: exactly one zero, every other entry >= 1.
Rational necklace_socle(int g, const std::vector<int>& d);

enum class ZeroRemoval { last, first };

/// String equation: remove one zero, decrement each remaining positive entry in turn.
std::vector<SocleQuery> string_apply(const SocleQuery& q, ZeroRemoval which = ZeroRemoval::last);

/// Socle number through necklace_socle and the string equation only.
Rational socle_necklace(const SocleQuery& q, ZeroRemoval which = ZeroRemoval::last);

enum class Method { faber, necklace, both };

struct SocleResult {
  Rational value;
  std::optional<Rational> faber;
  std::optional<Rational> necklace;
  bool agree = true;
};

SocleResult socle_compute(const SocleQuery& q, Method method);

struct IdentityCheck {
  bool pass = false;
  Rational lhs;
  Rational rhs;
};

/// faber(g, d + [0]) against the sum of faber over its string reductions.
/// `d` must satisfy the dimension constraint for n = d.size().
IdentityCheck verify_string_consistency(int g, const std::vector<int>& d);

/// necklace_lhs(g, d) against 2 (2g)! / ((-1)^{g-1} B_{2g} (2g-2+m)!) * sum_i faber(g, d - e_i).
IdentityCheck relation_integral_check(int g, const std::vector<int>& d);

}  // namespace drsocle
