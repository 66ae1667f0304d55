#pragma once

// Integrals of DR_g(-a1-a2, a1, a2) lambda_g psi_1^g over Mbar_{g,3}, by a
// closed formula and, independently, by the genus recursion; plus the
// two-point values DR_g(-b, b) lambda_g psi_1^{g-1}.

#include "drsocle/exact.hpp"

namespace drsocle {

struct DRQuery {
  int g = 0;
  long a1 = 0;
  long a2 = 0;
};

/// sum_{j=0}^g (2j-1)!! / ((2g+1)!! (2j)!!) (a1+a2)^{2j} (a1^2-a1a2+a2^2)^{g-j} / 12^g
Rational dr3_closed(const DRQuery& q);

/// I_0 = 1,  (2g+1) I_g = (a1+a2)^{2g} / (24^g g!) + (a1^2-a1a2+a2^2)/12 * I_{g-1}.
/// Memoized on (g, a1^2-a1a2+a2^2, (a1+a2)^2).
Rational dr3_recursive(const DRQuery& q);

/// b^{2g} / (24^g g!).
Rational dr2(int g, long b);

struct BsszOutcome {
  bool pass = false;
  Rational lhs;
  Rational rhs;
};

/// (a1+a2)(2g+1) I_g = (a1+a2) dr2(g, a1+a2) + 2 I_{g-1} (a1 dr2(1,a1) + a2 dr2(1,a2)),
/// with I from dr3_closed. Requires g >= 1 and a1, a2 > 0.
BsszOutcome dr3_bssz_check(int g, long a1, long a2);

/// dr3_closed(g, 1, -1) = 1 / ((2g+1)!! 4^g).
Rational dr_standard(int g);

}  // namespace drsocle
