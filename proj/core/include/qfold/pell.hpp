#pragma once

#include <utility>
#include <vector>

#include "qfold/poly.hpp"

namespace qfold {

/// Data for the norm-form equation V^2 - P(t) U^2 = 4t(t^2+1) with
/// P(t) = t^4 + 6t^2 + 1: the base solution ((t+1)^2, 1) and the closed-form
/// unit (Y0, X0) = ((t^2+1)(t^2+5)/4, (t^2+3)/4) of Y^2 - P X^2 = 1.
/// Integer mode requires odd t (the /4 components are integral exactly then)
/// with t outside {-1, 1}. Both invariants are re-verified at construction.
struct PellParams {
  BigInt t;
  BigInt P;
  BigInt rhs;
  BigInt V0, U0;
  BigInt Y0, X0;
};

PellParams make_params(const BigInt& t);

/// State of the solution recurrence: (V_n, U_n) = base * unit^n.
struct PellOrbit {
  PellParams params;
  unsigned n = 0;
  BigInt V, U;
};

PellOrbit make_orbit(PellParams params);

/// One multiplication by the unit: V' = Y0 V + P X0 U, U' = X0 V + Y0 U.
/// The norm invariant is re-verified on the new state.
PellOrbit step(const PellOrbit& orbit);

/// Recovers the curve parameters: u_n = U_n, v_n = (V_n - (1+t^2) U_n) / (2t).
/// The division must be exact; a remainder would contradict the recurrence
/// and raises integrity_error.
std::pair<BigInt, BigInt> uv_at(const PellOrbit& orbit);

/// True iff t u^2 - (t^2+1) u v - t v^2 = -(t^2+1), i.e. s3(u,v) = s3(1,1).
bool verify_impeq(const BigInt& t, const BigInt& u, const BigInt& v);

/// Symbolic counterpart over Q[t]: the same data with every component a
/// polynomial in t. Coefficient counts grow geometrically with n, so stepping
/// past step_limit is rejected.
struct SymbolicPellParams {
  VarTablePtr table;  // single variable "t"
  Poly t;
  Poly P;
  Poly rhs;
  Poly V0, U0;
  Poly Y0, X0;
  unsigned step_limit = 8;
};

SymbolicPellParams make_symbolic_params(unsigned step_limit = 8);

struct SymbolicPellOrbit {
  SymbolicPellParams params;
  unsigned n = 0;
  Poly V, U;
};

SymbolicPellOrbit make_orbit(SymbolicPellParams params);
SymbolicPellOrbit step(const SymbolicPellOrbit& orbit);

/// (u_n, v_n) as polynomials in t. Both must lie in Z[1/2][t] (all
/// coefficient denominators powers of two); a violation raises
/// integrity_error, as does an inexact division by 2t.
std::pair<Poly, Poly> uv_at(const SymbolicPellOrbit& orbit);

/// Periodic continued fraction of sqrt(D) for non-square D >= 2:
/// sqrt(D) = [a0; period repeated]. The period is detected by the first
/// return of the internal (m, d) state.
struct ContinuedFraction {
  BigInt a0;
  std::vector<BigInt> period;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

ContinuedFraction cf_sqrt(const BigInt& D);

/// Least solution (Y, X) with X >= 1 of Y^2 - D X^2 = 1, from the convergent
/// at the end of the period (doubled when the period length is odd).
std::pair<BigInt, BigInt> cf_fundamental(const BigInt& D);

}  // namespace qfold
