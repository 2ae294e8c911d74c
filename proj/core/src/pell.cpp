#include "qfold/pell.hpp"

#include <utility>

namespace qfold {

namespace {

BigInt exact_quotient(const BigInt& num, const BigInt& den, const char* what) {
  if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) == 0)
    throw integrity_error(std::string("inexact division in ") + what);
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace

PellParams make_params(const BigInt& t) {
  if (t == 1 || t == -1) throw std::domain_error("degenerate parameter t = +-1");
  if (mpz_even_p(t.get_mpz_t()))
    throw std::domain_error(
        "even t: the unit components (t^2+1)(t^2+5)/4 and (t^2+3)/4 are not integers");

  const BigInt t2 = t * t;
  PellParams p;
  p.t = t;
  p.P = t2 * t2 + 6 * t2 + 1;
  p.rhs = 4 * t * (t2 + 1);
  p.V0 = (t + 1) * (t + 1);
  p.U0 = 1;
  p.Y0 = exact_quotient((t2 + 1) * (t2 + 5), 4, "unit Y0");
  p.X0 = exact_quotient(t2 + 3, 4, "unit X0");
  if (p.Y0 * p.Y0 - p.P * p.X0 * p.X0 != 1)
    throw integrity_error("unit fails Y^2 - P X^2 = 1");
  if (p.V0 * p.V0 - p.P * p.U0 * p.U0 != p.rhs)
    throw integrity_error("base solution fails the norm equation");
  return p;
}

PellOrbit make_orbit(PellParams params) {
  PellOrbit orbit;
  orbit.V = params.V0;
  orbit.U = params.U0;
  orbit.params = std::move(params);
  return orbit;
}

PellOrbit step(const PellOrbit& orbit) {
  const PellParams& p = orbit.params;
  PellOrbit next = orbit;
  next.n = orbit.n + 1;
  next.V = p.Y0 * orbit.V + p.P * p.X0 * orbit.U;
  next.U = p.X0 * orbit.V + p.Y0 * orbit.U;
  if (next.V * next.V - p.P * next.U * next.U != p.rhs)
    throw integrity_error("norm invariant lost after step");
  return next;
}

std::pair<BigInt, BigInt> uv_at(const PellOrbit& orbit) {
  const PellParams& p = orbit.params;
  const BigInt u = orbit.U;
  const BigInt v =
      exact_quotient(orbit.V - (1 + p.t * p.t) * orbit.U, 2 * p.t, "recovery of v_n");
  return {u, v};
}

bool verify_impeq(const BigInt& t, const BigInt& u, const BigInt& v) {
  return t * u * u - (t * t + 1) * u * v - t * v * v == -(t * t + 1);
}

SymbolicPellParams make_symbolic_params(unsigned step_limit) {
  auto table = VarTable::make({"t"});
  const Poly t = Poly::var(table, "t");
  const Poly t2 = t * t;
  const Rational quarter(1, 4);
  SymbolicPellParams p{
      table,
      t,
      t2 * t2 + 6 * t2 + 1,            // P
      4 * t * (t2 + 1),                // rhs
      (t + 1) * (t + 1),               // V0
      Poly::constant(table, 1),        // U0
      quarter * ((t2 + 1) * (t2 + 5)),  // Y0
      quarter * (t2 + 3),              // X0
      step_limit,
  };
  if (!(p.Y0 * p.Y0 - p.P * p.X0 * p.X0 == Poly::constant(table, 1)))
    throw integrity_error("symbolic unit fails Y^2 - P X^2 = 1");
  if (!(p.V0 * p.V0 - p.P * p.U0 * p.U0 == p.rhs))
    throw integrity_error("symbolic base fails the norm equation");
  return p;
}

SymbolicPellOrbit make_orbit(SymbolicPellParams params) {
  Poly V = params.V0;
  Poly U = params.U0;
  return SymbolicPellOrbit{std::move(params), 0, std::move(V), std::move(U)};
}

SymbolicPellOrbit step(const SymbolicPellOrbit& orbit) {
  const SymbolicPellParams& p = orbit.params;
  if (orbit.n >= p.step_limit)
    throw std::domain_error("symbolic orbit past its step limit");
  SymbolicPellOrbit next = orbit;
  next.n = orbit.n + 1;
  next.V = p.Y0 * orbit.V + p.P * p.X0 * orbit.U;
  next.U = p.X0 * orbit.V + p.Y0 * orbit.U;
  if (!(next.V * next.V - p.P * next.U * next.U == p.rhs))
    throw integrity_error("symbolic norm invariant lost after step");
  return next;
}

std::pair<Poly, Poly> uv_at(const SymbolicPellOrbit& orbit) {
  const SymbolicPellParams& p = orbit.params;
  const Poly numerator = orbit.V - (1 + p.t * p.t) * orbit.U;
  auto v = div_exact(numerator, 2 * p.t);
  if (!v) throw integrity_error("V_n - (1+t^2) U_n is not divisible by 2t");
  const Poly u = orbit.U;
  if (!u.denominators_are_powers_of_two() || !v->denominators_are_powers_of_two())
    throw integrity_error("recovered (u_n, v_n) leave Z[1/2][t]");
  return {u, *v};
}

ContinuedFraction cf_sqrt(const BigInt& D) {
  if (D < 2) throw std::domain_error("continued fraction needs D >= 2");
  if (is_perfect_square(D)) throw std::domain_error("D is a perfect square");

  ContinuedFraction cf;
  cf.a0 = isqrt(D);
  // Standard integer recurrence on sqrt-period states:
  //   m' = d*a - m, d' = (D - m'^2)/d, a' = floor((a0 + m') / d').
  // The state (m, d) after the first step recurs exactly at period end.
  BigInt m = 0, d = 1, a = cf.a0;
  BigInt first_m, first_d;
  for (;;) {
    m = d * a - m;
    d = exact_quotient(D - m * m, d, "continued fraction state");
    a = (cf.a0 + m) / d;
    if (cf.period.empty()) {
      first_m = m;
      first_d = d;
    } else if (m == first_m && d == first_d) {
      break;
    }
    cf.period.push_back(a);
  }
  return cf;
}

std::pair<BigInt, BigInt> cf_fundamental(const BigInt& D) {
  const ContinuedFraction cf = cf_sqrt(D);
  const std::size_t len = cf.period.size();
  // Convergent h/k just before the period closes; odd periods need a second
  // pass through the period to reach the +1 norm.
  const std::size_t steps = (len % 2 == 0) ? len - 1 : 2 * len - 1;
  BigInt h_prev = 1, h = cf.a0;
  BigInt k_prev = 0, k = 1;
  for (std::size_t i = 0; i < steps; ++i) {
    const BigInt& a = cf.period[i % len];
    BigInt h_next = a * h + h_prev;
    BigInt k_next = a * k + k_prev;
    h_prev = std::exchange(h, std::move(h_next));
    k_prev = std::exchange(k, std::move(k_next));
  }
  if (h * h - D * k * k != 1)
    throw integrity_error("convergent does not solve Y^2 - D X^2 = 1");
  return {h, k};
}

}  // namespace qfold
