#include "qfold/family.hpp"

#include <utility>

namespace qfold {

namespace {

void require_family_parameter(const BigInt& t) {
  if (t == -1 || t == 0 || t == 1)
    throw std::domain_error("family parameter t must lie outside {-1, 0, 1}");
}

std::array<Poly, 5> family_coeff_polys(const VarTablePtr& table) {
  const Poly t = Poly::var(table, "t");
  const Poly t2 = t * t;
  return {
      64 * t2 * (1 - pow(t, 8)),
      t2 + 1,
      -(t2 + 1),
      t2 - 1,
      -(t2 - 1),
  };
}

std::array<Poly, 5> curve_forms(const Poly& t, const Poly& u, const Poly& v) {
  const Poly uu = u * u, uv = u * v, vv = v * v;
  const Poly t2 = t * t;
  return {
      uv,
      t * uu + (t2 - 1) * uv + t * vv,
      t * uu - (t2 - 1) * uv + t * vv,
      t * uu - (t2 + 1) * uv - t * vv,
      t * uu + (t2 + 1) * uv - t * vv,
  };
}

}  // namespace

BigInt CoefficientVector::content() const {
  BigInt g = 0;
  for (const auto& a : A) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  }
  return g;
}

CoefficientVector CoefficientVector::reduced() const {
  const BigInt g = content();
  if (g == 0) throw std::invalid_argument("all-zero coefficient vector");
  CoefficientVector r = *this;
  for (auto& a : r.A) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
  return r;
}

CoefficientVector make_coefficients(std::array<BigInt, 5> entries) {
  CoefficientVector v{std::move(entries)};
  if (v.content() == 0) throw std::invalid_argument("all-zero coefficient vector");
  return v;
}

CoefficientVector family_coeffs(const BigInt& t) {
  require_family_parameter(t);
  const BigInt t2 = t * t;
  return make_coefficients({64 * t2 * (1 - pow_ui(t, 8)), t2 + 1, -(t2 + 1), t2 - 1, -(t2 - 1)});
}

BigInt eval_F(const CoefficientVector& A, const QuinticPoint& X) {
  BigInt sum = 0;
  for (std::size_t i = 0; i < 5; ++i) sum += A.A[i] * fifth_power(X.X[i]);
  return sum;
}

SubsumAudit audit_point(const CoefficientVector& A, const QuinticPoint& X) {
  std::array<BigInt, 5> term;
  for (std::size_t i = 0; i < 5; ++i) term[i] = A.A[i] * fifth_power(X.X[i]);

  SubsumAudit audit;
  audit.f_value = term[0] + term[1] + term[2] + term[3] + term[4];

  BigInt g = 0;
  for (const auto& x : X.X) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  audit.coordinate_gcd = g;

  // All 2^5 - 2 proper nonempty subsets of {0..4}.
  for (unsigned mask = 1; mask < 31; ++mask) {
    BigInt sum = 0;
    for (unsigned i = 0; i < 5; ++i)
      if (mask & (1u << i)) sum += term[i];
    if (sum == 0) audit.vanishing_subsets.push_back(mask);
  }
  return audit;
}

bool is_nontrivial(const CoefficientVector& A, const QuinticPoint& X) {
  const SubsumAudit audit = audit_point(A, X);
  if (!audit.on_variety())
    throw std::invalid_argument("point is not on the variety: F = " + to_string(audit.f_value));
  return audit.nontrivial();
}

ParamCurve::ParamCurve(VarTablePtr table, std::array<Poly, 5> forms, std::optional<BigInt> t)
    : table_(std::move(table)), forms_(std::move(forms)), t_(std::move(t)) {}

ParamCurve ParamCurve::symbolic() {
  auto table = VarTable::make({"t", "u", "v"});
  auto forms = curve_forms(Poly::var(table, "t"), Poly::var(table, "u"),
                           Poly::var(table, "v"));
  return ParamCurve(std::move(table), std::move(forms), std::nullopt);
}

ParamCurve ParamCurve::at(const BigInt& t) {
  require_family_parameter(t);
  auto table = VarTable::make({"u", "v"});
  auto forms = curve_forms(Poly::constant(table, Rational(t)), Poly::var(table, "u"),
                           Poly::var(table, "v"));
  return ParamCurve(std::move(table), std::move(forms), t);
}

QuinticPoint point_at(const BigInt& t, const BigInt& u, const BigInt& v) {
  require_family_parameter(t);
  const BigInt uu = u * u, uv = u * v, vv = v * v;
  const BigInt t2 = t * t;
  return QuinticPoint{{
      uv,
      t * uu + (t2 - 1) * uv + t * vv,
      t * uu - (t2 - 1) * uv + t * vv,
      t * uu - (t2 + 1) * uv - t * vv,
      t * uu + (t2 + 1) * uv - t * vv,
  }};
}

Poly identity_residual() {
  return identity_residual_perturbed(0, 0, Rational(0));
}

Poly identity_residual_perturbed(std::size_t form_index, std::size_t slot,
                                 const Rational& delta) {
  if (form_index >= 5 || slot >= 3)
    throw std::invalid_argument("perturbation slot out of range");
  const ParamCurve curve = ParamCurve::symbolic();
  const auto& table = curve.table();
  auto forms = curve.forms();
  if (delta != 0) {
    const Poly u = Poly::var(table, "u"), v = Poly::var(table, "v");
    const Poly monomials[3] = {u * u, u * v, v * v};
    forms[form_index] += Poly::constant(table, delta) * monomials[slot];
  }
  const auto coeffs = family_coeff_polys(table);
  Poly sum(table);
  for (std::size_t i = 0; i < 5; ++i) sum += coeffs[i] * pow(forms[i], 5);
  return sum;
}

bool verify_identity_symbolic() { return identity_residual().is_zero(); }

Poly linear_relation_residual() {
  const ParamCurve curve = ParamCurve::symbolic();
  const auto& s = curve.forms();
  return 4 * s[0] + s[1] - s[2] + s[3] - s[4];
}

Poly quadratic_relation_residual() {
  const ParamCurve curve = ParamCurve::symbolic();
  const auto& s = curve.forms();
  return s[1] * s[1] + s[2] * s[2] - s[3] * s[3] - s[4] * s[4];
}

bool verify_LQ_symbolic() {
  return linear_relation_residual().is_zero() && quadratic_relation_residual().is_zero();
}

std::array<Poly, 11> reference_coefficient_forms(const VarTablePtr& T) {
  const Poly A0 = Poly::var(T, "A0"), A1 = Poly::var(T, "A1"),
             A2 = Poly::var(T, "A2"), A3 = Poly::var(T, "A3");
  const Poly a = Poly::var(T, "a"), b = Poly::var(T, "b"), c = Poly::var(T, "c"),
             d = Poly::var(T, "d"), e = Poly::var(T, "e");
  const Poly a2 = a * a, b2 = b * b, d2 = d * d;
  const Poly a4 = a2 * a2, b4 = b2 * b2, d4 = d2 * d2;
  return {
      A1 + A2 + A3 + 1,
      -(a * A1) + a * A2 + A3 * b + d,
      (2 * a2 + 1) * A1 + (2 * a2 + 1) * A2 + (2 * b2 + c) * A3 + 2 * d2 + e,
      -(a * (a2 + 2) * A1) + a * (a2 + 2) * A2 + b * (b2 + 2 * c) * A3 + d * d2 + 2 * d * e,
      (a4 + 6 * a2 + 2) * (A1 + A2) + (b4 + 6 * b2 * c + 2 * c * c) * A3 +
          d4 + 6 * d2 * e + 2 * e * e,
      A0 + a * (a4 + 20 * a2 + 30) * (A2 - A1) +
          b * (b4 + 20 * b2 * c + 30 * c * c) * A3 +
          d * (d4 + 20 * d2 * e + 30 * e * e),
      (a4 + 6 * a2 + 2) * (A1 + A2) + c * (b4 + 6 * b2 * c + 2 * c * c) * A3 +
          e * (d4 + 6 * d2 * e + 2 * e * e),
      -(a * (a2 + 2) * A1) + a * (a2 + 2) * A2 + b * c * c * (b2 + 2 * c) * A3 +
          d * e * e * (d2 + 2 * e),
      (2 * a2 + 1) * A1 + (2 * a2 + 1) * A2 + pow(c, 3) * (2 * b2 + c) * A3 +
          2 * d2 * pow(e, 3) + pow(e, 4),
      -(a * A1) + a * A2 + A3 * b * pow(c, 4) + d * pow(e, 4),
      pow(c, 5) * A3 + A1 + A2 + pow(e, 5),
  };
}

std::vector<CoeffScaleCheck> verify_appendix() {
  const auto T = VarTable::make({"u", "v", "A0", "A1", "A2", "A3", "a", "b", "c", "d", "e"});
  const Poly u = Poly::var(T, "u"), v = Poly::var(T, "v");
  const Poly A0 = Poly::var(T, "A0"), A1 = Poly::var(T, "A1"),
             A2 = Poly::var(T, "A2"), A3 = Poly::var(T, "A3");
  const Poly a = Poly::var(T, "a"), b = Poly::var(T, "b"), c = Poly::var(T, "c"),
             d = Poly::var(T, "d"), e = Poly::var(T, "e");

  const Poly uu = u * u, uv = u * v, vv = v * v;
  const std::array<Poly, 5> s = {
      uv,
      uu - a * uv + vv,
      uu + a * uv + vv,
      uu + b * uv + c * vv,
      uu + d * uv + e * vv,
  };
  // A4 = 1 (any solution can be normalized that way).
  Poly expansion = A0 * pow(s[0], 5) + A1 * pow(s[1], 5) + A2 * pow(s[2], 5) +
                   A3 * pow(s[3], 5) + pow(s[4], 5);

  const auto reference = reference_coefficient_forms(T);
  std::vector<CoeffScaleCheck> rows;
  rows.reserve(11);
  for (unsigned j = 0; j <= 10; ++j) {
    CoeffScaleCheck row;
    row.j = j;
    const Poly extracted = expansion.coeff({{"u", 10 - j}, {"v", j}});
    const Poly& expected = reference[j];
    // Recover the scalar from the reference's leading term, then require
    // exact equality of extracted and scale * reference.
    const auto& lead = *expected.terms().rbegin();
    const Rational found = extracted.coefficient(lead.first);
    if (found != 0) {
      row.scale = found / lead.second;
      row.match = extracted == Poly::constant(T, row.scale) * expected;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace qfold
