#pragma once

#include <array>
#include <optional>
#include <vector>

#include "qfold/poly.hpp"

namespace qfold {

/// Coefficient vector A = (A0..A4) of the diagonal quintic form
/// F_A(X) = sum A_i X_i^5 and the threefold F_A = 0.
struct CoefficientVector {
  std::array<BigInt, 5> A;

  /// gcd of the entries (non-negative; 0 only for the zero vector, which is
  /// rejected at construction).
  BigInt content() const;
  /// Same vector divided by its content, so gcd(entries) = 1.
  CoefficientVector reduced() const;

  friend bool operator==(const CoefficientVector&, const CoefficientVector&) = default;
};

CoefficientVector make_coefficients(std::array<BigInt, 5> entries);

struct QuinticPoint {
  std::array<BigInt, 5> X;

  friend bool operator==(const QuinticPoint&, const QuinticPoint&) = default;
};

/// The one-parameter coefficient family
///   A(t) = (64 t^2 (1 - t^8), t^2+1, -(t^2+1), t^2-1, -(t^2-1)),
/// unreduced. t in {-1, 0, 1} degenerates (A0 = 0) and is rejected.
CoefficientVector family_coeffs(const BigInt& t);

BigInt eval_F(const CoefficientVector& A, const QuinticPoint& X);

/// Full audit of a point against a coefficient vector: the value of F_A, the
/// coordinate gcd, and every proper nonempty subset of the five terms
/// A_i X_i^5 whose sum vanishes (as bitmasks over {0..4}).
struct SubsumAudit {
  BigInt f_value;
  BigInt coordinate_gcd;
  std::vector<unsigned> vanishing_subsets;

  bool on_variety() const { return f_value == 0; }
  bool nontrivial() const {
    return on_variety() && coordinate_gcd == 1 && vanishing_subsets.empty();
  }
};

SubsumAudit audit_point(const CoefficientVector& A, const QuinticPoint& X);

/// Nontriviality predicate for a point already known to lie on the variety:
/// coordinate gcd 1 and no vanishing proper sub-sum. Calling it on a
/// non-root is a precondition error that reports the value of F_A.
bool is_nontrivial(const CoefficientVector& A, const QuinticPoint& X);

/// The quadratic-forms curve on the family threefold:
///   X0 = s0(u,v) = u v
///   X1 = s1(u,v) = t u^2 + (t^2-1) u v + t v^2
///   X2 = s2(u,v) = t u^2 - (t^2-1) u v + t v^2
///   X3 = s3(u,v) = t u^2 - (t^2+1) u v - t v^2
///   X4 = s4(u,v) = t u^2 + (t^2+1) u v - t v^2
/// Either fully symbolic (variables t, u, v) or with t fixed (variables u, v).
class ParamCurve {
public:
  static ParamCurve symbolic();
  static ParamCurve at(const BigInt& t);

  const VarTablePtr& table() const { return table_; }
  const std::array<Poly, 5>& forms() const { return forms_; }
  const std::optional<BigInt>& fixed_t() const { return t_; }

private:
  ParamCurve(VarTablePtr table, std::array<Poly, 5> forms, std::optional<BigInt> t);
  VarTablePtr table_;
  std::array<Poly, 5> forms_;
  std::optional<BigInt> t_;
};

/// The point (s0(u,v), ..., s4(u,v)) for fixed t, computed in plain integer
/// arithmetic (deliberately not routed through Poly, so the two paths can
/// cross-check each other).
QuinticPoint point_at(const BigInt& t, const BigInt& u, const BigInt& v);

/// sum_i A_i(t) s_i(u,v)^5 expanded over (t,u,v); the family construction is
/// valid iff this is the zero polynomial.
Poly identity_residual();

/// Same expansion with a single coefficient of one form perturbed:
/// form_index in 0..4, slot 0 -> u^2, 1 -> u*v, 2 -> v^2. A nonzero delta on
/// any slot must break the identity.
Poly identity_residual_perturbed(std::size_t form_index, std::size_t slot,
                                 const Rational& delta);

bool verify_identity_symbolic();

/// Residuals of the t-independent relations satisfied by the curve:
///   L = 4 X0 + X1 - X2 + X3 - X4,  Q = X1^2 + X2^2 - X3^2 - X4^2.
Poly linear_relation_residual();
Poly quadratic_relation_residual();
bool verify_LQ_symbolic();

/// One row of the generic-expansion coefficient check: the coefficient of
/// u^(10-j) v^j in sum A_i s_i^5 (with generic forms s1 = u^2 - a u v + v^2,
/// s2 = u^2 + a u v + v^2, s3 = u^2 + b u v + c v^2, s4 = u^2 + d u v + e v^2,
/// A4 = 1) equals scale * reference_form_j for a scalar rational.
struct CoeffScaleCheck {
  unsigned j = 0;
  Rational scale;  // 0 when no scalar works
  bool match = false;
};

/// Runs all eleven checks; the expected scale vector is (1,5,5,10,5,1,5,10,5,5,1).
std::vector<CoeffScaleCheck> verify_appendix();

/// The eleven reference coefficient forms (each up to an overall scalar),
/// over a table containing u, v, A0..A3, a, b, c, d, e. Row j multiplies
/// u^(10-j) v^j in the generic expansion.
std::array<Poly, 11> reference_coefficient_forms(const VarTablePtr& table);

}  // namespace qfold
