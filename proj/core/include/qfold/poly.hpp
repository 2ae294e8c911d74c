#pragma once

#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qfold/numeric.hpp"

namespace qfold {

/// Ordered table of distinct variable names. The ordering is fixed at
/// construction; exponent vectors are always interpreted against it.
class VarTable {
public:
  explicit VarTable(std::vector<std::string> names);

  static std::shared_ptr<const VarTable> make(std::initializer_list<std::string> names);
  static std::shared_ptr<const VarTable> make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// index_of, but an unknown name is an error.
  std::size_t require(std::string_view name) const;

  friend bool operator==(const VarTable& a, const VarTable& b) {
    return a.names_ == b.names_;
  }

private:
  std::vector<std::string> names_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

/// Exponent vector, one entry per table variable.
using Monomial = std::vector<unsigned>;

/// Graded order: lower total degree first; within a degree, the monomial
/// that is lexicographically larger in the table's variable order comes
/// first (so u^2 precedes u*v precedes v^2). This is the iteration and
/// serialization order everywhere.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over Rational, in canonical form: no
/// stored coefficient is zero, every coefficient is a reduced fraction with
/// positive denominator. Two polynomials over equal tables are equal iff
/// their term maps are equal. Immutable values; all operations are pure.
class Poly {
public:
  using TermMap = std::map<Monomial, Rational, GradedLexLess>;

  explicit Poly(VarTablePtr table);

  static Poly constant(VarTablePtr table, const Rational& c);
  static Poly constant(VarTablePtr table, long c);
  static Poly var(VarTablePtr table, std::size_t index, unsigned exp = 1);
  static Poly var(VarTablePtr table, std::string_view name, unsigned exp = 1);
  /// Single term c * x^m; the exponent vector must match the table size.
  static Poly term(VarTablePtr table, Monomial m, const Rational& c);

  const VarTablePtr& table() const { return table_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  unsigned long total_degree() const;  // 0 for the zero polynomial
  bool is_constant() const;
  /// The value of a constant polynomial (0 for the zero polynomial).
  Rational constant_value() const;
  /// Coefficient of an exact monomial (0 if absent).
  Rational coefficient(const Monomial& m) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& c);

  /// Coefficient extraction: fixes the exponent of each listed variable and
  /// returns the polynomial multiplying that monomial (in the remaining
  /// variables, over the same table). Unknown indices are an error.
  Poly coeff(const std::vector<std::pair<std::size_t, unsigned>>& fixed) const;
  Poly coeff(std::initializer_list<std::pair<std::string_view, unsigned>> fixed) const;

  /// Composition: substitutes polynomials (over the same table) for the
  /// listed variables, leaving the rest untouched.
  Poly subst(const std::map<std::size_t, Poly>& assignment) const;
  Poly subst(const std::map<std::size_t, Rational>& assignment) const;
  /// Full evaluation; values must cover every table variable.
  Rational eval(const std::vector<Rational>& values) const;

  /// True iff every coefficient's denominator is a power of two, i.e. the
  /// polynomial lies in Z[1/2][vars].
  bool denominators_are_powers_of_two() const;

  /// Canonical text: terms in the graded order, "num/den" coefficients,
  /// e.g. "64*t^2 - 64*t^10".
  std::string str() const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

  friend Poly pow(const Poly& p, unsigned k);

  /// Exact division: the q with q*d == p, or nullopt when no such polynomial
  /// exists. Division by zero is a domain error; non-divisibility is not.
  friend std::optional<Poly> div_exact(const Poly& p, const Poly& d);

private:
  void add_term(const Monomial& m, const Rational& c);  // drops zeros
  VarTablePtr table_;
  TermMap terms_;
};

// int/long conveniences for readable construction of the fixed forms.
inline Poly operator+(Poly a, long c) { return a += Poly::constant(a.table(), c); }
inline Poly operator+(long c, Poly a) { return a += Poly::constant(a.table(), c); }
inline Poly operator-(Poly a, long c) { return a -= Poly::constant(a.table(), c); }
inline Poly operator-(long c, const Poly& a) { return Poly::constant(a.table(), c) - a; }
inline Poly operator*(const Poly& a, long c) { return a * Rational(c); }
inline Poly operator*(long c, const Poly& a) { return a * Rational(c); }

}  // namespace qfold
