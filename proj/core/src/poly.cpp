#include "qfold/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace qfold {

namespace {

void require_same_table(const Poly& a, const Poly& b) {
  if (a.table() == b.table() || *a.table() == *b.table()) return;
  throw std::invalid_argument("polynomials use different variable tables");
}

unsigned long degree_sum(const Monomial& m) {
  unsigned long d = 0;
  for (unsigned e : m) d += e;
  return d;
}

}  // namespace

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("variable table is empty");
  std::set<std::string_view> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second)
      throw std::invalid_argument("duplicate variable name: " + n);
  }
}

VarTablePtr VarTable::make(std::initializer_list<std::string> names) {
  return std::make_shared<const VarTable>(std::vector<std::string>(names));
}

VarTablePtr VarTable::make(std::vector<std::string> names) {
  return std::make_shared<const VarTable>(std::move(names));
}

std::optional<std::size_t> VarTable::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t VarTable::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw std::invalid_argument("unknown variable: " + std::string(name));
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned long da = degree_sum(a), db = degree_sum(b);
  if (da != db) return da < db;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return a.size() < b.size();
}

Poly::Poly(VarTablePtr table) : table_(std::move(table)) {
  if (!table_) throw std::invalid_argument("null variable table");
}

Poly Poly::constant(VarTablePtr table, const Rational& c) {
  Poly p(std::move(table));
  p.add_term(Monomial(p.table_->size(), 0), c);
  return p;
}

Poly Poly::constant(VarTablePtr table, long c) {
  return constant(std::move(table), Rational(c));
}

Poly Poly::var(VarTablePtr table, std::size_t index, unsigned exp) {
  Poly p(std::move(table));
  if (index >= p.table_->size()) throw std::invalid_argument("variable index out of range");
  Monomial m(p.table_->size(), 0);
  m[index] = exp;
  p.add_term(m, Rational(1));
  return p;
}

Poly Poly::var(VarTablePtr table, std::string_view name, unsigned exp) {
  const std::size_t i = table->require(name);
  return var(std::move(table), i, exp);
}

Poly Poly::term(VarTablePtr table, Monomial m, const Rational& c) {
  Poly p(std::move(table));
  if (m.size() != p.table_->size())
    throw std::invalid_argument("exponent vector does not match the table");
  p.add_term(m, c);
  return p;
}

unsigned long Poly::total_degree() const {
  return terms_.empty() ? 0 : degree_sum(terms_.rbegin()->first);
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && degree_sum(terms_.begin()->first) == 0);
}

Rational Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::invalid_argument("polynomial is not constant");
  return terms_.begin()->second;
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(table_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
  require_same_table(*this, rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  require_same_table(*this, rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_table(a, b);
  Poly r(a.table_);
  Monomial m(a.table_->size(), 0);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  return (a.table_ == b.table_ || *a.table_ == *b.table_) && a.terms_ == b.terms_;
}

Poly pow(const Poly& p, unsigned k) {
  Poly result = Poly::constant(p.table(), 1);
  Poly base = p;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

Poly Poly::coeff(const std::vector<std::pair<std::size_t, unsigned>>& fixed) const {
  for (const auto& [i, _] : fixed)
    if (i >= table_->size()) throw std::invalid_argument("variable index out of range");
  Poly r(table_);
  for (const auto& [m, c] : terms_) {
    bool hit = true;
    for (const auto& [i, e] : fixed)
      if (m[i] != e) {
        hit = false;
        break;
      }
    if (!hit) continue;
    Monomial rest = m;
    for (const auto& [i, _] : fixed) rest[i] = 0;
    r.add_term(rest, c);
  }
  return r;
}

Poly Poly::coeff(std::initializer_list<std::pair<std::string_view, unsigned>> fixed) const {
  std::vector<std::pair<std::size_t, unsigned>> by_index;
  by_index.reserve(fixed.size());
  for (const auto& [name, e] : fixed) by_index.emplace_back(table_->require(name), e);
  return coeff(by_index);
}

Poly Poly::subst(const std::map<std::size_t, Poly>& assignment) const {
  for (const auto& [i, value] : assignment) {
    if (i >= table_->size()) throw std::invalid_argument("variable index out of range");
    require_same_table(*this, value);
  }
  // powers[i][e] caches value_i^e
  std::map<std::size_t, std::vector<Poly>> powers;
  for (const auto& [i, value] : assignment) powers.emplace(i, std::vector<Poly>{constant(table_, 1), value});

  Poly result(table_);
  for (const auto& [m, c] : terms_) {
    Monomial kept = m;
    Poly factor = constant(table_, c);
    for (const auto& [i, _] : assignment) {
      const unsigned e = m[i];
      kept[i] = 0;
      if (e == 0) continue;
      auto& cache = powers[i];
      while (cache.size() <= e) cache.push_back(cache.back() * cache[1]);
      factor *= cache[e];
    }
    Poly keptPoly(table_);
    keptPoly.add_term(kept, Rational(1));
    result += factor * keptPoly;
  }
  return result;
}

Poly Poly::subst(const std::map<std::size_t, Rational>& assignment) const {
  std::map<std::size_t, Poly> lifted;
  for (const auto& [i, q] : assignment) lifted.emplace(i, constant(table_, q));
  return subst(lifted);
}

Rational Poly::eval(const std::vector<Rational>& values) const {
  if (values.size() != table_->size())
    throw std::invalid_argument("evaluation needs one value per variable");
  std::vector<std::vector<Rational>> powers(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) powers[i] = {Rational(1), values[i]};
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      auto& cache = powers[i];
      while (cache.size() <= m[i]) cache.push_back(cache.back() * values[i]);
      term *= cache[m[i]];
    }
    sum += term;
  }
  return sum;
}

std::optional<Poly> div_exact(const Poly& p, const Poly& d) {
  require_same_table(p, d);
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  // Repeatedly cancel the leading term; for a divisible p this terminates
  // with remainder zero, and a stuck leading term proves non-divisibility.
  const auto& dlead = *d.terms_.rbegin();
  Poly q(p.table_);
  Poly r = p;
  Monomial shift(p.table_->size(), 0);
  while (!r.is_zero()) {
    const auto& rlead = *r.terms_.rbegin();
    for (std::size_t i = 0; i < shift.size(); ++i) {
      if (rlead.first[i] < dlead.first[i]) return std::nullopt;
      shift[i] = rlead.first[i] - dlead.first[i];
    }
    const Rational scale = rlead.second / dlead.second;
    Poly piece(p.table_);
    piece.add_term(shift, scale);
    q += piece;
    r -= piece * d;
  }
  return q;
}

bool Poly::denominators_are_powers_of_two() const {
  for (const auto& [m, c] : terms_)
    if (!is_power_of_two(BigInt(c.get_den()))) return false;
  return true;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    const Rational mag = negative ? Rational(-c) : c;
    std::string vars;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += table_->name(i);
      if (m[i] > 1) vars += "^" + std::to_string(m[i]);
    }
    if (vars.empty()) {
      out << to_string(mag);
    } else if (mag == 1) {
      out << vars;
    } else {
      out << to_string(mag) << "*" << vars;
    }
  }
  return out.str();
}

}  // namespace qfold
