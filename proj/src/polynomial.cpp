#include "stringy/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "stringy/errors.hpp"

namespace stringy {

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::initializer_list<Rat> coefficients) : coeffs_(coefficients) {
  trim();
}

UniPoly::UniPoly(std::vector<Rat> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

UniPoly UniPoly::constant(const Rat& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(const Rat& c, std::size_t degree) {
  std::vector<Rat> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rat UniPoly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rat(0);
}

Rat UniPoly::eval(const Rat& x) const {
  Rat acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = coeffs_[i] * Rat(static_cast<std::int64_t>(i));
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rat& scalar) {
  if (scalar.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rat> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return UniPoly(std::move(out));
}

std::string UniPoly::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rat& c = coeffs_[i];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const Rat mag = c.abs();
    if (i == 0 || mag != Rat(1)) os << mag;
    if (i > 0) {
      if (mag != Rat(1)) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

QuotientRemainder divmod(const UniPoly& dividend, const UniPoly& divisor) {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rat> rem = dividend.coefficients();
  const auto& d = divisor.coefficients();
  const std::size_t dn = d.size();
  if (rem.size() < dn) return {UniPoly{}, dividend};
  std::vector<Rat> quot(rem.size() - dn + 1);
  const Rat lead = divisor.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rat c = rem[k + dn - 1] / lead;
    quot[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t i = 0; i < dn; ++i) rem[k + i] -= c * d[i];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Rat(1) / a.leading());
}

// ----------------------------------------------------------------- BiPoly

BiPoly::BiPoly(std::initializer_list<std::pair<const Exponent, Integer>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

BiPoly::BiPoly(Terms terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

BiPoly BiPoly::constant(const Integer& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const Integer& c, int p, int q) {
  BiPoly out;
  out.add_term({p, q}, c);
  return out;
}

BiPoly BiPoly::from_diagonal(const UniPoly& d) {
  BiPoly out;
  const auto& c = d.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i].is_integer()) {
      throw DomainError("diagonal polynomial must have integer coefficients");
    }
    out.add_term({static_cast<int>(i), static_cast<int>(i)}, c[i].numerator());
  }
  return out;
}

void BiPoly::add_term(const Exponent& e, const Integer& c) {
  if (e.first < 0 || e.second < 0) throw DomainError("negative exponent in BiPoly");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer BiPoly::coefficient(int p, int q) const {
  auto it = terms_.find({p, q});
  return it == terms_.end() ? Integer(0) : it->second;
}

int BiPoly::degree_u() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

int BiPoly::degree_v() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

Rat BiPoly::eval(const Rat& u, const Rat& v) const {
  Rat acc;
  for (const auto& [e, c] : terms_) acc += Rat(c) * u.pow(e.first) * v.pow(e.second);
  return acc;
}

UniPoly BiPoly::at_v_one() const {
  std::vector<Rat> out(static_cast<std::size_t>(degree_u() + 1));
  for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e.first)] += Rat(c);
  return UniPoly(std::move(out));
}

Integer BiPoly::value_at_one() const {
  Integer acc = 0;
  for (const auto& [e, c] : terms_) acc += c;
  return acc;
}

std::optional<Exponent> BiPoly::duality_violation(int d) const {
  for (const auto& [e, c] : terms_) {
    const int p = d - e.first;
    const int q = d - e.second;
    if (p < 0 || q < 0 || coefficient(p, q) != c) return e;
  }
  return std::nullopt;
}

std::optional<Exponent> BiPoly::conjugation_violation() const {
  for (const auto& [e, c] : terms_) {
    if (coefficient(e.second, e.first) != c) return e;
  }
  return std::nullopt;
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs) {
  BiPoly out;
  for (const auto& [a, ca] : lhs.terms_) {
    for (const auto& [b, cb] : rhs.terms_) {
      out.add_term({a.first + b.first, a.second + b.second}, ca * cb);
    }
  }
  return out;
}

std::string BiPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    std::vector<std::string> factors;
    const Integer mag = abs(c);
    if (mag != 1 || (e.first == 0 && e.second == 0)) factors.push_back(mag.get_str());
    auto power = [](char name, int k) {
      return k == 1 ? std::string(1, name) : std::string(1, name) + "^" + std::to_string(k);
    };
    if (e.first > 0) factors.push_back(power('u', e.first));
    if (e.second > 0) factors.push_back(power('v', e.second));
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

// ----------------------------------------------------------- exact_divide

DivisionResult exact_divide(const BiPoly& numerator, const UniPoly& divisor) {
  if (divisor.is_zero()) throw DomainError("exact_divide by the zero polynomial");
  // diagonal k = p - q  ->  coefficients by t-degree min(p, q)
  std::map<int, std::vector<Rat>> diagonals;
  for (const auto& [e, c] : numerator.terms()) {
    auto& row = diagonals[e.first - e.second];
    const auto t = static_cast<std::size_t>(std::min(e.first, e.second));
    if (row.size() <= t) row.resize(t + 1);
    row[t] = Rat(c);
  }
  BiPoly quotient;
  for (auto& [k, row] : diagonals) {
    auto [q, r] = divmod(UniPoly(std::move(row)), divisor);
    if (!r.is_zero()) return DivisionFailure{k, r, "nonzero remainder"};
    const int du = std::max(k, 0);
    const int dv = std::max(-k, 0);
    const auto& qc = q.coefficients();
    for (std::size_t i = 0; i < qc.size(); ++i) {
      if (qc[i].is_zero()) continue;
      if (!qc[i].is_integer()) return DivisionFailure{k, {}, "non-integral quotient"};
      const int t = static_cast<int>(i);
      quotient += BiPoly::monomial(qc[i].numerator(), du + t, dv + t);
    }
  }
  return quotient;
}

}  // namespace stringy
