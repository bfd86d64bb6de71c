#include "stringy/series.hpp"

#include <algorithm>

#include "stringy/errors.hpp"

namespace stringy {

namespace {

void require_order(int order) {
  if (order < 0) throw DomainError("negative series order");
}

}  // namespace

SeriesAtOne::SeriesAtOne(int order) {
  require_order(order);
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

SeriesAtOne::SeriesAtOne(std::vector<Rat> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw DomainError("series needs at least one coefficient");
}

SeriesAtOne SeriesAtOne::constant(const Rat& c, int order) {
  SeriesAtOne s(order);
  s.coeffs_[0] = c;
  return s;
}

SeriesAtOne SeriesAtOne::variable(int order) {
  SeriesAtOne s = constant(Rat(1), order);
  if (order >= 1) s.coeffs_[1] = Rat(1);
  return s;
}

SeriesAtOne SeriesAtOne::binomial(const Rat& r, int order) {
  SeriesAtOne s(order);
  Rat c(1);
  for (int k = 0; k <= order; ++k) {
    s.coeffs_[static_cast<std::size_t>(k)] = c;
    c = c * (r - Rat(k)) / Rat(k + 1);
  }
  return s;
}

SeriesAtOne SeriesAtOne::of_polynomial(const UniPoly& p, int order) {
  return variable(order).compose_into(p);
}

Rat SeriesAtOne::derivative(int k) const {
  if (k < 0 || k > order()) throw DomainError("derivative order beyond truncation");
  Rat factorial(1);
  for (int i = 2; i <= k; ++i) factorial *= Rat(i);
  return factorial * coeffs_[static_cast<std::size_t>(k)];
}

SeriesAtOne SeriesAtOne::compose_into(const UniPoly& p) const {
  SeriesAtOne acc(order());
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * *this;
    acc.coeffs_[0] += *it;
  }
  return acc;
}

SeriesAtOne SeriesAtOne::truncated(int order) const {
  require_order(order);
  std::vector<Rat> c(static_cast<std::size_t>(order) + 1);
  std::copy_n(coeffs_.begin(), std::min(c.size(), coeffs_.size()), c.begin());
  return SeriesAtOne(std::move(c));
}

SeriesAtOne SeriesAtOne::reciprocal() const {
  if (coeffs_[0].is_zero()) {
    throw DomainError("reciprocal of a series vanishing at u = 1");
  }
  const std::size_t n = coeffs_.size();
  std::vector<Rat> out(n);
  const Rat inv0 = Rat(1) / coeffs_[0];
  out[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    Rat acc;
    for (std::size_t i = 1; i <= k; ++i) acc += coeffs_[i] * out[k - i];
    out[k] = -acc * inv0;
  }
  return SeriesAtOne(std::move(out));
}

SeriesAtOne SeriesAtOne::operator-() const {
  SeriesAtOne out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

SeriesAtOne& SeriesAtOne::operator+=(const SeriesAtOne& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

SeriesAtOne& SeriesAtOne::operator-=(const SeriesAtOne& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

SeriesAtOne& SeriesAtOne::operator*=(const Rat& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

SeriesAtOne operator*(const SeriesAtOne& lhs, const SeriesAtOne& rhs) {
  const std::size_t n = std::min(lhs.coeffs_.size(), rhs.coeffs_.size());
  std::vector<Rat> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return SeriesAtOne(std::move(out));
}

SeriesAtOne operator/(const SeriesAtOne& lhs, const SeriesAtOne& rhs) {
  return lhs * rhs.reciprocal();
}

SeriesAtOne correction_series(const Rat& a, int order) {
  if (a <= Rat(-1)) {
    throw DomainError("discrepancy " + a.str() + " <= -1: not log-terminal");
  }
  if (order < 2) throw DomainError("correction series needs order >= 2");
  const int work = std::max(order, kDefaultSeriesOrder);
  // (1 + e)^b - 1 = e * g(e) with g_k = binom(b, k + 1), g_0 = b != 0
  const Rat b = a + Rat(1);
  const SeriesAtOne power = SeriesAtOne::binomial(b, work + 1);
  std::vector<Rat> g(power.coefficients().begin() + 1, power.coefficients().end());
  SeriesAtOne f = SeriesAtOne(std::move(g)).reciprocal();
  f -= SeriesAtOne::constant(Rat(1), work);
  return f.truncated(order);
}

Rat correction_limit(const Rat& a) {
  if (a <= Rat(-1)) {
    throw DomainError("discrepancy " + a.str() + " <= -1: not log-terminal");
  }
  return -a / (a + Rat(1));
}

}  // namespace stringy
