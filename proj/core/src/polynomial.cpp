#include "umbral/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "umbral/error.hpp"

namespace umbral {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::monomial(std::size_t degree, const Rational& coeff) {
  std::vector<Rational> c(degree + 1);
  c[degree] = coeff;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Polynomial r = *this;
  const Rational lead = leading();
  for (auto& c : r.coeffs_) c /= lead;
  return r;
}

Polynomial Polynomial::shifted(const Rational& shift) const {
  // Horner in polynomial arithmetic: ((c_d)(x+s) + c_{d-1})(x+s) + ...
  Polynomial acc;
  const Polynomial linear{shift, Rational(1)};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * linear + Polynomial::constant(*it);
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) out << umbral::to_string(mag);
    if (i > 0) {
      if (mag != 1) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::not_invertible, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  if (rem.size() <= db) return {Polynomial{}, a};
  std::vector<Rational> quot(rem.size() - db);
  for (std::size_t i = rem.size(); i-- > db;) {
    const Rational q = rem[i] / b.leading();
    quot[i - db] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeffs()[j];
  }
  rem.resize(db);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<Polynomial> squarefree_decomposition(const Polynomial& f) {
  std::vector<Polynomial> out;
  if (f.degree() < 1) return out;
  const Polynomial monic_f = f.monic();
  const Polynomial df = monic_f.derivative();
  const Polynomial c = gcd(monic_f, df);
  Polynomial w = divmod(monic_f, c).first;
  Polynomial y = divmod(df, c).first;
  Polynomial z = y - w.derivative();
  while (w.degree() > 0) {
    Polynomial g = gcd(w, z);
    out.push_back(g);
    w = divmod(w, g).first;
    y = divmod(z, g).first;
    z = y - w.derivative();
  }
  return out;
}

}  // namespace umbral
