#include "quadrik/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "quadrik/error.hpp"

namespace quadrik {

Polynomial::Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : c_(coefficients) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const Rational& root) { return Polynomial({-root, Rational(1)}); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return c_[static_cast<std::size_t>(i)];
}

const Rational& Polynomial::leading() const {
  if (c_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
  return c_.back();
}

Rational Polynomial::evaluate(const Rational& t) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return scaled(leading().inverse());
}

Polynomial Polynomial::scaled(const Rational& s) const {
  std::vector<Rational> v(c_);
  for (auto& x : v) x *= s;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const { return scaled(Rational(-1)); }

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(Rational(1));
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (i == 0) {
      os << mag;
      continue;
    }
    if (!unit) os << mag << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Rational inv_lead = b.leading().inverse();
  const auto bc = b.coefficients();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const std::size_t top = static_cast<std::size_t>(k + b.degree());
    const Rational q = rem[top] * inv_lead;
    quo[static_cast<std::size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= q * bc[j];
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) { return divmod(a, b).quotient; }

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

Polynomial SquarefreeDecomposition::reconstruct() const {
  Polynomial p = Polynomial::constant(unit);
  for (const auto& part : parts) p = p * part.factor.pow(static_cast<unsigned>(part.multiplicity));
  return p;
}

Polynomial SquarefreeDecomposition::squarefree_part() const {
  Polynomial p = Polynomial::constant(Rational(1));
  for (const auto& part : parts) p = p * part.factor;
  return p;
}

int SquarefreeDecomposition::max_multiplicity() const {
  return parts.empty() ? 0 : parts.back().multiplicity;
}

SquarefreeDecomposition squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree decomposition of zero");
  SquarefreeDecomposition out;
  out.unit = p.leading();
  if (p.degree() == 0) return out;

  const Polynomial a = p.monic();
  const Polynomial da = a.derivative();
  const Polynomial c = gcd(a, da);
  Polynomial w = exact_divide(a, c);
  Polynomial y = exact_divide(da, c);
  Polynomial z = y - w.derivative();
  for (int i = 1; w.degree() > 0; ++i) {
    const Polynomial g = gcd(w, z);
    if (g.degree() > 0) out.parts.push_back({g, i});
    w = exact_divide(w, g);
    y = exact_divide(z, g);
    z = y - w.derivative();
  }
  return out;
}

Polynomial interpolate(std::span<const std::pair<Rational, Rational>> points) {
  if (points.empty()) throw Error(ErrorCode::InvalidArgument, "interpolation needs at least one point");
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points[i].first == points[j].first) {
        throw Error(ErrorCode::DuplicateAbscissa, "duplicate abscissa " + points[i].first.str());
      }
    }
  }
  // Newton divided differences, then expand the Newton form by Horner.
  std::vector<Rational> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
    }
  }
  Polynomial result = Polynomial::constant(dd[n - 1]);
  for (std::size_t k = n - 1; k-- > 0;) {
    result = result * Polynomial::linear(points[k].first) + Polynomial::constant(dd[k]);
  }
  return result;
}

std::vector<Rational> interpolation_nodes(std::size_t count) {
  std::vector<Rational> nodes;
  nodes.reserve(count);
  for (long k = 0; nodes.size() < count; ++k) {
    nodes.emplace_back(k);
    if (k > 0 && nodes.size() < count) nodes.emplace_back(-k);
  }
  return nodes;
}

Rational resultant(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Rational(0);
  const int m = a.degree();
  const int n = b.degree();
  if (n == 0) return b.leading().pow(static_cast<unsigned>(m));
  if (m == 0) return a.leading().pow(static_cast<unsigned>(n));
  // Res(a, b) = (-1)^(mn) Res(b, a) and Res(b, a) = lc(b)^(m - deg r) Res(b, r), r = a mod b.
  const Polynomial r = divmod(a, b).remainder;
  if (r.is_zero()) return Rational(0);
  Rational sign = ((m * n) % 2 == 0) ? Rational(1) : Rational(-1);
  return sign * b.leading().pow(static_cast<unsigned>(m - r.degree())) * resultant(b, r);
}

Rational polynomial_discriminant(const Polynomial& p) {
  if (p.degree() < 1) throw Error(ErrorCode::ConstantPolynomial, "discriminant of a constant");
  const int d = p.degree();
  const Rational sign = ((d * (d - 1) / 2) % 2 == 0) ? Rational(1) : Rational(-1);
  return sign * resultant(p, p.derivative()) / p.leading();
}

}  // namespace quadrik
