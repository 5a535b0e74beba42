#pragma once

#include <vector>

#include "quadrik/polynomial.hpp"

namespace quadrik {

/// Homogeneous form sum_i c_i lambda^(d-i) mu^i in two variables.
class BinaryForm {
 public:
  BinaryForm() : degree_(0), c_(1) {}
  BinaryForm(int degree, std::vector<Rational> coefficients);

  /// Homogenizes f(t) to degree d via F(lambda, mu) = mu^d f(lambda / mu).
  /// Requires deg f <= d.
  static BinaryForm homogenize(const Polynomial& f, int degree);

  int degree() const { return degree_; }
  std::span<const Rational> coefficients() const { return c_; }
  const Rational& coefficient(int i) const { return c_.at(static_cast<std::size_t>(i)); }
  bool is_zero() const;

  /// f(t) = F(t, 1).
  Polynomial dehomogenize() const;
  Rational evaluate(const Rational& lambda, const Rational& mu) const;

  /// F(a*lambda + b*mu, c*lambda + d*mu).
  BinaryForm substitute(const Rational& a, const Rational& b, const Rational& c,
                        const Rational& d) const;

  /// Coprime integer coefficients, first nonzero coefficient positive.
  BinaryForm content_normalized() const;

  /// Multiplicity of the root [1:0], i.e. the largest k with mu^k | F.
  int infinity_multiplicity() const;

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  int degree_;
  std::vector<Rational> c_;
};

}  // namespace quadrik
