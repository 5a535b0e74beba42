#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quadrik/rational.hpp"

namespace quadrik {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// The coefficient list never carries trailing zeros; the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int degree);
  /// The polynomial t - root.
  static Polynomial linear(const Rational& root);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  /// Coefficient of t^i; zero beyond the degree.
  Rational coefficient(int i) const;
  const Rational& leading() const;
  std::span<const Rational> coefficients() const { return c_; }

  Rational evaluate(const Rational& t) const;
  Polynomial derivative() const;
  Polynomial monic() const;
  Polynomial scaled(const Rational& s) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial pow(unsigned exponent) const;

  /// Human-readable, e.g. "t^2 - 3/2*t + 1".
  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division; throws Error(DivisionByZero) when divisor is zero.
DivMod divmod(const Polynomial& a, const Polynomial& b);
/// Exact quotient; the caller guarantees b divides a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

struct SquarefreePart {
  Polynomial factor;  // monic, squarefree, degree >= 1
  int multiplicity;

  friend bool operator==(const SquarefreePart&, const SquarefreePart&) = default;
};

/// p = unit * prod factor^multiplicity, with pairwise coprime factors and
/// strictly increasing multiplicities.
struct SquarefreeDecomposition {
  std::vector<SquarefreePart> parts;
  Rational unit;

  Polynomial reconstruct() const;
  /// Product of the factors: the monic radical of p.
  Polynomial squarefree_part() const;
  int max_multiplicity() const;
};

/// Yun's algorithm over Q. Throws Error(ZeroPolynomial).
SquarefreeDecomposition squarefree_decomposition(const Polynomial& p);

/// Unique polynomial of degree < points.size() through the given points.
/// Throws Error(DuplicateAbscissa) or Error(InvalidArgument) on empty input.
Polynomial interpolate(std::span<const std::pair<Rational, Rational>> points);

/// Interpolation nodes 0, 1, -1, 2, -2, ...
std::vector<Rational> interpolation_nodes(std::size_t count);

/// Resultant of a and b (product of b over the roots of a, scaled by lc(a)^deg b).
Rational resultant(const Polynomial& a, const Polynomial& b);

/// (-1)^(d(d-1)/2) / lc(p) * Res(p, p'). Throws Error(ConstantPolynomial).
Rational polynomial_discriminant(const Polynomial& p);

}  // namespace quadrik
