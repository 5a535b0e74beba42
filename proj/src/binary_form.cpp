#include "quadrik/binary_form.hpp"

#include <algorithm>

#include "quadrik/error.hpp"

namespace quadrik {

BinaryForm::BinaryForm(int degree, std::vector<Rational> coefficients)
    : degree_(degree), c_(std::move(coefficients)) {
  if (degree < 0 || c_.size() != static_cast<std::size_t>(degree) + 1) {
    throw Error(ErrorCode::InvalidArgument, "binary form needs degree+1 coefficients");
  }
}

BinaryForm BinaryForm::homogenize(const Polynomial& f, int degree) {
  if (f.degree() > degree) throw Error(ErrorCode::WrongDegree, "polynomial degree exceeds form degree");
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  for (int i = 0; i <= degree; ++i) c[static_cast<std::size_t>(i)] = f.coefficient(degree - i);
  return BinaryForm(degree, std::move(c));
}

bool BinaryForm::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

Polynomial BinaryForm::dehomogenize() const {
  std::vector<Rational> p(c_.rbegin(), c_.rend());
  return Polynomial(std::move(p));
}

Rational BinaryForm::evaluate(const Rational& lambda, const Rational& mu) const {
  Rational acc;
  for (int i = 0; i <= degree_; ++i) {
    const auto& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    acc += c * lambda.pow(static_cast<unsigned>(degree_ - i)) * mu.pow(static_cast<unsigned>(i));
  }
  return acc;
}

BinaryForm BinaryForm::substitute(const Rational& a, const Rational& b, const Rational& c,
                                  const Rational& d) const {
  // Work with mu = 1: lambda -> a t + b, mu -> c t + d.
  const Polynomial first({b, a});
  const Polynomial second({d, c});
  Polynomial acc;
  for (int i = 0; i <= degree_; ++i) {
    const auto& coeff = c_[static_cast<std::size_t>(i)];
    if (coeff.is_zero()) continue;
    acc += (first.pow(static_cast<unsigned>(degree_ - i)) * second.pow(static_cast<unsigned>(i))).scaled(coeff);
  }
  return homogenize(acc, degree_);
}

BinaryForm BinaryForm::content_normalized() const {
  if (is_zero()) return *this;
  Integer den_lcm = 1;
  for (const auto& c : c_) {
    if (!c.is_zero()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
  }
  std::vector<Integer> ints;
  ints.reserve(c_.size());
  Integer g = 0;
  for (const auto& c : c_) {
    Integer v = c.numerator() * (den_lcm / c.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  const auto first = std::find_if(ints.begin(), ints.end(), [](const Integer& v) { return v != 0; });
  if (*first < 0) g = -g;
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (const auto& v : ints) out.emplace_back(Integer(v / g));
  return BinaryForm(degree_, std::move(out));
}

int BinaryForm::infinity_multiplicity() const {
  int k = 0;
  while (k <= degree_ && c_[static_cast<std::size_t>(k)].is_zero()) ++k;
  return k;
}

}  // namespace quadrik
