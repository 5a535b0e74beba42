#include "quadrik/sextic.hpp"

#include <algorithm>
#include <numeric>
#include <span>
#include <vector>

#include "quadrik/error.hpp"
#include "quadrik/stability.hpp"

namespace quadrik {

namespace {

struct InvariantTerm {
  long coefficient;
  std::array<int, 7> exponents;
};

#include "sextic_invariants_table.inc"

Rational evaluate_terms(std::span<const InvariantTerm> terms, const std::array<std::vector<Rational>, 7>& powers) {
  Rational acc;
  for (const auto& term : terms) {
    Rational m(term.coefficient);
    for (std::size_t i = 0; i < 7; ++i) {
      const int e = term.exponents[i];
      if (e == 0) continue;
      m *= powers[i][static_cast<std::size_t>(e)];
      if (m.is_zero()) break;
    }
    acc += m;
  }
  return acc;
}

// x, y with a x + b y = gcd(a, b), for non-negative a, b.
std::array<long, 3> extended_gcd(long a, long b) {
  if (b == 0) return {a, 1, 0};
  const auto [g, x, y] = extended_gcd(b, a % b);
  return {g, y, x - (a / b) * y};
}

Rational signed_pow(const Rational& base, long e) {
  return e >= 0 ? base.pow(static_cast<unsigned>(e)) : base.inverse().pow(static_cast<unsigned>(-e));
}

}  // namespace

SexticInvariants sextic_invariants(const BinaryForm& f) {
  if (f.degree() != 6) throw Error(ErrorCode::WrongDegree, "sextic invariants need a degree-6 form");
  std::array<std::vector<Rational>, 7> powers;
  for (std::size_t i = 0; i < 7; ++i) {
    powers[i].reserve(11);
    powers[i].emplace_back(1);
    for (int e = 1; e <= 10; ++e) powers[i].push_back(powers[i].back() * f.coefficient(static_cast<int>(i)));
  }
  return {evaluate_terms(kI2Terms, powers), evaluate_terms(kI4Terms, powers), evaluate_terms(kI6Terms, powers),
          evaluate_terms(kI10Terms, powers)};
}

ModuliPoint moduli_point(const BinaryForm& discriminant) {
  const SexticInvariants inv = sextic_invariants(discriminant.content_normalized());
  ModuliPoint p{inv.as_array(), inv.i10.is_zero()};
  bool all_zero = true;
  for (const auto& c : p.coordinates) all_zero = all_zero && c.is_zero();
  if (all_zero) throw Error(ErrorCode::AllInvariantsZero, "all sextic invariants vanish (GIT-unstable sextic)");
  return p;
}

ModuliPoint moduli_point(const QuadricPencil& pencil) {
  if (pencil.dimension() != 3) throw Error(ErrorCode::WrongDimension, "moduli coordinates exist for n = 3 only");
  const KEVerdict verdict = ke_decision(pencil);
  if (!verdict.admits_ke()) throw Error(ErrorCode::NotKEInput, "pencil is not KE: " + verdict.reason.detail);
  return moduli_point(verdict.profile.form);
}

bool weighted_equal(const ModuliPoint& p, const ModuliPoint& q) {
  auto all_zero = [](const ModuliPoint& m) {
    return std::all_of(m.coordinates.begin(), m.coordinates.end(), [](const Rational& c) { return c.is_zero(); });
  };
  if (all_zero(p) || all_zero(q)) throw Error(ErrorCode::InvalidArgument, "weighted point with all coordinates zero");
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < 4; ++i) {
    if (p.coordinates[i].is_zero() != q.coordinates[i].is_zero()) return false;
    if (!p.coordinates[i].is_zero()) support.push_back(i);
  }

  // With g = gcd of the supported weights and sum e_w w = g, the only candidate
  // for t^g is s = prod (q_w/p_w)^e_w; a t exists iff q_w/p_w = s^(w/g) for all w.
  long g = 0;
  std::vector<long> bezout;
  for (const std::size_t i : support) {
    const long w = kModuliWeights[i];
    const auto [ng, x, y] = extended_gcd(g, w);
    for (auto& e : bezout) e *= x;
    bezout.push_back(y);
    g = ng;
  }
  Rational s(1);
  for (std::size_t k = 0; k < support.size(); ++k) {
    const std::size_t i = support[k];
    s *= signed_pow(q.coordinates[i] / p.coordinates[i], bezout[k]);
  }
  for (const std::size_t i : support) {
    const long w = kModuliWeights[i];
    if (q.coordinates[i] / p.coordinates[i] != s.pow(static_cast<unsigned>(w / g))) return false;
  }
  return true;
}

}  // namespace quadrik
