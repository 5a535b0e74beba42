// Acceptance run: one PASS/FAIL line per criterion, each with its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "quadrik/document.hpp"
#include "quadrik/kernels.hpp"
#include "quadrik/polynomial.hpp"
#include "quadrik/report.hpp"

using namespace quadrik;
using oracle::GaussQ;

namespace {

struct Outcome {
  bool ok = true;
  std::string failure;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      failure = what;
    }
  }
};

std::vector<Rational> coefficients(const BinaryForm& f) { return {f.coefficients().begin(), f.coefficients().end()}; }

void toric_example(Outcome& o) {
  const auto r = analyze(make_input(fixtures::toric(), "toric"));
  o.require(r.verdict.kind == KEClass::PolystableBoundary, "verdict");
  o.require(r.discriminant.multiplicity_counts == MultiplicityCounts{{2, 3}}, "multiplicities");
  o.require(r.singularities && r.singularities->isolated_odp_count == 6, "ODP count");
  o.require(r.moduli_point && r.moduli_point->boundary, "moduli point not on the boundary");
  const auto raw = discriminant_profile(fixtures::toric()).form;
  o.require(coefficients(raw) == oracle::cofactor_determinant(fixtures::toric().a().matrix(), fixtures::toric().b().matrix()),
            "discriminant differs from cofactor expansion");
  o.require(raw.coefficient(2) == Rational(-1, 64) && raw.coefficient(3) == Rational(2, 64), "discriminant values");
}

void orbifold_example(Outcome& o) {
  const auto r = analyze(make_input(fixtures::cp3_z2(), "cp3/z2"));
  o.require(r.verdict.equality_case, "equality case");
  o.require(r.verdict.kind == KEClass::PolystableBoundary, "verdict");
  o.require(r.singularities.has_value(), "no singularity report");
  const auto& s = *r.singularities;
  o.require(s.strata.size() == 1 && s.strata[0].root_count == 2 && s.strata[0].components_per_root == 1,
            "strata layout");
  o.require(s.component_count() == 2, "component count");
  o.require(!s.strata.empty() && s.strata[0].stratum_dim == 1, "stratum dimension");
  o.require(!s.strata.empty() && s.strata[0].transverse_type == "C^1 x A_1^2", "transverse type");
  o.require(s.special_orbifold, "special_orbifold");
}

void partition_sweep(Outcome& o) {
  int checked = 0;
  for (int n = 2; n <= 5; ++n) {
    std::uint64_t seed = 1000;
    for (const auto& parts : oracle::partitions(n + 3)) {
      const auto r = analyze(make_input(generate_pencil(n, parts, seed++).pencil()));
      std::ostringstream where;
      where << "n=" << n << " pattern of " << parts.size() << " parts, max " << parts.front();
      o.require(r.verdict.kind != KEClass::NotKE ? oracle::multiset_admits_ke(n, parts)
                                                 : !oracle::multiset_admits_ke(n, parts),
                "verdict mismatch at " + where.str());
      o.require(r.diagonalizable == (parts.size() >= 2), "diagonalizability at " + where.str());
      o.require(r.verdict.equality_case == (parts.size() == 2 && parts[0] == parts[1]), "equality at " + where.str());
      o.require(r.discriminant.multiplicity_counts == oracle::counts_of(parts), "counts at " + where.str());
      ++checked;
    }
  }
  o.require(checked == 7 + 11 + 15 + 22, "partition count");
  o.note << checked << " partitions";
}

void volume_constants(Outcome& o) {
  o.require(del_pezzo_volume(3, 4) == Rational(32) && Rational(32) == Rational(64) / Rational(2), "V(3,4)");
  o.require(gorenstein_threshold(3) == Rational(32), "threshold(3)");
  for (int n = 4; n <= 20; ++n) {
    o.require(del_pezzo_volume(n, 4) > Rational(Rational(n + 1).pow(static_cast<unsigned>(n))) / Rational(2),
              "volume bound at n=" + std::to_string(n));
  }
  o.require(del_pezzo_volume(3, 3) == Rational(24) && Rational(24) > Rational(512, 27) &&
                conjectural_threshold(3) == Rational(512, 27),
            "cubic");
  o.require(cone_density("Stenzel(3)").density == Rational(16, 27), "Stenzel(3)");
  o.require(cone_density("A2_3d").density == Rational(125, 243), "A2");
  const auto v = analyze_volume(3, Rational(22), 1);
  o.require(v.cartier_index_bound == 4, "Lambda bound");
  bool annotated = false;
  for (const auto& a : v.annotations) annotated = annotated || a.find("at most two") != std::string::npos;
  o.require(annotated, "index annotation");
}

void discriminant_oracle(Outcome& o) {
  std::mt19937_64 rng(0xD15C);
  for (int k = 0; k < 200; ++k) {
    const std::size_t size = 4 + static_cast<std::size_t>(k % 4);
    const Matrix a = oracle::random_symmetric(rng, size, 5, 3);
    const Matrix b = oracle::random_symmetric(rng, size, 5, 2);
    const auto expected = oracle::cofactor_determinant(a, b);
    const auto poly = kernels::determinant_polynomial(a, b);
    o.require(coefficients(BinaryForm::homogenize(poly, static_cast<int>(size))) == expected,
              "interpolated determinant differs at sample " + std::to_string(k));
    o.require(kernels::determinant_polynomial(a, b, kernels::Execution::Serial) == poly, "serial kernel differs");
    if (size >= 5) {
      const QuadricPencil p(static_cast<int>(size) - 3, SymmetricMatrix(a), SymmetricMatrix(b));
      o.require(coefficients(discriminant_profile(p).form) == expected, "profile form differs");
    }
  }
  o.note << "200 pencils";
}

// A diagonal pencil whose block b has direction (alpha_b, beta_b) and whose
// entries are scaled by rational squares s_i^2, conjugated by a random S.
struct DiagonalCase {
  int n = 0;
  std::vector<int> block_of;
  std::vector<std::pair<Rational, Rational>> directions;
  std::vector<Rational> scale;
  Matrix a, b, s;
};

DiagonalCase random_diagonal_case(std::mt19937_64& rng) {
  DiagonalCase c;
  const std::size_t size = 5 + rng() % 3;
  c.n = static_cast<int>(size) - 3;
  std::vector<int> parts;
  for (;;) {
    const auto all = oracle::partitions(static_cast<int>(size));
    parts = all[rng() % all.size()];
    if (parts.size() >= 2) break;
  }
  std::vector<int> eigen;
  for (int e = -6; e <= 6; ++e) eigen.push_back(e);
  std::shuffle(eigen.begin(), eigen.end(), rng);
  for (std::size_t blk = 0; blk < parts.size(); ++blk) {
    if (blk == 0 && rng() % 4 == 0) {
      c.directions.emplace_back(Rational(0), Rational(1));  // root at infinity
    } else {
      const Rational alpha = Rational(1 + static_cast<int>(rng() % 3)) * (rng() % 2 ? Rational(1) : Rational(-1));
      c.directions.emplace_back(alpha, alpha * Rational(eigen[blk]));
    }
    for (int j = 0; j < parts[blk]; ++j) c.block_of.push_back(static_cast<int>(blk));
  }
  std::vector<Rational> da, db;
  for (std::size_t i = 0; i < size; ++i) {
    Rational sc;
    do sc = oracle::small_rational(rng, 4, 3);
    while (sc.is_zero());
    c.scale.push_back(sc);
    const auto& [al, be] = c.directions[static_cast<std::size_t>(c.block_of[i])];
    da.push_back(al * sc * sc);
    db.push_back(be * sc * sc);
  }
  c.s = oracle::random_invertible(rng, size, 1);
  const Matrix st = c.s.transpose();
  c.a = st * Matrix::diagonal(da) * c.s;
  c.b = st * Matrix::diagonal(db) * c.s;
  return c;
}

void singularity_oracle(Outcome& o) {
  std::mt19937_64 rng(0x5164);
  int points = 0;
  for (int k = 0; k < 100; ++k) {
    const DiagonalCase c = random_diagonal_case(rng);
    const std::size_t size = c.block_of.size();
    const QuadricPencil pencil(c.n, SymmetricMatrix(c.a), SymmetricMatrix(c.b));
    const SingularityReport rep = singular_strata(pencil);
    const std::string at = " (case " + std::to_string(k) + ")";

    // eigen-support certificate on the diagonal model
    std::vector<Rational> da, db;
    for (std::size_t i = 0; i < size; ++i) {
      const auto& [al, be] = c.directions[static_cast<std::size_t>(c.block_of[i])];
      da.push_back(al * c.scale[i] * c.scale[i]);
      db.push_back(be * c.scale[i] * c.scale[i]);
      o.require(!(da[i].is_zero() && db[i].is_zero()), "coordinate point on X" + at);
    }
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = i + 1; j < size; ++j) {
        const bool same = c.block_of[i] == c.block_of[j];
        o.require(same == (da[i] * db[j] - da[j] * db[i]).is_zero(), "blocks not separated" + at);
      }
    }
    std::map<int, int> block_sizes;
    for (int blk : c.block_of) ++block_sizes[blk];
    std::map<int, int> expected;  // multiplicity -> roots, multiplicity >= 2
    for (const auto& [blk, m] : block_sizes) {
      if (m >= 2) ++expected[m];
    }
    std::map<int, int> reported;
    for (const auto& st : rep.strata) {
      reported[st.multiplicity] = st.root_count;
      o.require(st.stratum_dim == st.multiplicity - 2, "stratum dimension" + at);
      o.require(st.components_per_root == (st.multiplicity == 2 ? 2 : 1), "components" + at);
    }
    o.require(reported == expected, "reported strata differ from the eigen-support blocks" + at);

    // a constructed singular point in every block of size >= 2, mapped through S^-1
    const Matrix sinv = c.s.inverse();
    o.require(c.s * sinv == Matrix::identity(size), "inverse" + at);
    for (const auto& [blk, m] : block_sizes) {
      if (m < 2) continue;
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < size; ++i) {
        if (c.block_of[i] == blk) idx.push_back(i);
      }
      for (int sign : {1, -1}) {
        std::vector<GaussQ> x(size);
        x[idx[0]] = {c.scale[idx[0]].inverse(), Rational(0)};
        x[idx[1]] = {Rational(0), c.scale[idx[1]].inverse() * Rational(sign)};
        const auto y = oracle::apply(sinv, x);
        o.require(oracle::quadric_value(c.a, y).is_zero() && oracle::quadric_value(c.b, y).is_zero(),
                  "constructed point not on X" + at);
        o.require(oracle::jacobian_rank_at_most_one(c.a, c.b, y), "Jacobian rank > 1" + at);
        ++points;
      }
    }
  }
  o.note << "100 pencils, " << points << " singular points";
}

struct Snapshot {
  KEClass kind;
  bool equality;
  MultiplicityCounts counts;
  std::optional<SingularityReport> strata;
  std::optional<ModuliPoint> moduli;
};

Snapshot snapshot(const QuadricPencil& p) {
  const KEVerdict v = ke_decision(p);
  Snapshot s{v.kind, v.equality_case, v.profile.multiplicity_counts, std::nullopt, std::nullopt};
  if (v.diagonalization.diagonalizable) s.strata = singular_strata(p.dimension(), v.profile, v.diagonalization);
  if (p.dimension() == 3 && v.admits_ke()) s.moduli = moduli_point(v.profile.form);
  return s;
}

bool same(const Snapshot& x, const Snapshot& y) {
  if (x.kind != y.kind || x.equality != y.equality || x.counts != y.counts || x.strata != y.strata) return false;
  if (x.moduli.has_value() != y.moduli.has_value()) return false;
  return !x.moduli || weighted_equal(*x.moduli, *y.moduli);
}

void invariance_suite(Outcome& o) {
  const std::vector<std::pair<std::string, QuadricPencil>> fixtures = {
      {"toric", fixtures::toric()},
      {"cp3/z2", fixtures::cp3_z2()},
      {"smooth", fixtures::smooth3()},
      {"jordan", fixtures::jordan3()},
      {"n5 half", fixtures::diagonal(5, {1, 1, 1, 1, 1, 1, 1, 1}, {0, 0, 0, 0, 1, 2, 3, 4})},
      {"gen 2211", generate_pencil(3, std::vector<int>{2, 2, 1, 1}, 3).pencil()},
      {"gen n4 2221", generate_pencil(4, std::vector<int>{2, 2, 2, 1}, 4).pencil()},
  };
  std::mt19937_64 rng(0x1A7);
  std::uniform_int_distribution<int> coef(-3, 3);
  int runs = 0;
  for (const auto& [name, base] : fixtures) {
    const Snapshot ref = snapshot(base);
    for (int k = 0; k < 100; ++k) {
      const Matrix s = oracle::random_invertible(rng, base.size(), 2);
      o.require(same(ref, snapshot(base.congruent(s))), "congruence changed " + name);
      int p, q, r, t;
      do {
        p = coef(rng), q = coef(rng), r = coef(rng), t = coef(rng);
      } while (p * t - q * r == 0);
      o.require(same(ref, snapshot(base.rebased(p, q, r, t))), "basis change changed " + name);
      runs += 2;
    }
  }
  o.note << fixtures.size() << " fixtures, " << runs << " transforms";
}

void sextic_covariance(Outcome& o) {
  std::mt19937_64 rng(0x5E7);
  for (int k = 0; k < 100; ++k) {
    std::vector<Rational> c(7);
    for (auto& x : c) x = oracle::small_rational(rng, 6, 3);
    const BinaryForm f(6, c);
    Rational a, b, cc, d;
    do {
      a = oracle::small_rational(rng, 3, 2), b = oracle::small_rational(rng, 3), cc = oracle::small_rational(rng, 3),
      d = oracle::small_rational(rng, 3, 2);
    } while ((a * d - b * cc).is_zero());
    const Rational det = a * d - b * cc;
    const auto i = sextic_invariants(f);
    const auto j = sextic_invariants(f.substitute(a, b, cc, d));
    o.require(j.i2 == det.pow(6) * i.i2 && j.i4 == det.pow(12) * i.i4 && j.i6 == det.pow(18) * i.i6 &&
                  j.i10 == det.pow(30) * i.i10,
              "covariance fails at sample " + std::to_string(k));
  }
  int repeated = 0;
  for (int k = 0; k < 200; ++k) {
    BinaryForm f;
    bool has_repeat = false;
    if (k % 2 == 0) {
      std::vector<Rational> c(7);
      for (auto& x : c) x = oracle::small_rational(rng, 4);
      if (c[0].is_zero()) c[0] = Rational(1);
      f = BinaryForm(6, c);
    } else {
      // a0 (t - r)^2 q(t) with a random quartic q; every 10th case puts the double root at infinity
      oracle::Form q(5);
      for (auto& x : q) x = oracle::small_rational(rng, 4);
      q[0] = Rational(1);
      const Rational r = oracle::small_rational(rng, 5, 2);
      oracle::Form g = k % 10 == 1 ? oracle::form_mul({Rational(0), Rational(0), Rational(1)}, q)
                                   : oracle::form_mul(oracle::split_form(oracle::small_rational(rng, 3) + Rational(5), {r, r}), q);
      f = BinaryForm(6, g);
      has_repeat = true;
      ++repeated;
    }
    const auto inv = sextic_invariants(f);
    if (!f.coefficient(0).is_zero()) {
      const Rational disc = polynomial_discriminant(f.dehomogenize());
      o.require(inv.i10 == disc, "I10 differs from the discriminant at sample " + std::to_string(k));
      has_repeat = has_repeat || squarefree_decomposition(f.dehomogenize()).max_multiplicity() >= 2;
    }
    o.require(inv.i10.is_zero() == has_repeat, "I10 = 0 does not match repeated roots at sample " + std::to_string(k));
  }
  o.note << "100 substitutions, 200 sextics (" << repeated << " with a repeated root)";
}

void parity_claim(Outcome& o) {
  int pencils = 0;
  for (const auto& parts : oracle::partitions(6)) {
    if (!oracle::multiset_admits_ke(3, parts)) continue;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto r = analyze(make_input(generate_pencil(3, parts, seed).pencil()));
      o.require(r.verdict.kind != KEClass::NotKE, "KE pattern rejected");
      o.require(r.singularities.has_value(), "no singularity report");
      if (!r.singularities) continue;
      const int odp = r.singularities->isolated_odp_count;
      o.require(odp % 2 == 0 && odp <= 6, "ODP count " + std::to_string(odp));
      if (!r.singularities->special_orbifold) o.require(odp_parity_check(*r.singularities), "parity check");
      ++pencils;
    }
  }
  o.note << pencils << " pencils";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "toric example xy-zt, zt-uv", 1, toric_example},
      {2, "CP^3/Z_2 from diag(0,0,0,1,1,1)", 1, orbifold_example},
      {3, "partition sweep n = 2..5", 30, partition_sweep},
      {4, "volume constants", 1, volume_constants},
      {5, "discriminant vs cofactor expansion", 60, discriminant_oracle},
      {6, "singularity oracle", 60, singularity_oracle},
      {7, "invariance suite", 120, invariance_suite},
      {8, "sextic covariance and I10", 60, sextic_covariance},
      {9, "ODP parity for n = 3", 5, parity_claim},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.limit;
    const bool pass = o.ok && in_time;
    if (!pass) ++failed;
    std::printf("[%s] %d %s: %.3f s (limit %.0f s)%s %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs, c.limit,
                in_time ? "" : " TIMEOUT", o.ok ? o.note.str().c_str() : o.failure.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
