#include "quadrik/volume.hpp"

#include <cctype>
#include <charconv>

#include "quadrik/error.hpp"

namespace quadrik {

namespace {

void require_dimension(int n) {
  if (n < 2) throw Error(ErrorCode::WrongDimension, "dimension must be at least 2");
}

}  // namespace

std::string_view to_string(RegularityClass c) {
  switch (c) {
    case RegularityClass::GorensteinCanonicalUnconditional: return "GorensteinCanonicalUnconditional";
    case RegularityClass::GorensteinCanonicalConditional: return "GorensteinCanonicalConditional";
    case RegularityClass::IndexBoundOnly: return "IndexBoundOnly";
  }
  return "?";
}

std::string_view to_string(GapStatus s) {
  switch (s) {
    case GapStatus::BelowGap: return "BelowGap";
    case GapStatus::AtGap: return "AtGap";
    case GapStatus::ViolatesConjecture: return "ViolatesConjecture";
  }
  return "?";
}

Rational del_pezzo_volume(int n, int degree) {
  require_dimension(n);
  if (degree < 1) throw Error(ErrorCode::InvalidArgument, "del Pezzo degree must be positive");
  return Rational(degree) * Rational(n - 1).pow(static_cast<unsigned>(n));
}

Rational cp_volume(int n) { return Rational(n + 1).pow(static_cast<unsigned>(n)); }

Rational gorenstein_threshold(int n) { return cp_volume(n) / Rational(2); }

Rational conjectural_threshold(int n) {
  // (1 - 1/n)^n (n+1)^n = ((n^2 - 1) / n)^n
  return Rational(Integer(n * n - 1), Integer(n)).pow(static_cast<unsigned>(n));
}

Rational stenzel_density(int k) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "Stenzel cone needs dimension k >= 2");
  return Rational(2) * Rational(Integer(k - 1), Integer(k)).pow(static_cast<unsigned>(k));
}

VolumeReport analyze_volume(int n, const Rational& volume, int fano_index) {
  require_dimension(n);
  if (volume.sign() <= 0) throw Error(ErrorCode::NonPositiveVolume, "volume must be positive");
  if (fano_index < 1) throw Error(ErrorCode::InvalidArgument, "Fano index must be positive");
  VolumeReport r;
  r.n = n;
  r.fano_index = fano_index;
  r.anticanonical_volume = volume;
  r.cp_volume = cp_volume(n);
  if (volume > r.cp_volume) {
    throw Error(ErrorCode::DensityExceedsOne,
                "volume " + volume.str() + " exceeds the projective space volume " + r.cp_volume.str());
  }
  r.density_lower_bound = volume / r.cp_volume;
  r.gorenstein_threshold = gorenstein_threshold(n);
  r.conjectural_threshold = conjectural_threshold(n);
  if (volume > r.gorenstein_threshold) {
    r.regularity_class = RegularityClass::GorensteinCanonicalUnconditional;
  } else if (volume > r.conjectural_threshold) {
    r.regularity_class = RegularityClass::GorensteinCanonicalConditional;
    r.conditional = true;
    r.annotations.emplace_back("Gorenstein canonical limits " + std::string(kGapConjectureMarker));
  } else {
    r.regularity_class = RegularityClass::IndexBoundOnly;
  }

  r.density_floor_inverse = (r.cp_volume / volume).floor();
  mpz_pow_ui(r.cartier_index_bound.get_mpz_t(), r.density_floor_inverse.get_mpz_t(),
             static_cast<unsigned long>(n - 1));

  const Rational nn = Rational(n).pow(static_cast<unsigned>(n));
  r.valuation_volume_floor = volume * nn / r.cp_volume;
  r.valuation_volume_ceiling = nn * r.density_lower_bound;

  if (n == 3 && volume == r.gorenstein_threshold) {
    r.annotations.emplace_back(
        "equality case of the volume estimate (V = (n+1)^n/2): not decided by the density threshold; "
        "for degree-4 del Pezzo threefolds a separate rigidity argument shows GH limits are again "
        "del Pezzo threefolds of degree 4");
  }
  if (n == 3 && volume >= Rational(22)) {
    r.annotations.emplace_back(
        "three-dimensional arguments sharpen the Gorenstein index of GH limits to at most two "
        "when V >= 22 (annotation only, not computed)");
  }
  return r;
}

ConeDensityEntry cone_density(int k) {
  return {"Stenzel(" + std::to_string(k) + ")", k, stenzel_density(k)};
}

ConeDensityEntry cone_density(std::string_view label) {
  const auto unknown = [&] { return Error(ErrorCode::UnknownLabel, "unknown cone label \"" + std::string(label) + "\""); };
  if (label == "A1_3d") return {"A1_3d", 3, stenzel_density(3)};
  if (label == "A2_3d") return {"A2_3d", 3, Rational(125, 243)};
  const auto parse_int = [&](std::string_view digits) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) throw unknown();
    return v;
  };
  if (label.starts_with("Stenzel(") && label.ends_with(")")) {
    const int k = parse_int(label.substr(8, label.size() - 9));
    if (k < 2) throw unknown();
    return cone_density(k);
  }
  if (label.size() > 4 && label.front() == 'A' && label.ends_with("_3d")) {
    const int k = parse_int(label.substr(1, label.size() - 4));
    if (k < 3) throw unknown();
    // A_k for k >= 3 in dimension three: expected tangent cone C x C^2/Z_2.
    return {std::string(label), 3, Rational(1, 2)};
  }
  throw unknown();
}

Rational liu_bound(const Rational& vhat, int n) {
  require_dimension(n);
  return Rational(Integer(n + 1), Integer(n)).pow(static_cast<unsigned>(n)) * vhat;
}

GapStatus conjecture_gap_check(int n, const Rational& density) {
  require_dimension(n);
  if (density.sign() <= 0 || density > Rational(1)) {
    throw Error(ErrorCode::InvalidArgument, "density must lie in (0, 1]");
  }
  const Rational gap = stenzel_density(n);
  if (density < gap) return GapStatus::BelowGap;
  if (density == gap) return GapStatus::AtGap;
  return GapStatus::ViolatesConjecture;
}

}  // namespace quadrik
