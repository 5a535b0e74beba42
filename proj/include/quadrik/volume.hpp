#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "quadrik/rational.hpp"

namespace quadrik {

enum class RegularityClass {
  GorensteinCanonicalUnconditional,  // V > (n+1)^n / 2
  GorensteinCanonicalConditional,    // (n+1)^n / 2 >= V > (1-1/n)^n (n+1)^n, needs the gap conjecture
  IndexBoundOnly,
};

std::string_view to_string(RegularityClass c);

/// Marker attached to every output that depends on the ODP volume gap conjecture.
inline constexpr std::string_view kGapConjectureMarker =
    "conditional on the ODP volume gap conjecture A'(n) <= 2(1-1/n)^n";

struct VolumeReport {
  int n = 0;
  int fano_index = 1;
  Rational anticanonical_volume;
  Rational cp_volume;               // (n+1)^n
  Rational density_lower_bound;     // V / (n+1)^n
  Rational gorenstein_threshold;    // (n+1)^n / 2
  Rational conjectural_threshold;   // (1-1/n)^n (n+1)^n
  RegularityClass regularity_class = RegularityClass::IndexBoundOnly;
  Integer density_floor_inverse;    // Lambda = floor((n+1)^n / V)
  Integer cartier_index_bound;      // Lambda^(n-1)
  Rational valuation_volume_floor;  // V n^n / (n+1)^n, lower bound for vol(nu_KE)
  Rational valuation_volume_ceiling; // n^n * density bound; equal to the floor exactly
  bool conditional = false;
  std::vector<std::string> annotations;
};

/// d (n-1)^n.
Rational del_pezzo_volume(int n, int degree);

Rational cp_volume(int n);
Rational gorenstein_threshold(int n);
Rational conjectural_threshold(int n);
/// 2 (1 - 1/k)^k, the volume density of the k-dimensional Stenzel (ODP) cone.
Rational stenzel_density(int k);

/// Throws Error(NonPositiveVolume), Error(DensityExceedsOne), Error(WrongDimension),
/// Error(InvalidArgument) for a non-positive index.
VolumeReport analyze_volume(int n, const Rational& volume, int fano_index);

struct ConeDensityEntry {
  std::string label;
  int dimension = 0;
  Rational density;
};

/// Labels: "A1_3d", "A2_3d", "A<k>_3d" (k >= 3), "Stenzel(k)". Throws Error(UnknownLabel).
ConeDensityEntry cone_density(std::string_view label);
ConeDensityEntry cone_density(int k);

/// (1 + 1/n)^n * vhat.
Rational liu_bound(const Rational& vhat, int n);

enum class GapStatus { BelowGap, AtGap, ViolatesConjecture };
std::string_view to_string(GapStatus s);

/// Compares a density with 2(1-1/n)^n. Throws Error(InvalidArgument) unless 0 < density <= 1.
GapStatus conjecture_gap_check(int n, const Rational& density);

}  // namespace quadrik
