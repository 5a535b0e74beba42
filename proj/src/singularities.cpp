#include "quadrik/singularities.hpp"

#include "quadrik/error.hpp"

namespace quadrik {

std::string transverse_type_label(int n, int k) {
  return "C^" + std::to_string(k) + " x A_1^" + std::to_string(n - k);
}

int SingularityReport::component_count() const {
  int total = 0;
  for (const auto& s : strata) total += s.root_count * s.components_per_root;
  return total;
}

SingularityReport singular_strata(const QuadricPencil& pencil) {
  const auto profile = discriminant_profile(pencil);
  return singular_strata(pencil.dimension(), profile, diagonalizability_test(pencil, profile));
}

SingularityReport singular_strata(int n, const DiscriminantProfile& profile, const DiagonalizationResult& diag) {
  if (!diag.diagonalizable) {
    throw Error(ErrorCode::NotDiagonalizable, "singular strata need a simultaneously diagonalizable pencil");
  }
  SingularityReport report;
  report.n = n;
  for (const auto& [m, count] : profile.multiplicity_counts) {
    if (m < 2) continue;
    SingularStratum s;
    s.multiplicity = m;
    s.stratum_dim = m - 2;
    s.transverse_type = transverse_type_label(n, s.stratum_dim);
    s.components_per_root = (m == 2) ? 2 : 1;
    s.root_count = count;
    report.strata.push_back(std::move(s));
  }
  if (const auto it = profile.multiplicity_counts.find(2); it != profile.multiplicity_counts.end()) {
    report.isolated_odp_count = 2 * it->second;
  }
  if (!report.strata.empty()) report.max_stratum_dim = report.strata.back().stratum_dim;
  const auto ms = profile.multiplicities();
  report.special_orbifold = n == 3 && ms.size() == 2 && ms[0] == 3 && ms[1] == 3;
  return report;
}

bool odp_parity_check(const SingularityReport& report) {
  if (report.n != 3) throw Error(ErrorCode::WrongDimension, "ODP parity applies to threefolds only");
  if (report.special_orbifold) {
    throw Error(ErrorCode::InvalidArgument, "ODP parity does not apply to the non-isolated CP^3/Z_2 case");
  }
  return report.isolated_odp_count % 2 == 0;
}

}  // namespace quadrik
