#include "quadrik/report.hpp"

#include <sstream>

#include "quadrik/version.hpp"

namespace quadrik {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::MalformedDocument, "report: " + what);
}

template <typename Enum, std::size_t K>
Enum enum_from(const std::string& s, const Enum (&values)[K]) {
  for (const Enum v : values) {
    if (to_string(v) == s) return v;
  }
  malformed("unknown enumeration value \"" + s + "\"");
}

constexpr KEClass kClasses[] = {KEClass::SmoothStable, KEClass::PolystableBoundary, KEClass::NotKE};
constexpr VerdictClause kClauses[] = {
    VerdictClause::NotSimultaneouslyDiagonalizable, VerdictClause::MultiplicityAboveBound,
    VerdictClause::HalfMultiplicityWithoutTwoBlocks, VerdictClause::HalfMultiplicityTwoBlocks,
    VerdictClause::AllRootsSimple, VerdictClause::MultiplicitiesWithinBound};
constexpr RegularityClass kRegularity[] = {RegularityClass::GorensteinCanonicalUnconditional,
                                           RegularityClass::GorensteinCanonicalConditional,
                                           RegularityClass::IndexBoundOnly};

Json rationals_json(std::span<const Rational> v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

Rational rational_from(const Json& j) {
  if (!j.is_string()) malformed("expected a rational string");
  return Rational::parse(j.get<std::string>());
}

Integer integer_from(const Json& j) {
  const Rational r = rational_from(j);
  if (!r.is_integer()) malformed("expected an integer string");
  return r.numerator();
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

VolumeSummary summarize(const VolumeReport& v) {
  return {v.fano_index,
          v.anticanonical_volume,
          v.cp_volume,
          v.density_lower_bound,
          v.gorenstein_threshold,
          v.conjectural_threshold,
          v.regularity_class,
          v.density_floor_inverse,
          v.cartier_index_bound,
          v.valuation_volume_floor,
          v.conditional,
          v.annotations};
}

Json volume_json(const VolumeSummary& v) {
  Json j;
  j["fano_index"] = v.fano_index;
  j["anticanonical_volume"] = v.anticanonical_volume.str();
  j["cp_volume"] = v.cp_volume.str();
  j["density_lower_bound"] = v.density_lower_bound.str();
  j["gorenstein_threshold"] = v.gorenstein_threshold.str();
  j["conjectural_threshold"] = v.conjectural_threshold.str();
  j["regularity_class"] = std::string(to_string(v.regularity_class));
  j["density_floor_inverse"] = v.density_floor_inverse.get_str();
  j["cartier_index_bound"] = v.cartier_index_bound.get_str();
  j["valuation_volume_floor"] = v.valuation_volume_floor.str();
  j["conditional"] = v.conditional;
  j["annotations"] = v.annotations;
  return j;
}

VolumeSummary volume_from(const Json& j) {
  VolumeSummary v;
  v.fano_index = j.at("fano_index").get<int>();
  v.anticanonical_volume = rational_from(j.at("anticanonical_volume"));
  v.cp_volume = rational_from(j.at("cp_volume"));
  v.density_lower_bound = rational_from(j.at("density_lower_bound"));
  v.gorenstein_threshold = rational_from(j.at("gorenstein_threshold"));
  v.conjectural_threshold = rational_from(j.at("conjectural_threshold"));
  v.regularity_class = enum_from(j.at("regularity_class").get<std::string>(), kRegularity);
  v.density_floor_inverse = integer_from(j.at("density_floor_inverse"));
  v.cartier_index_bound = integer_from(j.at("cartier_index_bound"));
  v.valuation_volume_floor = rational_from(j.at("valuation_volume_floor"));
  v.conditional = j.at("conditional").get<bool>();
  v.annotations = j.at("annotations").get<std::vector<std::string>>();
  return v;
}

}  // namespace

AnalysisReport analyze(const PencilInput& input, const AnalysisOptions& options) {
  const QuadricPencil pencil = input.pencil();
  const KEVerdict verdict = ke_decision(pencil, options.execution);
  const int n = pencil.dimension();

  AnalysisReport r;
  r.version = kVersion;
  r.label = input.label.value_or("");
  r.n = n;
  const BinaryForm normalized = verdict.profile.form.content_normalized();
  r.discriminant.form.assign(normalized.coefficients().begin(), normalized.coefficients().end());
  r.discriminant.infinity_multiplicity = verdict.profile.infinity_multiplicity;
  r.discriminant.multiplicity_counts = verdict.profile.multiplicity_counts;
  r.diagonalizable = verdict.diagonalization.diagonalizable;
  r.witness = verdict.diagonalization.witness_description;
  r.verdict = {verdict.kind, verdict.equality_case, verdict.reason.clause, verdict.reason.detail,
               verdict.reason.citation};
  if (r.diagonalizable) r.singularities = singular_strata(n, verdict.profile, verdict.diagonalization);

  r.volume = summarize(analyze_volume(n, del_pezzo_volume(n, 4), n - 1));
  if (r.volume.conditional) {
    r.conditional_claims.push_back("volume.regularity_class: " + std::string(kGapConjectureMarker));
  }
  if (n == 3 && verdict.admits_ke()) {
    const ModuliPoint p = moduli_point(verdict.profile.form);
    r.moduli_point = ModuliSummary{p.coordinates, p.boundary};
  }
  return r;
}

Json to_json(const AnalysisReport& r) {
  Json j;
  j["version"] = r.version;
  j["label"] = r.label;
  j["n"] = r.n;
  Json counts = Json::object();
  for (const auto& [m, c] : r.discriminant.multiplicity_counts) counts[std::to_string(m)] = c;
  j["discriminant"] = {{"form", rationals_json(r.discriminant.form)},
                       {"infinity_multiplicity", r.discriminant.infinity_multiplicity},
                       {"multiplicity_counts", counts}};
  j["diagonalizable"] = r.diagonalizable;
  j["witness"] = r.witness;
  j["verdict"] = {{"class", std::string(to_string(r.verdict.kind))},
                  {"equality_case", r.verdict.equality_case},
                  {"clause", std::string(to_string(r.verdict.clause))},
                  {"reason", r.verdict.detail},
                  {"citation", r.verdict.citation}};
  if (r.singularities) {
    const auto& s = *r.singularities;
    Json strata = Json::array();
    for (const auto& st : s.strata) {
      strata.push_back({{"multiplicity", st.multiplicity},
                        {"stratum_dim", st.stratum_dim},
                        {"transverse_type", st.transverse_type},
                        {"components_per_root", st.components_per_root},
                        {"root_count", st.root_count}});
    }
    Json sj;
    sj["strata"] = strata;
    sj["isolated_odp_count"] = s.isolated_odp_count;
    sj["max_stratum_dim"] = s.max_stratum_dim ? Json(*s.max_stratum_dim) : Json(nullptr);
    sj["special_orbifold"] = s.special_orbifold;
    sj["component_count"] = s.component_count();
    j["singularities"] = sj;
  } else {
    j["singularities"] = nullptr;
  }
  j["volume"] = volume_json(r.volume);
  if (r.moduli_point) {
    j["moduli_point"] = {{"weights", kModuliWeights},
                         {"coordinates", rationals_json(r.moduli_point->coordinates)},
                         {"boundary", r.moduli_point->boundary}};
  } else {
    j["moduli_point"] = nullptr;
  }
  j["conditional_claims"] = r.conditional_claims;
  return j;
}

AnalysisReport report_from_json(const Json& j) {
  try {
    AnalysisReport r;
    r.version = j.at("version").get<std::string>();
    r.label = j.at("label").get<std::string>();
    r.n = j.at("n").get<int>();
    const Json& d = j.at("discriminant");
    for (const auto& c : d.at("form")) r.discriminant.form.push_back(rational_from(c));
    r.discriminant.infinity_multiplicity = d.at("infinity_multiplicity").get<int>();
    for (const auto& [m, c] : d.at("multiplicity_counts").items()) {
      r.discriminant.multiplicity_counts[std::stoi(m)] = c.get<int>();
    }
    r.diagonalizable = j.at("diagonalizable").get<bool>();
    r.witness = j.at("witness").get<std::string>();
    const Json& v = j.at("verdict");
    r.verdict.kind = enum_from(v.at("class").get<std::string>(), kClasses);
    r.verdict.equality_case = v.at("equality_case").get<bool>();
    r.verdict.clause = enum_from(v.at("clause").get<std::string>(), kClauses);
    r.verdict.detail = v.at("reason").get<std::string>();
    r.verdict.citation = v.at("citation").get<std::string>();
    if (!j.at("singularities").is_null()) {
      const Json& sj = j.at("singularities");
      SingularityReport s;
      s.n = r.n;
      for (const auto& st : sj.at("strata")) {
        s.strata.push_back({st.at("multiplicity").get<int>(), st.at("stratum_dim").get<int>(),
                            st.at("transverse_type").get<std::string>(), st.at("components_per_root").get<int>(),
                            st.at("root_count").get<int>()});
      }
      s.isolated_odp_count = sj.at("isolated_odp_count").get<int>();
      if (!sj.at("max_stratum_dim").is_null()) s.max_stratum_dim = sj.at("max_stratum_dim").get<int>();
      s.special_orbifold = sj.at("special_orbifold").get<bool>();
      r.singularities = std::move(s);
    }
    r.volume = volume_from(j.at("volume"));
    if (!j.at("moduli_point").is_null()) {
      const Json& mp = j.at("moduli_point");
      ModuliSummary m;
      const Json& coords = mp.at("coordinates");
      if (coords.size() != 4) malformed("moduli point needs four coordinates");
      for (std::size_t i = 0; i < 4; ++i) m.coordinates[i] = rational_from(coords[i]);
      m.boundary = mp.at("boundary").get<bool>();
      r.moduli_point = m;
    }
    r.conditional_claims = j.at("conditional_claims").get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    malformed(e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::MalformedDocument) throw;
    malformed(e.what());
  }
}

std::string render_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "quadrik " << r.version << "\n";
  if (!r.label.empty()) os << "label: " << r.label << "\n";
  os << "dimension n = " << r.n << " (quadrics in P^" << r.n + 2 << ")\n";
  std::vector<std::string> form;
  for (const auto& c : r.discriminant.form) form.push_back(c.str());
  os << "discriminant form coefficients (lambda^" << r.n + 3 << " ... mu^" << r.n + 3 << "): [" << join(form, ", ")
     << "]\n";
  std::vector<std::string> counts;
  for (const auto& [m, c] : r.discriminant.multiplicity_counts) {
    counts.push_back(std::to_string(c) + " root(s) of multiplicity " + std::to_string(m));
  }
  os << "roots: " << join(counts, "; ") << " (root at infinity: multiplicity " << r.discriminant.infinity_multiplicity
     << ")\n";
  os << "simultaneously diagonalizable: " << (r.diagonalizable ? "yes" : "no") << " (" << r.witness << ")\n";
  os << "verdict: " << to_string(r.verdict.kind);
  if (r.verdict.equality_case) os << " [equality case]";
  os << "\n  reason: " << r.verdict.detail << "\n  clause: " << r.verdict.citation << "\n";
  if (r.singularities) {
    const auto& s = *r.singularities;
    if (s.strata.empty()) {
      os << "singular set: empty\n";
    } else {
      os << "singular set (" << s.component_count() << " component(s), max dimension " << *s.max_stratum_dim
         << "):\n";
      for (const auto& st : s.strata) {
        os << "  multiplicity " << st.multiplicity << ": " << st.root_count << " root(s), each giving "
           << st.components_per_root << " component(s) of dimension " << st.stratum_dim << ", transverse type "
           << st.transverse_type << "\n";
      }
      os << "  isolated ODPs: " << s.isolated_odp_count << "\n";
      if (s.special_orbifold) os << "  this is the orbifold CP^3/Z_2\n";
    }
  }
  os << "volume: V = " << r.volume.anticanonical_volume << ", density >= " << r.volume.density_lower_bound
     << ", regularity " << to_string(r.volume.regularity_class) << ", Cartier index <= "
     << r.volume.cartier_index_bound.get_str() << "\n";
  for (const auto& a : r.volume.annotations) os << "  note: " << a << "\n";
  if (r.moduli_point) {
    std::vector<std::string> c;
    for (const auto& x : r.moduli_point->coordinates) c.push_back(x.str());
    os << "moduli point in P(1,2,3,5): [" << join(c, " : ") << "]" << (r.moduli_point->boundary ? " (boundary)" : "")
       << "\n";
  }
  for (const auto& c : r.conditional_claims) os << "conditional: " << c << "\n";
  return os.str();
}

Json to_json(const VolumeReport& v) {
  Json j;
  j["version"] = kVersion;
  j["n"] = v.n;
  j["volume"] = volume_json(summarize(v));
  j["valuation_volume_ceiling"] = v.valuation_volume_ceiling.str();
  j["conditional_claims"] = v.conditional ? Json::array({std::string(kGapConjectureMarker)}) : Json::array();
  return j;
}

std::string render_text(const VolumeReport& v) {
  std::ostringstream os;
  os << "n = " << v.n << ", V = " << v.anticanonical_volume << ", Fano index r = " << v.fano_index << "\n"
     << "  volume of CP^n:              " << v.cp_volume << "\n"
     << "  density lower bound V/(n+1)^n: " << v.density_lower_bound << "\n"
     << "  Gorenstein threshold:        " << v.gorenstein_threshold << "\n"
     << "  conjectural threshold:       " << v.conjectural_threshold << "\n"
     << "  regularity class:            " << to_string(v.regularity_class)
     << (v.conditional ? " (" + std::string(kGapConjectureMarker) + ")" : "") << "\n"
     << "  Lambda = floor(1/density):   " << v.density_floor_inverse.get_str() << "\n"
     << "  Cartier index bound:         " << v.cartier_index_bound.get_str() << "\n"
     << "  vol(nu_KE) >= V (n/(n+1))^n: " << v.valuation_volume_floor << "\n";
  for (const auto& a : v.annotations) os << "  note: " << a << "\n";
  return os.str();
}

Json to_json(const ErrorInfo& e) {
  return {{"error", {{"code", std::string(to_string(e.code))}, {"message", e.message}}}};
}

namespace {

BatchResult run_one(const BatchItem& item, kernels::Execution exec) {
  BatchResult out{item.name, std::nullopt, std::nullopt};
  try {
    out.report = analyze(parse_input(std::string_view(item.document)), AnalysisOptions{exec});
  } catch (const Error& e) {
    out.error = ErrorInfo{e.code(), e.what()};
  }
  return out;
}

}  // namespace

std::vector<BatchResult> analyze_batch_serial(std::span<const BatchItem> items) {
  std::vector<BatchResult> out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(run_one(item, kernels::Execution::Serial));
  return out;
}

std::vector<BatchResult> analyze_batch_parallel(std::span<const BatchItem> items) {
  std::vector<BatchResult> out(items.size());
  const long count = static_cast<long>(items.size());
#pragma omp parallel for schedule(dynamic) num_threads(kernels::thread_limit())
  for (long k = 0; k < count; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    try {
      out[idx] = run_one(items[idx], kernels::Execution::Serial);
    } catch (const std::exception& e) {
      out[idx] = BatchResult{items[idx].name, std::nullopt, ErrorInfo{ErrorCode::InvalidArgument, e.what()}};
    }
  }
  return out;
}

}  // namespace quadrik
