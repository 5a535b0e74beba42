#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quadrik/document.hpp"
#include "quadrik/error.hpp"
#include "quadrik/kernels.hpp"
#include "quadrik/sextic.hpp"
#include "quadrik/singularities.hpp"
#include "quadrik/stability.hpp"
#include "quadrik/volume.hpp"

namespace quadrik {

struct AnalysisOptions {
  kernels::Execution execution = kernels::Execution::Parallel;
};

struct DiscriminantSummary {
  std::vector<Rational> form;  // content-normalized, coefficient of lambda^(N-i) mu^i at i
  int infinity_multiplicity = 0;
  MultiplicityCounts multiplicity_counts;

  friend bool operator==(const DiscriminantSummary&, const DiscriminantSummary&) = default;
};

struct VerdictSummary {
  KEClass kind = KEClass::NotKE;
  bool equality_case = false;
  VerdictClause clause = VerdictClause::NotSimultaneouslyDiagonalizable;
  std::string detail;
  std::string citation;

  friend bool operator==(const VerdictSummary&, const VerdictSummary&) = default;
};

struct VolumeSummary {
  int fano_index = 1;
  Rational anticanonical_volume;
  Rational cp_volume;
  Rational density_lower_bound;
  Rational gorenstein_threshold;
  Rational conjectural_threshold;
  RegularityClass regularity_class = RegularityClass::IndexBoundOnly;
  Integer density_floor_inverse;
  Integer cartier_index_bound;
  Rational valuation_volume_floor;
  bool conditional = false;
  std::vector<std::string> annotations;

  friend bool operator==(const VolumeSummary&, const VolumeSummary&) = default;
};

struct ModuliSummary {
  std::array<Rational, 4> coordinates;
  bool boundary = false;

  friend bool operator==(const ModuliSummary&, const ModuliSummary&) = default;
};

struct AnalysisReport {
  std::string version;
  std::string label;
  int n = 0;
  DiscriminantSummary discriminant;
  bool diagonalizable = false;
  std::string witness;
  VerdictSummary verdict;
  std::optional<SingularityReport> singularities;  // absent when not diagonalizable
  VolumeSummary volume;                            // V = 4 (n-1)^n, Fano index n-1
  std::optional<ModuliSummary> moduli_point;       // n = 3 and KE only
  std::vector<std::string> conditional_claims;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Full pipeline. Propagates Error(NonRegularPencil) and the pencil
/// construction errors; the CLI turns them into structured error reports.
AnalysisReport analyze(const PencilInput& input, const AnalysisOptions& options = {});

Json to_json(const AnalysisReport& report);
/// Inverse of to_json. Throws Error(MalformedDocument).
AnalysisReport report_from_json(const Json& j);
std::string render_text(const AnalysisReport& report);

Json to_json(const VolumeReport& report);
std::string render_text(const VolumeReport& report);

struct ErrorInfo {
  ErrorCode code;
  std::string message;

  friend bool operator==(const ErrorInfo&, const ErrorInfo&) = default;
};
Json to_json(const ErrorInfo& error);

struct BatchItem {
  std::string name;
  std::string document;
};

struct BatchResult {
  std::string name;
  std::optional<AnalysisReport> report;
  std::optional<ErrorInfo> error;

  friend bool operator==(const BatchResult&, const BatchResult&) = default;
};

/// Serial reference for the batch kernel.
std::vector<BatchResult> analyze_batch_serial(std::span<const BatchItem> items);
/// One document per OpenMP work item, at most kernels::thread_limit() workers.
/// Results come back in input order and match the serial reference exactly.
std::vector<BatchResult> analyze_batch_parallel(std::span<const BatchItem> items);

}  // namespace quadrik
