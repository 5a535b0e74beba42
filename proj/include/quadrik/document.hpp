#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "quadrik/pencil.hpp"

namespace quadrik {

using Json = nlohmann::ordered_json;

/// Input document:
///   {"n": 3, "label": "optional", "A": [["1","0",...], ...], "B": [[...], ...]}
/// Entries are rational strings "p" or "p/q" (JSON integers are accepted too);
/// floating-point numbers are rejected.
struct PencilInput {
  int n = 0;
  std::vector<std::vector<Rational>> matrix_a;
  std::vector<std::vector<Rational>> matrix_b;
  std::optional<std::string> label;

  /// Throws the QuadricPencil construction errors.
  QuadricPencil pencil() const;

  friend bool operator==(const PencilInput&, const PencilInput&) = default;
};

/// Throws Error(MalformedDocument | NonSymmetricMatrix | SizeMismatch | BadRational).
PencilInput parse_input(std::string_view document);
PencilInput parse_input(const Json& document);

Json to_json(const PencilInput& input);
/// Pretty-printed JSON document accepted by parse_input.
std::string serialize(const PencilInput& input);

PencilInput make_input(const QuadricPencil& pencil, std::optional<std::string> label = std::nullopt);

/// A diagonal pencil (A = I, B = diag of distinct eigenvalues repeated per
/// pattern) conjugated by a seeded random invertible integer matrix.
/// The one-part pattern {n+3} has no diagonalizable realization; it yields a
/// non-diagonalizable pencil whose single root has multiplicity n+3.
/// Deterministic in (n, pattern, seed). Throws Error(BadPartition).
PencilInput generate_pencil(int n, std::span<const int> pattern, std::uint64_t seed);

}  // namespace quadrik
