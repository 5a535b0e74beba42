#include "quadrik/document.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "quadrik/error.hpp"

namespace quadrik {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedDocument, what); }

Rational parse_entry(const Json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const Error& e) {
      throw Error(ErrorCode::BadRational, where + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Rational::parse(v.dump());
  if (v.is_number_float()) throw Error(ErrorCode::BadRational, where + ": floating-point entries are not accepted");
  throw Error(ErrorCode::BadRational, where + ": expected a rational string");
}

std::vector<std::vector<Rational>> parse_matrix(const Json& doc, const char* name, std::size_t expected) {
  if (!doc.contains(name)) malformed(std::string("missing matrix \"") + name + "\"");
  const Json& m = doc.at(name);
  if (!m.is_array()) malformed(std::string("\"") + name + "\" must be an array of rows");
  if (m.size() != expected) {
    throw Error(ErrorCode::SizeMismatch, std::string(name) + " has " + std::to_string(m.size()) +
                                             " rows, expected " + std::to_string(expected));
  }
  std::vector<std::vector<Rational>> rows;
  rows.reserve(expected);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i].is_array()) malformed(std::string(name) + " row " + std::to_string(i) + " is not an array");
    if (m[i].size() != expected) {
      throw Error(ErrorCode::SizeMismatch, std::string(name) + " row " + std::to_string(i) + " has " +
                                               std::to_string(m[i].size()) + " entries, expected " +
                                               std::to_string(expected));
    }
    std::vector<Rational> row;
    row.reserve(expected);
    for (std::size_t j = 0; j < expected; ++j) {
      row.push_back(parse_entry(m[i][j], std::string(name) + "[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
    }
    rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < expected; ++i) {
    for (std::size_t j = i + 1; j < expected; ++j) {
      if (rows[i][j] != rows[j][i]) {
        throw Error(ErrorCode::NonSymmetricMatrix, std::string(name) + " is not symmetric at (" + std::to_string(i) +
                                                       "," + std::to_string(j) + ")");
      }
    }
  }
  return rows;
}

Json matrix_json(const std::vector<std::vector<Rational>>& m) {
  Json rows = Json::array();
  for (const auto& r : m) {
    Json row = Json::array();
    for (const auto& x : r) row.push_back(x.str());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<Rational>> matrix_rows(const Matrix& m) {
  std::vector<std::vector<Rational>> rows(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  }
  return rows;
}

}  // namespace

QuadricPencil PencilInput::pencil() const {
  return QuadricPencil(n, SymmetricMatrix(Matrix(matrix_a)), SymmetricMatrix(Matrix(matrix_b)));
}

PencilInput parse_input(std::string_view document) {
  Json doc;
  try {
    doc = Json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  return parse_input(doc);
}

PencilInput parse_input(const Json& doc) {
  if (!doc.is_object()) malformed("document must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "n" && key != "A" && key != "B" && key != "label") malformed("unknown key \"" + key + "\"");
  }
  if (!doc.contains("n") || !doc.at("n").is_number_integer()) malformed("\"n\" must be an integer");
  PencilInput in;
  in.n = doc.at("n").get<int>();
  if (in.n < 2) malformed("\"n\" must be at least 2");
  const auto size = static_cast<std::size_t>(in.n) + 3;
  in.matrix_a = parse_matrix(doc, "A", size);
  in.matrix_b = parse_matrix(doc, "B", size);
  if (doc.contains("label")) {
    if (!doc.at("label").is_string()) malformed("\"label\" must be a string");
    in.label = doc.at("label").get<std::string>();
  }
  return in;
}

Json to_json(const PencilInput& input) {
  Json j;
  j["n"] = input.n;
  if (input.label) j["label"] = *input.label;
  j["A"] = matrix_json(input.matrix_a);
  j["B"] = matrix_json(input.matrix_b);
  return j;
}

std::string serialize(const PencilInput& input) { return to_json(input).dump(2) + "\n"; }

PencilInput make_input(const QuadricPencil& pencil, std::optional<std::string> label) {
  return {pencil.dimension(), matrix_rows(pencil.a().matrix()), matrix_rows(pencil.b().matrix()), std::move(label)};
}

PencilInput generate_pencil(int n, std::span<const int> pattern, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorCode::BadPartition, "dimension n must be at least 2");
  if (pattern.empty() || std::any_of(pattern.begin(), pattern.end(), [](int p) { return p < 1; })) {
    throw Error(ErrorCode::BadPartition, "partition parts must be positive");
  }
  if (std::accumulate(pattern.begin(), pattern.end(), 0) != n + 3) {
    throw Error(ErrorCode::BadPartition, "partition must sum to n+3 = " + std::to_string(n + 3));
  }
  const auto size = static_cast<std::size_t>(n) + 3;
  // Raw engine output only: distributions are implementation-defined.
  std::mt19937_64 rng(seed);
  const auto pick = [&rng](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };

  std::vector<long> pool;
  for (long v = -9; v <= 9; ++v) pool.push_back(v);
  for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[static_cast<std::size_t>(pick(0, static_cast<long>(i) - 1))]);

  std::vector<Rational> eigen;
  for (std::size_t block = 0; block < pattern.size(); ++block) {
    eigen.insert(eigen.end(), static_cast<std::size_t>(pattern[block]), Rational(pool[block % pool.size()] +
                                                                                 19 * static_cast<long>(block / pool.size())));
  }

  Matrix lower = Matrix::identity(size);
  Matrix upper(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < i; ++j) lower(i, j) = Rational(pick(-1, 1));
    upper(i, i) = Rational(pick(0, 2) == 2 ? 2 : (pick(0, 1) == 0 ? 1 : -1));
    for (std::size_t j = i + 1; j < size; ++j) upper(i, j) = Rational(pick(-1, 1));
  }
  const Matrix s = lower * upper;

  Matrix a = Matrix::identity(size);
  Matrix b = Matrix::diagonal(eigen);
  if (pattern.size() == 1) {
    // A single root of multiplicity n+3 cannot come from a diagonalizable pencil
    // (B would be a multiple of A). Use a 2x2 Jordan-type block instead:
    // A = [[0,1],[1,0]], B - e A = [[1,0],[0,0]], padded by (1, 0) on the diagonal.
    a(0, 0) = Rational(0);
    a(1, 1) = Rational(0);
    a(0, 1) = a(1, 0) = Rational(1);
    Matrix nil(size, size);
    nil(0, 0) = Rational(1);
    b = a.scaled(eigen.front()) + nil;
  }
  const QuadricPencil base(n, SymmetricMatrix(a), SymmetricMatrix(b));
  std::string label = "gen n=" + std::to_string(n) + " pattern=[";
  for (std::size_t i = 0; i < pattern.size(); ++i) label += (i ? "," : "") + std::to_string(pattern[i]);
  label += "] seed=" + std::to_string(seed);
  return make_input(base.congruent(s), std::move(label));
}

}  // namespace quadrik
