// quadrik: command-line front end.
//
//   quadrik analyze FILE [--json]
//   quadrik batch DIR [--json]
//   quadrik volume N V R [--json]
//   quadrik invariants [FILE] [--sextic "a0 ... a6"] [--json]
//   quadrik gen N PATTERN SEED [-o FILE]
//
// Exit codes: 0 success, 2 input error, 3 mathematical rejection, 4 internal failure.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "quadrik/report.hpp"
#include "quadrik/version.hpp"

namespace fs = std::filesystem;
using namespace quadrik;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int fail(const ErrorInfo& e, bool json) {
  if (json) {
    std::cout << to_json(e).dump(2) << "\n";
  } else {
    std::cerr << "error [" << to_string(e.code) << "]: " << e.message << "\n";
  }
  return exit_code(category(e.code));
}

std::vector<int> parse_pattern(const std::string& text) {
  std::vector<int> out;
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '[' || c == ']'; }), s.end());
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadPartition, "bad pattern entry \"" + tok + "\"");
    }
  }
  return out;
}

BinaryForm parse_sextic(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream is(s);
  std::vector<Rational> c;
  std::string tok;
  while (is >> tok) c.push_back(Rational::parse(tok));
  if (c.size() != 7) {
    throw Error(ErrorCode::WrongDegree, "a sextic needs 7 coefficients, got " + std::to_string(c.size()));
  }
  return BinaryForm(6, std::move(c));
}

int cmd_analyze(const std::string& file, bool json) {
  const AnalysisReport r = analyze(parse_input(std::string_view(read_file(file))));
  if (json) {
    std::cout << to_json(r).dump(2) << "\n";
  } else {
    std::cout << render_text(r);
  }
  return 0;
}

int cmd_batch(const std::string& dir, bool json) {
  if (!fs::is_directory(dir)) throw Error(ErrorCode::InvalidArgument, dir + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<BatchItem> items;
  for (const auto& f : files) items.push_back({f.filename().string(), read_file(f.string())});

  const std::vector<BatchResult> results = analyze_batch_parallel(items);
  int status = 0;
  Json all = Json::array();
  for (const auto& res : results) {
    if (res.error) status = std::max(status, exit_code(category(res.error->code)));
    if (json) {
      Json entry;
      entry["file"] = res.name;
      if (res.report) entry["report"] = to_json(*res.report);
      if (res.error) entry.update(to_json(*res.error));
      all.push_back(entry);
    } else {
      std::cout << "== " << res.name << "\n";
      if (res.report) std::cout << render_text(*res.report);
      if (res.error) std::cout << "error [" << to_string(res.error->code) << "]: " << res.error->message << "\n";
    }
  }
  if (json) std::cout << all.dump(2) << "\n";
  return status;
}

int cmd_volume(int n, const std::string& v, int r, bool json) {
  const VolumeReport rep = analyze_volume(n, Rational::parse(v), r);
  if (json) {
    std::cout << to_json(rep).dump(2) << "\n";
  } else {
    std::cout << render_text(rep);
  }
  return 0;
}

int cmd_invariants(const std::string& file, const std::string& sextic, bool json) {
  BinaryForm form;
  std::string source;
  if (!sextic.empty()) {
    form = parse_sextic(sextic);
    source = "sextic";
  } else if (!file.empty()) {
    const QuadricPencil pencil = parse_input(std::string_view(read_file(file))).pencil();
    if (pencil.dimension() != 3) {
      throw Error(ErrorCode::WrongDimension, "invariants need n = 3, got n = " + std::to_string(pencil.dimension()));
    }
    const KEVerdict verdict = ke_decision(pencil);
    if (!verdict.admits_ke()) throw Error(ErrorCode::NotKEInput, "no KE metric: " + verdict.reason.detail);
    form = verdict.profile.form;
    source = "discriminant";
  } else {
    throw Error(ErrorCode::InvalidArgument, "give a pencil FILE or --sextic");
  }
  const SexticInvariants inv = sextic_invariants(form);
  const ModuliPoint p = moduli_point(form);
  if (json) {
    Json j;
    j["version"] = kVersion;
    j["source"] = source;
    Json coeffs = Json::array();
    for (const auto& c : form.coefficients()) coeffs.push_back(c.str());
    j["sextic"] = coeffs;
    j["invariants"] = {{"I2", inv.i2.str()}, {"I4", inv.i4.str()}, {"I6", inv.i6.str()}, {"I10", inv.i10.str()}};
    Json coords = Json::array();
    for (const auto& c : p.coordinates) coords.push_back(c.str());
    j["moduli_point"] = {{"weights", kModuliWeights}, {"coordinates", coords}, {"boundary", p.boundary}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << source << ":";
    for (const auto& c : form.coefficients()) std::cout << " " << c;
    std::cout << "\nI2 = " << inv.i2 << "\nI4 = " << inv.i4 << "\nI6 = " << inv.i6 << "\nI10 = " << inv.i10
              << "\nmoduli point in P(1,2,3,5): [" << p.coordinates[0] << " : " << p.coordinates[1] << " : "
              << p.coordinates[2] << " : " << p.coordinates[3] << "]" << (p.boundary ? " (boundary)" : "") << "\n";
  }
  return 0;
}

int cmd_gen(int n, const std::string& pattern, std::uint64_t seed, const std::string& out) {
  const std::vector<int> parts = parse_pattern(pattern);
  const std::string doc = serialize(generate_pencil(n, parts, seed));
  if (out.empty()) {
    std::cout << doc;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + out);
    f << doc;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kahler-Einstein and stability analysis for intersections of two quadrics"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  bool json = false;

  std::string file;
  auto* analyze_cmd = app.add_subcommand("analyze", "analyze one pencil document");
  analyze_cmd->add_option("file", file, "pencil document (JSON)")->required();
  analyze_cmd->add_flag("--json", json, "machine-readable output");

  std::string dir;
  auto* batch_cmd = app.add_subcommand("batch", "analyze every *.json in a directory (QUADRIK_THREADS workers)");
  batch_cmd->add_option("dir", dir, "directory of pencil documents")->required();
  batch_cmd->add_flag("--json", json, "machine-readable output");

  int n = 0;
  int r = 0;
  std::string v;
  auto* volume_cmd = app.add_subcommand("volume", "volume, density and index bounds");
  volume_cmd->add_option("n", n, "dimension")->required();
  volume_cmd->add_option("V", v, "anticanonical volume, rational")->required();
  volume_cmd->add_option("r", r, "Fano index")->required();
  volume_cmd->add_flag("--json", json, "machine-readable output");

  std::string inv_file;
  std::string sextic;
  auto* inv_cmd = app.add_subcommand("invariants", "Igusa-Clebsch invariants and moduli point (n = 3)");
  inv_cmd->add_option("file", inv_file, "pencil document (JSON)");
  inv_cmd->add_option("--sextic", sextic, "seven coefficients a0..a6 of a0 x^6 + ... + a6 y^6");
  inv_cmd->add_flag("--json", json, "machine-readable output");

  std::string pattern;
  std::uint64_t seed = 0;
  std::string out;
  auto* gen_cmd = app.add_subcommand("gen", "generate a seeded pencil with a given multiplicity pattern");
  gen_cmd->add_option("n", n, "dimension")->required();
  gen_cmd->add_option("pattern", pattern, "partition of n+3, e.g. 3,3")->required();
  gen_cmd->add_option("seed", seed, "random seed")->required();
  gen_cmd->add_option("-o,--output", out, "write the document here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(file, json);
    if (*batch_cmd) return cmd_batch(dir, json);
    if (*volume_cmd) return cmd_volume(n, v, r, json);
    if (*inv_cmd) return cmd_invariants(inv_file, sextic, json);
    if (*gen_cmd) return cmd_gen(n, pattern, seed, out);
  } catch (const Error& e) {
    return fail({e.code(), e.what()}, json);
  } catch (const std::exception& e) {
    if (json) {
      std::cout << Json{{"error", {{"code", "Internal"}, {"message", e.what()}}}}.dump(2) << "\n";
    } else {
      std::cerr << "internal error: " << e.what() << "\n";
    }
    return 4;
  }
  return 4;
}
