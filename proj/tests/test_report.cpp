#include "doctest.h"
#include "fixtures.hpp"
#include "quadrik/document.hpp"
#include "quadrik/report.hpp"

using namespace quadrik;

namespace {

AnalysisReport run(const QuadricPencil& p, const char* label) { return analyze(make_input(p, label)); }

}  // namespace

TEST_CASE("toric report") {
  const auto r = run(fixtures::toric(), "toric");
  CHECK(r.verdict.kind == KEClass::PolystableBoundary);
  REQUIRE(r.singularities.has_value());
  CHECK(r.singularities->isolated_odp_count == 6);
  REQUIRE(r.moduli_point.has_value());
  CHECK(r.moduli_point->boundary);
  CHECK(r.discriminant.multiplicity_counts == MultiplicityCounts{{2, 3}});
  CHECK(r.volume.anticanonical_volume == Rational(32));
  CHECK(r.volume.fano_index == 2);
  CHECK_FALSE(r.conditional_claims.empty());
  CHECK(r.version == "0.1.0");
}

TEST_CASE("smooth, NotKE and non-diagonalizable reports") {
  const auto s = run(fixtures::smooth3(), "smooth");
  CHECK(s.verdict.kind == KEClass::SmoothStable);
  CHECK(s.singularities->smooth());
  CHECK_FALSE(s.moduli_point->boundary);

  const auto bad = run(fixtures::diagonal(3, {1, 1, 1, 1, 1, 1}, {0, 0, 0, 0, 1, 2}), "four");
  CHECK(bad.verdict.kind == KEClass::NotKE);
  CHECK(bad.verdict.detail == "multiplicity 4 > 3");
  CHECK_FALSE(bad.moduli_point.has_value());

  const auto j = run(fixtures::jordan3(), "jordan");
  CHECK_FALSE(j.diagonalizable);
  CHECK_FALSE(j.singularities.has_value());

  const auto n4 = run(fixtures::diagonal(4, {1, 1, 1, 1, 1, 1, 1}, {0, 0, 1, 1, 2, 2, 3}), "n4");
  CHECK(n4.volume.anticanonical_volume == Rational(324));
  CHECK(n4.conditional_claims.empty());
  CHECK_FALSE(n4.moduli_point.has_value());
}

TEST_CASE("JSON round trip and determinism") {
  for (const auto& p : {fixtures::toric(), fixtures::cp3_z2(), fixtures::jordan3(), fixtures::smooth3()}) {
    const auto r = run(p, "x");
    const Json j = to_json(r);
    CHECK(report_from_json(j) == r);
    CHECK(report_from_json(Json::parse(j.dump())) == r);
    CHECK(to_json(run(p, "x")).dump() == j.dump());
    CHECK(to_json(analyze(make_input(p, "x"), {kernels::Execution::Serial})).dump() == j.dump());
    CHECK_FALSE(render_text(r).empty());
  }
  CHECK_THROWS_AS(report_from_json(Json::parse(R"({"version": "0.1.0"})")), Error);
  Json broken = to_json(run(fixtures::toric(), "t"));
  broken["verdict"]["class"] = "Sometimes";
  CHECK_THROWS_AS(report_from_json(broken), Error);
}

TEST_CASE("batch: parallel matches serial") {
  std::vector<BatchItem> items;
  int k = 0;
  for (const auto& p : {fixtures::toric(), fixtures::cp3_z2(), fixtures::jordan3(), fixtures::smooth3()}) {
    items.push_back({"doc" + std::to_string(k++), serialize(make_input(p))});
  }
  items.push_back({"broken", "{\"n\": 3}"});
  items.push_back({"nonregular", serialize(make_input(fixtures::diagonal(2, {1, 1, 1, 1, 0}, {1, 2, 3, 4, 0})))});
  const auto serial = analyze_batch_serial(items);
  const auto parallel = analyze_batch_parallel(items);
  CHECK(serial == parallel);
  REQUIRE(serial.size() == items.size());
  CHECK(serial[4].error->code == ErrorCode::MalformedDocument);
  CHECK(serial[5].error->code == ErrorCode::NonRegularPencil);
  CHECK(exit_code(category(ErrorCode::NonRegularPencil)) == 3);
  CHECK(exit_code(category(ErrorCode::MalformedDocument)) == 2);
  CHECK(serial[0].report->label == "");
}
