#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kcsc/moment/barycenter.hpp"
#include "kcsc/report/json_io.hpp"
#include "kcsc/report/report.hpp"
#include "kcsc/report/text.hpp"
#include "kcsc/spectral/dtn.hpp"
#include "kcsc/toric/fan.hpp"

using namespace kcsc;
using namespace kcsc::report;

namespace {

std::string data(const std::string& name) { return std::string(KCSC_DATA_DIR) + "/fans/" + name; }

struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& name) : path(std::filesystem::temp_directory_path() / name) {
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

ReportOptions tuned() {
  ReportOptions o;
  o.epsilon = Rational(1, 10000000);
  o.c_gamma = Rational(2, 3);
  return o;
}

}  // namespace

TEST_CASE("verdicts of the example fans") {
  const auto x1 = run_report(std::filesystem::path(data("X1.json")));
  CHECK(x1.verdict == Verdict::partial);
  REQUIRE(x1.balancing);
  CHECK(x1.balancing->points.size() == 6);
  CHECK(x1.balancing->rank == 3);
  CHECK(x1.polytope.k == 3);
  CHECK(x1.polytope.vertex_count == 12);
  CHECK(x1.polytope.barycenter_at_origin);
  CHECK(x1.tuning.empty());

  const auto x4 = run_report(std::filesystem::path(data("X4.json")));
  CHECK(x4.verdict == Verdict::partial);
  CHECK(x4.balancing->points == std::vector<std::string>{"C1", "C4", "C7", "C8"});

  CHECK(run_report(std::filesystem::path(data("X2.json"))).verdict == Verdict::full_desingularization);
  CHECK(run_report(std::filesystem::path(data("X3.json"))).verdict == Verdict::full_desingularization);
  const auto p2 = run_report(std::filesystem::path(data("P2.json")));
  CHECK(p2.verdict == Verdict::not_applicable);
  CHECK_FALSE(p2.balancing);
}

TEST_CASE("verdict rules on constructed fans") {
  // Weighted projective plane P(1,1,2): one singular point of order 2 with weights (1/2,1/2), in SU(2),
  // but the barycenter of its polytope is off the origin.
  const auto wp = toric::parse_fan(R"({"name":"P112","dim":2,"rays":[[1,0],[0,1],[-1,-2]],"max_cones":[[0,1],[1,2],[2,0]]})");
  const auto r = run_report(wp);
  CHECK(r.verdict == Verdict::not_applicable);
  CHECK_FALSE(r.polytope.barycenter_at_origin);

  // P(1,1,3): the singular point is not in SU(2).
  const auto u = toric::parse_fan(R"({"name":"P113","dim":2,"rays":[[1,0],[0,1],[-1,-3]],"max_cones":[[0,1],[1,2],[2,0]]})");
  CHECK(run_report(u).verdict == Verdict::not_applicable);
}

TEST_CASE("tuning inside the report") {
  const auto x1 = run_report(std::filesystem::path(data("X1.json")), tuned());
  REQUIRE(x1.tuning.size() == 6);
  for (const auto& t : x1.tuning) {
    CHECK(t.tuning_ok);
    REQUIRE(t.budget);
    CHECK(t.budget->verdict);
    CHECK(t.delta == Rational(-3, 2));
    CHECK(t.order == 3);
    CHECK(t.b == 1);
    REQUIRE(t.b_tilde_2m_leading);
    CHECK(*t.b_tilde_2m_leading == tuning::PiSum(t.B_radicand));
  }
  ReportOptions only_eps;
  only_eps.epsilon = Rational(1, 1000);
  CHECK(run_report(std::filesystem::path(data("X1.json")), only_eps).tuning.empty());

  ReportOptions outside = tuned();
  outside.delta = Rational(0);
  CHECK_THROWS_AS(run_report(std::filesystem::path(data("X1.json")), outside), InputError);
}

TEST_CASE("JSON round trip and determinism") {
  for (const char* name : {"X1.json", "X2.json", "X3.json", "X4.json", "P2.json"}) {
    const auto a = run_report(std::filesystem::path(data(name)), tuned());
    const Json j = to_json(a);
    const auto back = report_from_json(Json::parse(j.dump()));
    CHECK(back == a);
    CHECK(to_json(back).dump() == j.dump());
    ReportOptions threaded = tuned();
    threaded.threads = 4;
    CHECK(to_json(run_report(std::filesystem::path(data(name)), threaded)).dump() == j.dump());
  }
  CHECK_THROWS_AS(report_from_json(Json::parse(R"({"name":"x"})")), InputError);
  CHECK_THROWS_AS(parse_verdict("MAYBE"), InputError);
}

TEST_CASE("potential tables round trip") {
  const auto fan = toric::load_fan(data("X1.json"));
  const auto table = moment::potentials_at_points(moment::anticanonical_polytope(fan, 3), {"C1", "C4"});
  const auto back = potential_table_from(Json::parse(potential_table_json(table).dump()));
  CHECK(back.points == table.points);
  CHECK(exactly_equal(back.values, table.values));
  CHECK(exactly_equal(back.barycenter, table.barycenter));
  CHECK_THROWS_AS(potential_table_from(Json::parse(R"({"points":["a"],"values":[["1","2"]]})")), InputError);
}

TEST_CASE("batch isolates failures and keeps file order") {
  TempDir empty("kcsc_batch_empty");
  CHECK(batch(empty.path).empty());

  TempDir dir("kcsc_batch_mixed");
  std::filesystem::copy_file(data("X1.json"), dir.path / "b_x1.json");
  std::filesystem::copy_file(data("X4.json"), dir.path / "c_x4.json");
  std::ofstream(dir.path / "a_broken.json") << "{ \"name\": \"broken\", ";
  std::ofstream(dir.path / "notes.txt") << "ignored";
  ReportOptions o;
  o.threads = 3;
  const auto entries = batch(dir.path, o);
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].file == "a_broken.json");
  CHECK_FALSE(entries[0].report);
  CHECK(entries[0].error_code == 1);
  CHECK_FALSE(entries[0].error.empty());
  CHECK(entries[1].report->verdict == Verdict::partial);
  CHECK(entries[2].report->verdict == Verdict::partial);
  CHECK(format_batch(entries).find("ERROR") != std::string::npos);
  CHECK_THROWS_AS(batch(dir.path / "missing"), InputError);
}

TEST_CASE("text rendering") {
  const auto x1 = run_report(std::filesystem::path(data("X1.json")), tuned());
  const std::string text = format_report(x1);
  CHECK(text.find("C1    3    yes       SU     (3,0,0)") != std::string::npos);
  CHECK(text.find("verdict: PARTIAL") != std::string::npos);
  CHECK(format_table({"a", "bb"}, {{"xyz", "1"}}) == "a    bb\n---  --\nxyz  1\n");
  CHECK_THROWS_AS(format_table({"a"}, {{"1", "2"}}), InputError);
}

TEST_CASE("DtN table stream") {
  std::ostringstream out;
  spectral::write_dtn_table(out, 3, 0);
  CHECK(out.str() == "m,gamma,p11,p12,p21,p22,det\n3,0,-4,-2/3,0,-4,16\n");
  for (int m = 2; m <= 5; ++m) {
    std::ostringstream table;
    spectral::write_dtn_table(table, m, 64, false);
    std::string line;
    std::istringstream in(table.str());
    int rows = 0;
    while (std::getline(in, line)) {
      ++rows;
      CHECK(line.substr(line.rfind(',') + 1) != "0");
    }
    CHECK(rows == 65);
  }
}
