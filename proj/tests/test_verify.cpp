#include <doctest.h>

#include <json.hpp>

#include "beit/error.hpp"
#include "beit/verify.hpp"

using namespace beit;

TEST_SUITE("verify") {

TEST_CASE("suites pass and report their instance counts") {
  const VerifyReport cone = run_suite("cone-betti", {});
  CHECK(cone.pass());
  CHECK(cone.instances.size() == 6);

  const VerifyReport strand = run_suite("linear-strand", {});
  CHECK(strand.pass());
  CHECK(strand.instances.size() == 31);

  const VerifyReport grb = run_suite("grb", {});
  CHECK(grb.pass());
}

TEST_CASE("reports are sorted and deterministic") {
  const VerifyReport a = run_suite("join-depth", {});
  const VerifyReport b = run_suite("join-depth", {});
  CHECK(report_json(a, false) == report_json(b, false));
  CHECK(report_text(a, false) == report_text(b, false));
  for (std::size_t k = 1; k < a.instances.size(); ++k) CHECK(a.instances[k - 1].key() < a.instances[k].key());

  const auto j = nlohmann::json::parse(report_json(a, false));
  CHECK(j["suite"] == "join-depth");
  CHECK(j["pass"] == true);
  CHECK(j["instances"][0]["checks"][0].contains("expected"));
  CHECK(!j["instances"][0]["checks"][0].contains("elapsed_ms"));
  CHECK(nlohmann::json::parse(report_json(a, true))["instances"][0]["checks"][0].contains("elapsed_ms"));
}

TEST_CASE("a failing check is reported, not hidden") {
  VerifyReport r;
  r.suite = "x";
  r.instances.push_back({"x", "g", {{"c", "1", "2", false, 0}}});
  CHECK(!r.pass());
  CHECK(r.failure_count() == 1);
  CHECK(report_text(r, false).find("expected [1] got [2]") != std::string::npos);
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS(run_suite("nope", {}), Error); }

}  // TEST_SUITE
