#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "planebundles.h"

namespace {

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  pb_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("bundle handles from family literals") {
  pb_bundle* b = nullptr;
  REQUIRE(pb_bundle_from_family("ex62:r=1,f=z^3", "Q", &b) == PB_OK);
  long long c1 = 0, c2 = 0;
  CHECK(pb_bundle_chern(b, &c1, &c2) == PB_OK);
  CHECK(c1 == -1);
  CHECK(c2 == 4);

  long long a = 0, bb = 0;
  CHECK(pb_splitting(b, "[1,0,0]", &a, &bb) == PB_OK);
  CHECK(a + bb == -1);
  pb_bundle_free(b);
}

TEST_CASE("error paths set codes and messages") {
  pb_bundle* b = nullptr;
  CHECK(pb_bundle_from_family("nonsense:1", "Q", &b) == PB_ERROR_PARSE);
  CHECK(std::string(pb_last_error()).find("nonsense") != std::string::npos);

  CHECK(pb_bundle_from_family("en:3", "Fp:4", &b) == PB_ERROR_INVALID_ARGUMENT);
  CHECK(pb_bundle_from_file("/does/not/exist", nullptr, &b) == PB_ERROR_IO);

  REQUIRE(pb_bundle_from_family("en:3", "Q", &b) == PB_OK);
  char* out = nullptr;
  CHECK(pb_scan_report(b, 1, 0, 0, "json", &out) == PB_ERROR_UNSUPPORTED);  // exhaustive over Q
  CHECK(pb_splitting(b, "[0,0", nullptr, nullptr) == PB_ERROR_PARSE);
  CHECK(pb_chern_report(b, "yaml", &out) == PB_ERROR_INVALID_ARGUMENT);
  pb_bundle_free(b);

  CHECK(pb_bundle_chern(nullptr, nullptr, nullptr) == PB_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("bundle files round trip through the handle API") {
  std::string path = "/tmp/pb_capi_test.bundle";
  std::FILE* f = std::fopen(path.c_str(), "w");
  REQUIRE(f);
  std::fputs("# fixture\nfield: Fp 5\nsub: 3\nquotients: 2 2 0\nentries: y | z | x^3\n", f);
  std::fclose(f);

  pb_bundle* b = nullptr;
  REQUIRE(pb_bundle_from_file(path.c_str(), "Fp:5", &b) == PB_OK);
  char* out = nullptr;
  REQUIRE(pb_scan_report(b, 1, 0, 0, "json", &out) == PB_OK);
  auto doc = nlohmann::json::parse(take(out));
  CHECK(doc["schema"] == 1);
  CHECK(doc["classification"]["kind"] == "pencil");
  CHECK(doc["classification"]["point"] == "1:0:0");
  CHECK(doc["lines_scanned"] == 31);

  pb_bundle* wrong = nullptr;
  CHECK(pb_bundle_from_file(path.c_str(), "Q", &wrong) == PB_ERROR_INVALID_ARGUMENT);
  pb_bundle_free(b);
}

TEST_CASE("reports carry the stable schema and both formats work") {
  pb_bundle* b = nullptr;
  REQUIRE(pb_bundle_from_family("en:3", "Q", &b) == PB_OK);

  char* out = nullptr;
  REQUIRE(pb_splitting_report(b, "[0,1,0]", "json", &out) == PB_OK);
  auto doc = nlohmann::json::parse(take(out));
  CHECK(doc["a"] == 1);
  CHECK(doc["b"] == -2);
  CHECK(doc["bundle"]["field"] == "Q");

  REQUIRE(pb_sections_report(b, 0, "json", &out) == PB_OK);
  auto sec = nlohmann::json::parse(take(out));
  CHECK(sec["h0"] == 1);
  CHECK(sec["basis"][0]["zero_scheme"]["colength"] == 1);

  REQUIRE(pb_chern_report(b, "text", &out) == PB_OK);
  CHECK(take(out).find("unstable") != std::string::npos);

  REQUIRE(pb_invariance_report(b, "Gp", "1:0:0", nullptr, 10, 0, "json", &out) == PB_OK);
  auto inv = nlohmann::json::parse(take(out));
  CHECK(inv["verdict"] == "invariant");
  CHECK(inv["certainty"] == "sampled");
  pb_bundle_free(b);
}

TEST_CASE("single-element invariance through the C surface") {
  pb_bundle* b = nullptr;
  REQUIRE(pb_bundle_from_family("kaneyama:1,2,2", "Q", &b) == PB_OK);
  char* out = nullptr;
  REQUIRE(pb_invariance_element_report(b, "1,1,0,0,1,0,0,0,1", 0, "json", &out) == PB_OK);
  auto doc = nlohmann::json::parse(take(out));
  CHECK(doc["verdict"] == "not_invariant");
  CHECK(doc["certainty"] == "certified");

  CHECK(pb_invariance_element_report(b, "1,0,0", 0, "json", &out) == PB_ERROR_PARSE);
  CHECK(pb_invariance_element_report(b, "0,0,0,0,0,0,0,0,0", 0, "json", &out) ==
        PB_ERROR_PRECONDITION);
  pb_bundle_free(b);
}

TEST_CASE("isomorphic through the C surface") {
  pb_bundle* a = nullptr;
  pb_bundle* b = nullptr;
  REQUIRE(pb_bundle_from_family("en:2", "Q", &a) == PB_OK);
  REQUIRE(pb_bundle_from_family("en:2", "Q", &b) == PB_OK);
  char* out = nullptr;
  REQUIRE(pb_isomorphic_report(a, b, 0, "json", &out) == PB_OK);
  auto doc = nlohmann::json::parse(take(out));
  CHECK(doc["isomorphic"] == true);
  pb_bundle_free(a);
  pb_bundle_free(b);
}

TEST_CASE("verify-paper self-test hook forces a named failure") {
  char* out = nullptr;
  int ok = -1;
  REQUIRE(pb_verify_paper(1, 0, "en-jumping-pencil", "json", &out, &ok) == PB_OK);
  auto doc = nlohmann::json::parse(take(out));
  CHECK(ok == 0);
  CHECK(doc["all_passed"] == false);
  bool named = false;
  for (const auto& check : doc["checks"])
    if (check["name"] == "en-jumping-pencil") named = !check["pass"];
  CHECK(named);
}
