#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "projdes/projdes.h"

namespace {

struct Design {
  pd_design* d = nullptr;
  ~Design() { pd_design_free(d); }
};

struct Report {
  char* s = nullptr;
  ~Report() { pd_string_free(s); }
  std::string str() const { return s ? std::string(s) : std::string(); }
};

}  // namespace

TEST_CASE("version string") {
  CHECK(std::string(pd_version()) == "0.1.0");
}

TEST_CASE("construct, verify and certify through the C interface") {
  Design d;
  REQUIRE(pd_design_construct("cp1-5design", 0, &d.d) == PD_OK);
  CHECK(pd_design_size(d.d) == 12);

  int verified = -1;
  Report rep;
  CHECK(pd_verify(d.d, 5, 0.0, "text", &verified, &rep.s) == PD_OK);
  CHECK(verified == 1);
  CHECK(rep.str().find("tight: yes") != std::string::npos);

  int verified6 = -1;
  Report rep6;
  CHECK(pd_verify(d.d, 6, 0.0, "text", &verified6, &rep6.s) == PD_FAIL);
  CHECK(verified6 == 0);
  CHECK(rep6.str().find("design: no") != std::string::npos);
}

TEST_CASE("verify accepts a null report slot") {
  Design d;
  REQUIRE(pd_design_construct("rp1-polygon", 3, &d.d) == PD_OK);
  CHECK(pd_design_size(d.d) == 4);
  int verified = -1;
  CHECK(pd_verify(d.d, 3, 0.0, nullptr, &verified, nullptr) == PD_OK);
  CHECK(verified == 1);
}

TEST_CASE("json round trip") {
  Design d;
  REQUIRE(pd_design_construct("cp1-5design", 0, &d.d) == PD_OK);
  Report text;
  REQUIRE(pd_design_to_json(d.d, &text.s) == PD_OK);

  Design back;
  REQUIRE(pd_design_from_json(text.s, &back.d) == PD_OK);
  CHECK(pd_design_size(back.d) == 12);
  int verified = -1;
  CHECK(pd_verify(back.d, 5, 0.0, "json", &verified, nullptr) == PD_OK);
  CHECK(verified == 1);
}

TEST_CASE("float image verifies numerically") {
  Design d;
  REQUIRE(pd_design_construct("cp1-5design", 0, &d.d) == PD_OK);
  Design fl;
  REQUIRE(pd_design_to_float(d.d, &fl.d) == PD_OK);
  CHECK(pd_design_size(fl.d) == 12);
  int verified = -1;
  CHECK(pd_verify(fl.d, 5, 0.0, "text", &verified, nullptr) == PD_OK);
  CHECK(verified == 1);
  CHECK(pd_verify(fl.d, 6, 0.0, "text", &verified, nullptr) == PD_FAIL);
  CHECK(verified == 0);
}

TEST_CASE("malformed input reports einval with a message") {
  Design d;
  CHECK(pd_design_from_json("{not json", &d.d) == PD_EINVAL);
  CHECK(d.d == nullptr);
  CHECK(std::strlen(pd_last_error()) > 0);

  Design d2;
  CHECK(pd_design_from_json(R"({"field": "C", "n": 1, "backend": "exact", "points": [["1/0", 1]]})",
                            &d2.d) == PD_EINVAL);
  CHECK(d2.d == nullptr);

  Design d3;
  CHECK(pd_design_load("/no/such/file.json", &d3.d) == PD_EINVAL);
}

TEST_CASE("null arguments are rejected") {
  CHECK(pd_design_load(nullptr, nullptr) == PD_EINVAL);
  CHECK(pd_design_from_json(nullptr, nullptr) == PD_EINVAL);
  CHECK(pd_design_to_json(nullptr, nullptr) == PD_EINVAL);
  CHECK(pd_design_construct(nullptr, 0, nullptr) == PD_EINVAL);
  CHECK(pd_verify(nullptr, 5, 0.0, "text", nullptr, nullptr) == PD_EINVAL);
  CHECK(pd_bma(nullptr, 5, 0.0, "text", nullptr, nullptr) == PD_EINVAL);
  CHECK(pd_design_size(nullptr) == -1);
}

TEST_CASE("save rejects an unwritable path") {
  Design d;
  REQUIRE(pd_design_construct("rp1-polygon", 1, &d.d) == PD_OK);
  CHECK(pd_design_save(d.d, "/no/such/dir/design.json") == PD_EINVAL);
  CHECK(std::strlen(pd_last_error()) > 0);
}

TEST_CASE("unknown construction name") {
  Design d;
  CHECK(pd_design_construct("icosahedron", 0, &d.d) == PD_EINVAL);
  CHECK(d.d == nullptr);
}

TEST_CASE("algebra check through the C interface") {
  Design d;
  REQUIRE(pd_design_construct("cp1-5design", 0, &d.d) == PD_OK);
  int ok = -1;
  Report rep;
  CHECK(pd_bma(d.d, 5, 0.0, "text", &ok, &rep.s) == PD_OK);
  CHECK(ok == 1);
  CHECK(rep.str().find("ranks: 1, 3, 5, 3") != std::string::npos);

  Report json;
  CHECK(pd_bma(d.d, 5, 0.0, "json", &ok, &json.s) == PD_OK);
  CHECK(json.str().find("\"ranks\"") != std::string::npos);
}

TEST_CASE("census through the C interface") {
  Report rep;
  REQUIRE(pd_census(nullptr, 2, 3, 1, "csv", &rep.s) == PD_OK);
  std::string text = rep.str();
  CHECK(text.rfind("field,n,s,t,rank_L1,rank_Ls,equal,bound\n", 0) == 0);
  // 3 fields x 2 n x 2 s = 12 data rows.
  int lines = 0;
  for (char c : text)
    if (c == '\n') ++lines;
  CHECK(lines == 13);

  Report sub;
  REQUIRE(pd_census("C", 1, 3, 1, "csv", &sub.s) == PD_OK);
  CHECK(sub.str().find("C,1,3,5,3,3,true,12") != std::string::npos);
  CHECK(sub.str().find("R,") == std::string::npos);

  Report bad;
  CHECK(pd_census("X", 1, 3, 1, "csv", &bad.s) == PD_EINVAL);
}

TEST_CASE("rationality and bound through the C interface") {
  Report rep;
  REQUIRE(pd_rationality(6, "csv", &rep.s) == PD_OK);
  CHECK(rep.str().rfind("t,rational\n", 0) == 0);
  CHECK(rep.str().find("4,false") != std::string::npos);
  CHECK(rep.str().find("5,true") != std::string::npos);

  Report bound;
  REQUIRE(pd_bound("C", 1, 5, "json", &bound.s) == PD_OK);
  CHECK(bound.str().find("\"bound\": \"12\"") != std::string::npos);
  CHECK(pd_bound("Q", 1, 5, "json", nullptr) == PD_EINVAL);
}

TEST_CASE("design info through the C interface") {
  Design d;
  REQUIRE(pd_design_construct("rp1-polygon", 5, &d.d) == PD_OK);
  Report rep;
  REQUIRE(pd_design_info(d.d, 0.0, "text", &rep.s) == PD_OK);
  CHECK(rep.str().find("angle set") != std::string::npos);
}

TEST_CASE("tabular output is only defined for tables") {
  Design d;
  REQUIRE(pd_design_construct("cp1-5design", 0, &d.d) == PD_OK);
  int verified = -1;
  CHECK(pd_verify(d.d, 5, 0.0, "csv", &verified, nullptr) == PD_EINVAL);
  CHECK(pd_bma(d.d, 5, 0.0, "csv", nullptr, nullptr) == PD_EINVAL);
  CHECK(pd_verify(d.d, 5, 0.0, "yaml", &verified, nullptr) == PD_EINVAL);
}
