#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "usbp/usbp.h"

TEST_CASE("c api: operator lifecycle and matrix access") {
  usbp_operator* op = nullptr;
  REQUIRE(usbp_operator_create("LGL", 3, nullptr, 0, -1.0, &op) == USBP_OK);
  REQUIRE(op != nullptr);
  CHECK(usbp_operator_num_nodes(op) == 3);
  CHECK(usbp_operator_degree(op) == 1);

  double dplus[9];
  REQUIRE(usbp_operator_matrix(op, "Dplus", dplus, 9) == USBP_OK);
  // worked example: D+ = (1/8) [[-14,20,-6],[-3,-2,5],[2,-12,10]], row-major
  CHECK(dplus[0] == doctest::Approx(-14.0 / 8.0).epsilon(1e-14));
  CHECK(dplus[1] == doctest::Approx(20.0 / 8.0).epsilon(1e-14));
  CHECK(dplus[5] == doctest::Approx(5.0 / 8.0).epsilon(1e-14));

  double nodes[3];
  REQUIRE(usbp_operator_matrix(op, "nodes", nodes, 3) == USBP_OK);
  CHECK(nodes[1] == 0.0);

  CHECK(usbp_operator_matrix(op, "Dplus", dplus, 4) == USBP_ERR_INVALID_ARGUMENT);
  CHECK(usbp_operator_matrix(op, "bogus", dplus, 9) == USBP_ERR_INVALID_ARGUMENT);
  CHECK(std::string(usbp_last_error()).find("unknown matrix") != std::string::npos);

  int pass = 0, degree = -1;
  double residual = 1.0;
  REQUIRE(usbp_operator_verify(op, &pass, &residual, &degree) == USBP_OK);
  CHECK(pass == 1);
  CHECK(degree == 1);

  char* json = nullptr;
  REQUIRE(usbp_operator_to_json(op, &json) == USBP_OK);
  usbp_operator* copy = nullptr;
  REQUIRE(usbp_operator_from_json(json, &copy) == USBP_OK);
  double dplus2[9];
  REQUIRE(usbp_operator_matrix(copy, "Dplus", dplus2, 9) == USBP_OK);
  for (int i = 0; i < 9; ++i) CHECK(dplus2[i] == dplus[i]);
  usbp_string_free(json);
  usbp_operator_destroy(copy);
  usbp_operator_destroy(op);
}

TEST_CASE("c api: explicit eigenvalue lists and error mapping") {
  const double eigenvalues[4] = {0.0, 0.0, -0.5, -1.0};
  usbp_operator* op = nullptr;
  REQUIRE(usbp_operator_create("LGL", 4, eigenvalues, 4, 0.0, &op) == USBP_OK);
  CHECK(usbp_operator_degree(op) == 1);
  usbp_operator_destroy(op);

  const double bad[3] = {0.0, 0.0, +1.0};
  CHECK(usbp_operator_create("LGL", 3, bad, 3, 0.0, &op) == USBP_ERR_INVALID_ARGUMENT);
  CHECK(usbp_operator_create("NoSuchFamily", 3, nullptr, 0, -1.0, &op) ==
        USBP_ERR_INVALID_ARGUMENT);
  CHECK(usbp_operator_create("Equidistant", 5, nullptr, 0, -1.0, &op) ==
        USBP_ERR_INVALID_ARGUMENT);

  // gauss and dense-norm families construct and verify
  for (const char* family : {"GaussLegendre", "Equidistant"}) {
    usbp_operator* handle = nullptr;
    REQUIRE(usbp_operator_create(family, 4, nullptr, 0, -1.0, &handle) == USBP_OK);
    int pass = 0;
    REQUIRE(usbp_operator_verify(handle, &pass, nullptr, nullptr) == USBP_OK);
    CHECK(pass == 1);
    char* report = nullptr;
    REQUIRE(usbp_operator_verify_json(handle, &report) == USBP_OK);
    CHECK(std::strstr(report, "\"pass\"") != nullptr);
    usbp_string_free(report);
    usbp_operator_destroy(handle);
  }
}

TEST_CASE("c api: experiment run and config rejection") {
  const char* config =
      R"({"experiment":"operator-dump","N":4,"lambda":-1,"out":"capi_dump.json"})";
  char* summary = nullptr;
  REQUIRE(usbp_experiment_run(config, &summary) == USBP_OK);
  REQUIRE(summary != nullptr);
  CHECK(std::strstr(summary, "\"verified\": true") != nullptr);
  usbp_string_free(summary);
  std::remove("capi_dump.json");

  CHECK(usbp_experiment_run(R"({"experiment":"nope"})", nullptr) == USBP_ERR_BAD_CONFIG);
  CHECK(std::string(usbp_last_error()).find("unknown value") != std::string::npos);
  CHECK(usbp_experiment_run(R"({"experiment":"spectrum","lambda":2})", nullptr) ==
        USBP_ERR_BAD_CONFIG);
  CHECK(usbp_experiment_run("not json", nullptr) == USBP_ERR_BAD_CONFIG);
}
