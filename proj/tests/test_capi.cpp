#include <doctest.h>

#include <cmath>
#include <string>

#include "gicbound/gicbound.h"

TEST_CASE("channel handles") {
  gic_channel* ch = nullptr;
  REQUIRE(gic_channel_symmetric(3, 0.5, 0.0, 10.0, 1, &ch) == GIC_OK);
  CHECK(gic_channel_k(ch) == 3);
  gic_channel_free(ch);

  CHECK(gic_channel_symmetric(3, 0.0, 1.0, 10.0, 1, &ch) == GIC_ERR_CONFIG);
  CHECK(std::string(gic_last_error()).size() > 0);
  CHECK(gic_channel_symmetric(1, 0.5, 0.0, 10.0, 0, &ch) == GIC_ERR_CONFIG);
  CHECK(gic_channel_symmetric(3, 0.5, 0.0, 10.0, 0, nullptr) == GIC_ERR_NULL_ARG);
  CHECK(gic_channel_from_json("{oops", &ch) == GIC_ERR_CONFIG);
  REQUIRE(gic_channel_from_json(R"({"k": 4, "sym": {"g": 0.3, "p": 10}})", &ch) == GIC_OK);
  CHECK(gic_channel_k(ch) == 4);
  gic_channel_free(ch);
  gic_channel_free(nullptr);
  CHECK(std::string(gic_status_string(GIC_ERR_INFEASIBLE)).size() > 0);
  CHECK(std::string(gic_version()).size() > 0);
}

TEST_CASE("bound evaluation") {
  gic_channel* ch = nullptr;
  REQUIRE(gic_channel_symmetric(3, std::sqrt(0.5), 0.0, 10.0, 1, &ch) == GIC_OK);
  gic_bound_value v{};
  REQUIRE(gic_bound(ch, "tdm", &v) == GIC_OK);
  CHECK(v.feasible == 1);
  CHECK(v.normalized == doctest::Approx(0.8257).epsilon(1e-4));
  CHECK(v.sum_rate == doctest::Approx(6 * v.normalized));
  CHECK(gic_bound(ch, "no_such_bound", &v) == GIC_ERR_CONFIG);
  CHECK(gic_bound(ch, nullptr, &v) == GIC_ERR_NULL_ARG);
  gic_channel_free(ch);

  REQUIRE(gic_channel_symmetric(3, std::sqrt(2.0), 0.0, 10.0, 1, &ch) == GIC_OK);
  CHECK(gic_bound(ch, "zext", &v) == GIC_ERR_INFEASIBLE);
  CHECK(v.feasible == 0);
  CHECK(std::isinf(v.sum_rate));
  gic_channel_free(ch);

  REQUIRE(gic_channel_semi_symmetric(0.4, 0.0, 0.3, 0.5, 10.0, 0, &ch) == GIC_OK);
  REQUIRE(gic_bound(ch, "best_lower", &v) == GIC_OK);
  CHECK(v.feasible == 1);
  gic_channel_free(ch);
}

TEST_CASE("verb runs and tables") {
  gic_table* t = nullptr;
  REQUIRE(gic_run("sweep", R"({"k": 3, "p": 10, "axis": "alpha", "start": -1, "stop": 1, "step": 0.5,
                              "bounds": "tdm,kramer"})", &t) == GIC_OK);
  REQUIRE(gic_table_parts(t) == 1);
  CHECK(std::string(gic_table_part_name(t, 0)) == "sweep");
  CHECK(gic_table_rows(t, 0) == 10);
  char* csv = nullptr;
  REQUIRE(gic_table_csv(t, 0, &csv) == GIC_OK);
  CHECK(std::string(csv).rfind("k,field,p_linear,", 0) == 0);
  gic_string_free(csv);
  CHECK(gic_table_csv(t, 5, &csv) == GIC_ERR_CONFIG);
  CHECK(gic_table_all_infeasible(t) == 0);
  CHECK(std::string(gic_table_report_json(t)).find("sweep") != std::string::npos);
  gic_table_free(t);

  CHECK(gic_run("sweep", R"({"k": 3, "bogus": 1})", &t) == GIC_ERR_CONFIG);
  CHECK(gic_run(nullptr, "{}", &t) == GIC_ERR_NULL_ARG);

  REQUIRE(gic_run("eval", R"({"k": 3, "p": 10, "g": 1.5, "field": "real", "bounds": "zext"})", &t) == GIC_OK);
  CHECK(gic_table_all_infeasible(t) == 1);
  gic_table_free(t);
}
