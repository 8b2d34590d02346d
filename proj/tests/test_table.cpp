#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "qtherm/table.hpp"

using namespace qtherm;

TEST_CASE("csv layout and round-trip precision") {
  ResultTable t;
  t.set_meta("tool", "demo");
  t.set_meta("alpha", 0.5);
  t.set_columns({"n", "x"});
  t.add_row({1.0, 1.0 / 3.0});
  t.add_row({2.0, 0.1});

  const std::string csv = t.to_csv();
  CHECK(csv ==
        "# tool=demo\n"
        "# alpha=0.5\n"
        "n,x\n"
        "1,0.33333333333333331\n"
        "2,0.10000000000000001\n");

  // 17 significant digits reproduce the exact bits.
  const double x = std::strtod("0.33333333333333331", nullptr);
  CHECK(x == 1.0 / 3.0);
}

TEST_CASE("rectangularity is enforced") {
  ResultTable t;
  t.set_columns({"a", "b"});
  CHECK_THROWS(t.add_row({1.0}));
  t.add_row({1.0, 2.0});
  CHECK_THROWS(t.set_columns({"c"}));
  CHECK(t.num_rows() == 1);
}

TEST_CASE("json structure") {
  ResultTable t;
  t.set_meta("tool", "demo");
  t.set_meta("p", 0.25);
  t.set_columns({"v"});
  t.add_row({2.5});
  t.add_row({std::numeric_limits<double>::infinity()});

  const nlohmann::json j = nlohmann::json::parse(t.to_json());
  CHECK(j["meta"]["tool"] == "demo");
  CHECK(j["meta"]["p"] == 0.25);
  CHECK(j["columns"]["v"][0] == 2.5);
  CHECK(j["columns"]["v"][1].is_null());
}

TEST_CASE("infinities in csv") {
  ResultTable t;
  t.set_columns({"v"});
  t.add_row({std::numeric_limits<double>::infinity()});
  const std::string csv = t.to_csv();
  CHECK(csv.find("inf") != std::string::npos);
}
