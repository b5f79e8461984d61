// Copyright 2026 The cubecert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <fstream>
#include <string>

#include <json.hpp>

#include "cubecert/cubecert.h"

using nlohmann::json;

namespace {

struct Owned {
  char* p = nullptr;
  ~Owned() { cubecert_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

// Subset of JSON Schema: type, required, properties, items, enum, minimum.
void validate(const json& schema, const json& v, const std::string& at) {
  INFO(at);
  if (schema.contains("type")) {
    const json types = schema["type"].is_array() ? schema["type"] : json::array({schema["type"]});
    bool ok = false;
    for (const auto& t : types) {
      ok = ok || (t == "object" && v.is_object()) || (t == "array" && v.is_array()) ||
           (t == "string" && v.is_string()) || (t == "boolean" && v.is_boolean()) ||
           (t == "integer" && v.is_number_integer()) || (t == "number" && v.is_number()) ||
           (t == "null" && v.is_null());
    }
    REQUIRE_MESSAGE(ok, "expected " << types.dump() << ", got " << v.dump());
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& e : schema["enum"]) found = found || e == v;
    CHECK_MESSAGE(found, "value not in enum: " << v.dump());
  }
  if (schema.contains("minimum")) CHECK(v.get<double>() >= schema["minimum"].get<double>());
  if (schema.contains("required")) {
    for (const auto& k : schema["required"]) CHECK_MESSAGE(v.contains(k.get<std::string>()), "missing " << k);
  }
  if (schema.contains("properties")) {
    for (const auto& [k, s] : schema["properties"].items()) {
      if (v.contains(k)) validate(s, v[k], at + "." + k);
    }
  }
  if (schema.contains("items")) {
    for (std::size_t i = 0; i < v.size(); ++i) validate(schema["items"], v[i], at + "[" + std::to_string(i) + "]");
  }
}

}  // namespace

TEST_CASE("error reporting") {
  double m = 0;
  CHECK(cubecert_eval_m(1, -1, &m) == CUBECERT_ERR_DOMAIN);
  CHECK(std::string(cubecert_last_error()).size() > 0);
  CHECK(cubecert_eval_m(1, 1, &m) == CUBECERT_OK);
  CHECK(std::string(cubecert_last_error()).empty());
  CHECK(cubecert_eval_m(1, 1, nullptr) == CUBECERT_ERR_INVALID_ARGUMENT);
  const double v[3] = {1, 2, 3};
  CHECK(cubecert_theorem_margin(1, v, 3, &m) == CUBECERT_ERR_DOMAIN);
  cubecert_config* cfg = nullptr;
  REQUIRE(cubecert_config_create(&cfg) == CUBECERT_OK);
  CHECK(cubecert_config_set(cfg, "n", "99") == CUBECERT_ERR_CONFIG);
  CHECK(cubecert_config_load_file(cfg, "/nonexistent.conf") == CUBECERT_ERR_IO);
  CHECK(cubecert_config_set(cfg, "out", "r.json") == CUBECERT_OK);
  CHECK(std::string(cubecert_config_out(cfg)) == "r.json");
  cubecert_config_destroy(cfg);
  CHECK(cubecert_check_name(0) != nullptr);
  CHECK(cubecert_check_name(16) == nullptr);
  char* t = nullptr;
  CHECK(cubecert_replay_json("{oops", &t, nullptr) == CUBECERT_ERR_PARSE);
  CHECK(cubecert_replay_file("/nonexistent.json", &t, nullptr) == CUBECERT_ERR_IO);
}

TEST_CASE("replay through the C API") {
  Owned text, js;
  REQUIRE(cubecert_replay_json(R"({"kind": "cube_function", "n": 1, "values": [-1, 1]})", &text.p, &js.p) ==
          CUBECERT_OK);
  CHECK(text.str().find("margin = 0.4550") != std::string::npos);
  const json j = json::parse(js.str());
  CHECK(j[0]["values"]["margin"].get<double>() == doctest::Approx(0.455090).epsilon(1e-6));
}

TEST_CASE("report conforms to the schema") {
  cubecert_config* cfg = nullptr;
  REQUIRE(cubecert_config_create(&cfg) == CUBECERT_OK);
  for (const char* c : {"t1", "t3", "cube-theorem", "scan-impr2"}) REQUIRE(cubecert_config_select(cfg, c) == CUBECERT_OK);
  REQUIRE(cubecert_config_set(cfg, "trials", "200") == CUBECERT_OK);
  REQUIRE(cubecert_config_set(cfg, "scan-impr2.x", "0.1,2,20") == CUBECERT_OK);
  REQUIRE(cubecert_config_set(cfg, "scan-impr2.y", "0,2,20") == CUBECERT_OK);
  cubecert_report* rep = nullptr;
  REQUIRE(cubecert_run(cfg, &rep) == CUBECERT_OK);
  CHECK(cubecert_report_pass(rep) == 0);
  CHECK(cubecert_report_exit_code(rep) == 1);
  REQUIRE(cubecert_report_check_count(rep) == 4);
  CHECK(std::string(cubecert_report_check_status(rep, 0)) == "refuted");
  CHECK(cubecert_report_check_status(rep, 4) == nullptr);
  Owned out;
  REQUIRE(cubecert_report_json(rep, &out.p) == CUBECERT_OK);
  std::ifstream in(CUBECERT_SCHEMA_PATH);
  REQUIRE(in);
  validate(json::parse(in), json::parse(out.str()), "$");
  CHECK(cubecert_report_write(rep, "/nonexistent/dir/r.json") == CUBECERT_ERR_IO);
  cubecert_report_destroy(rep);
  cubecert_config_destroy(cfg);
}
