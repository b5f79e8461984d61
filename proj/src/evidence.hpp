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

#pragma once

// Evidence checkers shared by the lemma verifiers and revalidate(). Each
// evidence object has a "kind" and the data needed to decide it.

#include <string>

#include <json.hpp>

#include "cubecert/poly.hpp"
#include "cubecert/proof.hpp"

namespace cubecert::detail {

struct CheckResult {
  Status status = Status::kUndecided;
  nlohmann::json detail = nlohmann::json::object();
};

CheckResult run_evidence(const nlohmann::json& evidence);

// Evaluates evidence, stores the outcome under "result" and appends the claim.
void add_checked(LemmaCertificate& cert, const std::string& name, nlohmann::json evidence);

// Cached build_P() of the printed system.
const CubicInX& printed_P();

// Expression text as written by Expr::to_string.
Expr parse_expr(std::string_view text);

nlohmann::json point_json(const std::map<std::string, Rational>& point);
std::map<std::string, Rational> point_from_json(const nlohmann::json& j);

}  // namespace cubecert::detail
