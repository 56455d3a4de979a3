/*
 * Copyright (C) 2026 mvl contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <json.hpp>
#include <string>

#include "mvl/argument.hpp"
#include "mvl/kernels.hpp"
#include "mvl/logiclib.hpp"
#include "mvl/rank.hpp"
#include "mvl/reduce.hpp"
#include "mvl/semantics.hpp"
#include "mvl/structure.hpp"

namespace mvl {

using Json = nlohmann::ordered_json;

// Two-space indent plus a trailing newline; the on-disk form of every document.
std::string dump(const Json& j);
Json load_json_file(const std::string& path);   // IoError, ParseError
void write_text_file(const std::string& path, const std::string& text);

Json value_set_json(ValueSet s);
Json relation_to_json(const IntersectiveRelation& r);
IntersectiveRelation relation_from_json(const Json& j, int value_count);

// {"values", "labels", "connectives", "relation", "worlds"}; unknown keys are ignored on read.
Json semantics_to_json(const Semantics& s);
Semantics semantics_from_json(const Json& j);

// {"formulas", "signature", "presentation": "maximal-failing" | "explicit", "failing" | "holds"}.
Json table_to_json(const ArgumentTable& t);
ArgumentTable table_from_json(const Json& j);

Json report_to_json(const PropertyReport& r);
Json agreement_to_json(const AgreementResult& a, const std::vector<Formula>& formulas);
Json reduction_to_json(const ReductionResult& r);
Json certificate_to_json(const RankCertificate& c);
// The semantics object with name, description, expectations and, when present, the stored verdicts.
Json builtin_to_json(const BuiltinSpec& b);

}  // namespace mvl
