/*
   Copyright 2026 The chaincodes Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "chaincodes/codes.hpp"
#include "chaincodes/decomposition.hpp"

namespace chaincodes::io {

using Json = nlohmann::ordered_json;

// Text forms. Polynomials print highest degree first, e.g. "x^3 + x + 1";
// R coefficients that are sums are parenthesized, e.g. "(u^2+1)*x^5 + 1".
// Field elements print as enc integers unless the display asks for y-polynomials.
std::string format_poly(const Poly& a, FieldDisplay display = FieldDisplay::Integer);
std::string format_ambient(const AmbientElement& a, FieldDisplay display = FieldDisplay::Integer);

// Parsers accept the integer display only; whitespace is ignored and
// repeated powers are summed.
Poly parse_poly(const FieldPtr& field, std::string_view text);
RingElement parse_ring(const Field& field, std::string_view text);
AmbientElement parse_ambient(const AmbientPtr& ambient, std::string_view text);

/// {"coeffs": [...]} in ascending degree.
Json to_json(const Poly& a);
Json to_json(const RingElement& a);
Json to_json(const AmbientElement& a);
Json to_json(const CodeRecord& rec);
Json field_to_json(const Field& field);
/// tau is written 1-based, matching the text output.
Json to_json(const Decomposition& d);

/// Rebuilds a Decomposition from its dump without recomputing anything;
/// pair with verify_decomposition to recheck it.
Decomposition decomposition_from_json(const Json& j);

}  // namespace chaincodes::io
