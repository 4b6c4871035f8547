#pragma once

// JSON file formats.
//
//   matrix:   {"rows": R, "cols": C, "entries": [[re, im], ...]}   row-major
//   ket:      {"qubits": n, "amplitudes": [[re, im], ...]}
//   prepared: {"label": "...", "ket": <ket>}
//   diagram:  {"matrices": {"name": <matrix>},
//              "slices": [[{"g":"id"} | {"g":"cup","m":"name"} | {"g":"cap","m":"name"}, ...], ...]}
//             bottom slice first
//
// Readers throw ParseError on a structural problem, a wrong length or a
// non-finite number.

#include <string>

#include <json.hpp>

#include "teletopo/diagram.hpp"
#include "teletopo/linalg.hpp"
#include "teletopo/states.hpp"
#include "teletopo/teleport.hpp"
#include "teletopo/trace_estimator.hpp"

namespace teletopo::json_io {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

OrderedJson complex_to_json(Complex z);
OrderedJson matrix_to_json(const ComplexMatrix& m);
OrderedJson ket_to_json(const Ket& k);
OrderedJson prepared_state_to_json(const states::PreparedState& s);
OrderedJson diagram_to_json(const diagram::Diagram& d);
OrderedJson session_to_json(const teleport::TeleportSession& s);
OrderedJson trace_report_to_json(const trace_estimator::TraceEstimate& e);

ComplexMatrix matrix_from_json(const Json& j);
Ket ket_from_json(const Json& j);
states::PreparedState prepared_state_from_json(const Json& j);
diagram::Diagram diagram_from_json(const Json& j);

// Throws ParseError on malformed text.
Json parse(const std::string& text);

}  // namespace teletopo::json_io
