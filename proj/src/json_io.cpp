#include "teletopo/json_io.hpp"

#include <cmath>

#include "teletopo/errors.hpp"

namespace teletopo::json_io {

namespace {

const Json& field(const Json& j, const char* key, const char* what) {
    if (!j.is_object()) {
        throw ParseError(std::string(what) + ": expected a JSON object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        throw ParseError(std::string(what) + ": missing \"" + key + "\"");
    }
    return *it;
}

std::size_t count_field(const Json& j, const char* key, const char* what) {
    const Json& v = field(j, key, what);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw ParseError(std::string(what) + ": \"" + key + "\" must be a non-negative integer");
    }
    return v.get<std::size_t>();
}

Complex complex_from_json(const Json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError(std::string(what) + ": each entry must be [re, im]");
    }
    const double re = j[0].get<double>();
    const double im = j[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) {
        throw ParseError(std::string(what) + ": non-finite number");
    }
    return {re, im};
}

std::vector<Complex> complex_list(const Json& j, std::size_t expected, const char* what) {
    if (!j.is_array()) {
        throw ParseError(std::string(what) + ": expected an array of [re, im]");
    }
    if (j.size() != expected) {
        throw ParseError(std::string(what) + ": expected " + std::to_string(expected) + " entries, got " +
                         std::to_string(j.size()));
    }
    std::vector<Complex> out;
    out.reserve(expected);
    for (const auto& e : j) {
        out.push_back(complex_from_json(e, what));
    }
    return out;
}

OrderedJson complex_array(std::span<const Complex> values) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& z : values) {
        arr.push_back(complex_to_json(z));
    }
    return arr;
}

}  // namespace

OrderedJson complex_to_json(Complex z) { return OrderedJson::array({z.real(), z.imag()}); }

OrderedJson matrix_to_json(const ComplexMatrix& m) {
    OrderedJson j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = complex_array(m.entries());
    return j;
}

OrderedJson ket_to_json(const Ket& k) {
    OrderedJson j;
    j["qubits"] = k.num_qubits();
    j["amplitudes"] = complex_array(k.amplitudes());
    return j;
}

OrderedJson prepared_state_to_json(const states::PreparedState& s) {
    OrderedJson j;
    j["label"] = s.label;
    j["ket"] = ket_to_json(s.ket);
    return j;
}

OrderedJson diagram_to_json(const diagram::Diagram& d) {
    OrderedJson j;
    j["matrices"] = OrderedJson::object();
    for (const auto& [name, m] : d.matrices) {
        j["matrices"][name] = matrix_to_json(m);
    }
    j["slices"] = OrderedJson::array();
    for (const auto& slice : d.slices) {
        OrderedJson row = OrderedJson::array();
        for (const auto& g : slice.generators) {
            switch (g.kind) {
                case diagram::GeneratorKind::IdWire:
                    row.push_back({{"g", "id"}});
                    break;
                case diagram::GeneratorKind::Cup:
                    row.push_back({{"g", "cup"}, {"m", g.matrix_name}});
                    break;
                case diagram::GeneratorKind::Cap:
                    row.push_back({{"g", "cap"}, {"m", g.matrix_name}});
                    break;
            }
        }
        j["slices"].push_back(std::move(row));
    }
    return j;
}

OrderedJson session_to_json(const teleport::TeleportSession& s) {
    OrderedJson j;
    j["n"] = s.n;
    j["seed"] = s.rng_seed;
    j["psi"] = ket_to_json(s.psi);
    j["gate"] = matrix_to_json(s.gate);
    OrderedJson outcome = OrderedJson::array();
    for (const auto& label : s.outcome) {
        outcome.push_back(label.str());
    }
    j["outcome"] = std::move(outcome);
    j["message"] = {{"success", s.message.success}, {"bits", s.message.bits()}};
    j["bob_raw"] = ket_to_json(s.bob_raw);
    j["bob_corrected"] = s.bob_corrected ? ket_to_json(*s.bob_corrected) : OrderedJson(nullptr);
    j["verified"] = s.verified;
    return j;
}

OrderedJson trace_report_to_json(const trace_estimator::TraceEstimate& e) {
    OrderedJson j;
    j["n"] = e.n;
    j["shots"] = e.shots;
    j["successes"] = e.successes;
    j["estimate"] = e.estimate;
    j["std_error"] = e.std_error;
    j["exact_abs_trace"] = e.exact_abs_trace;
    j["seed"] = e.seed;
    return j;
}

ComplexMatrix matrix_from_json(const Json& j) {
    const std::size_t rows = count_field(j, "rows", "matrix");
    const std::size_t cols = count_field(j, "cols", "matrix");
    if (rows == 0 || cols == 0) {
        throw ParseError("matrix: rows and cols must be positive");
    }
    if (rows > kMaxMatrixSide || cols > kMaxMatrixSide) {
        throw ParseError("matrix: side exceeds " + std::to_string(kMaxMatrixSide));
    }
    return {rows, cols, complex_list(field(j, "entries", "matrix"), rows * cols, "matrix")};
}

Ket ket_from_json(const Json& j) {
    const std::size_t qubits = count_field(j, "qubits", "ket");
    if (qubits > kMaxQubits) {
        throw ParseError("ket: more than " + std::to_string(kMaxQubits) + " qubits");
    }
    return {qubits, complex_list(field(j, "amplitudes", "ket"), std::size_t{1} << qubits, "ket")};
}

states::PreparedState prepared_state_from_json(const Json& j) {
    const Json& label = field(j, "label", "prepared state");
    if (!label.is_string() || label.get<std::string>().empty()) {
        throw ParseError("prepared state: label must be a non-empty string");
    }
    return {ket_from_json(field(j, "ket", "prepared state")), label.get<std::string>()};
}

diagram::Diagram diagram_from_json(const Json& j) {
    diagram::Diagram d;
    const Json& matrices = field(j, "matrices", "diagram");
    if (!matrices.is_object()) {
        throw ParseError("diagram: \"matrices\" must be an object");
    }
    for (const auto& [name, m] : matrices.items()) {
        d.matrices.emplace(name, matrix_from_json(m));
    }
    const Json& slices = field(j, "slices", "diagram");
    if (!slices.is_array()) {
        throw ParseError("diagram: \"slices\" must be an array");
    }
    for (std::size_t k = 0; k < slices.size(); ++k) {
        if (!slices[k].is_array()) {
            throw ParseError("diagram: slice " + std::to_string(k) + " must be an array");
        }
        diagram::Slice slice;
        for (const auto& g : slices[k]) {
            const Json& kind = field(g, "g", "generator");
            if (!kind.is_string()) {
                throw ParseError("generator: \"g\" must be a string");
            }
            const auto s = kind.get<std::string>();
            if (s == "id") {
                slice.generators.push_back(diagram::Generator::id());
                continue;
            }
            if (s != "cup" && s != "cap") {
                throw ParseError("generator: unknown kind \"" + s + "\" in slice " + std::to_string(k));
            }
            const Json& name = field(g, "m", "generator");
            if (!name.is_string()) {
                throw ParseError("generator: \"m\" must be a string");
            }
            slice.generators.push_back(s == "cup" ? diagram::Generator::cup(name.get<std::string>())
                                                  : diagram::Generator::cap(name.get<std::string>()));
        }
        d.slices.push_back(std::move(slice));
    }
    return d;
}

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace teletopo::json_io
