#include "teletopo/diagram.hpp"

#include <numeric>

#include "teletopo/errors.hpp"

namespace teletopo::diagram {

namespace {

void require_2x2(const ComplexMatrix& m, const char* op) {
    if (m.rows() != 2 || m.cols() != 2) {
        throw ShapeError(std::string(op) + ": expected 2x2 matrices");
    }
}

ComplexMatrix generator_map(const Generator& g, const Diagram& d) {
    switch (g.kind) {
        case GeneratorKind::IdWire:
            return ComplexMatrix::identity(2);
        case GeneratorKind::Cup: {
            const auto& m = d.matrices.at(g.matrix_name);
            return {4, 1, std::vector<Complex>(m.entries().begin(), m.entries().end())};
        }
        case GeneratorKind::Cap: {
            const auto& m = d.matrices.at(g.matrix_name);
            return {1, 4, std::vector<Complex>(m.entries().begin(), m.entries().end())};
        }
    }
    throw ConsistencyError("unknown generator kind");
}

const char* kind_name(GeneratorKind k) {
    switch (k) {
        case GeneratorKind::IdWire:
            return "id";
        case GeneratorKind::Cup:
            return "cup";
        case GeneratorKind::Cap:
            return "cap";
    }
    return "?";
}

}  // namespace

std::size_t Generator::inputs() const {
    return kind == GeneratorKind::IdWire ? 1 : kind == GeneratorKind::Cap ? 2 : 0;
}

std::size_t Generator::outputs() const {
    return kind == GeneratorKind::IdWire ? 1 : kind == GeneratorKind::Cup ? 2 : 0;
}

std::size_t Slice::input_arity() const {
    return std::accumulate(generators.begin(), generators.end(), std::size_t{0},
                           [](std::size_t n, const Generator& g) { return n + g.inputs(); });
}

std::size_t Slice::output_arity() const {
    return std::accumulate(generators.begin(), generators.end(), std::size_t{0},
                           [](std::size_t n, const Generator& g) { return n + g.outputs(); });
}

std::string Diagnostic::to_string() const {
    std::string s = "slice " + std::to_string(slice);
    if (generator) {
        s += ", generator " + std::to_string(*generator);
    }
    return s + ": " + message;
}

std::optional<Diagnostic> validate(const Diagram& d) {
    if (d.slices.empty()) {
        return Diagnostic{0, std::nullopt, "diagram has no slices"};
    }
    for (std::size_t k = 0; k < d.slices.size(); ++k) {
        const auto& slice = d.slices[k];
        for (std::size_t g = 0; g < slice.generators.size(); ++g) {
            const auto& gen = slice.generators[g];
            if (gen.kind == GeneratorKind::IdWire) {
                continue;
            }
            auto it = d.matrices.find(gen.matrix_name);
            if (it == d.matrices.end()) {
                return Diagnostic{k, g,
                                  std::string(kind_name(gen.kind)) + " references unknown matrix \"" +
                                      gen.matrix_name + "\""};
            }
            if (it->second.rows() != 2 || it->second.cols() != 2) {
                return Diagnostic{k, g, "matrix \"" + gen.matrix_name + "\" is not 2x2"};
            }
        }
        if (k > 0) {
            const std::size_t below = d.slices[k - 1].output_arity();
            const std::size_t here = slice.input_arity();
            if (below != here) {
                return Diagnostic{k, std::nullopt,
                                  "arity mismatch: slice " + std::to_string(k - 1) + " outputs " +
                                      std::to_string(below) + " wires but slice " + std::to_string(k) +
                                      " consumes " + std::to_string(here)};
            }
        }
    }
    return std::nullopt;
}

ComplexMatrix evaluate(const Diagram& d) {
    if (auto diag = validate(d)) {
        throw ValidationError(diag->to_string());
    }
    const std::size_t max_wires = qubits_for_side(kMaxMatrixSide);
    for (const auto& slice : d.slices) {
        if (slice.input_arity() > max_wires || slice.output_arity() > max_wires) {
            throw SizeError("diagram exceeds " + std::to_string(max_wires) + " wires");
        }
    }
    auto current = ComplexMatrix::identity(std::size_t{1} << d.slices.front().input_arity());
    for (const auto& slice : d.slices) {
        ComplexMatrix layer = ComplexMatrix::identity(1);
        for (const auto& g : slice.generators) {
            layer = kron(layer, generator_map(g, d));
        }
        current = matmul(layer, current);
    }
    return current;
}

ComplexMatrix compose_min_max(const ComplexMatrix& m_cap, const ComplexMatrix& m_cup) {
    require_2x2(m_cap, "compose_min_max");
    require_2x2(m_cup, "compose_min_max");
    return matmul(m_cap, m_cup);
}

bool is_topological(const ComplexMatrix& m_cap, const ComplexMatrix& m_cup, double tol) {
    require_2x2(m_cap, "is_topological");
    require_2x2(m_cup, "is_topological");
    const auto id = ComplexMatrix::identity(2);
    return approx_eq(matmul(m_cap, m_cup), id, tol) && approx_eq(matmul(m_cup, m_cap), id, tol);
}

}  // namespace teletopo::diagram
