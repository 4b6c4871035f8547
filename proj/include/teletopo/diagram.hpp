#pragma once

// Planar cup/cap diagrams over the single-qubit wire space.
//
// A diagram is a bottom-to-top list of slices. Each slice is a left-to-right
// row of generators: an identity wire (1 -> 1), a cup (0 -> 2, the column
// with M[a][b] at index 2a+b) or a cap (2 -> 0, the row with M[a][b] at
// index 2a+b). Evaluating composes the slice maps, so a closed diagram gives
// a 1x1 matrix holding its amplitude.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "teletopo/linalg.hpp"

namespace teletopo::diagram {

enum class GeneratorKind { IdWire, Cup, Cap };

struct Generator {
    GeneratorKind kind = GeneratorKind::IdWire;
    // Key into Diagram::matrices; unused for IdWire.
    std::string matrix_name;

    static Generator id() { return {GeneratorKind::IdWire, {}}; }
    static Generator cup(std::string name) { return {GeneratorKind::Cup, std::move(name)}; }
    static Generator cap(std::string name) { return {GeneratorKind::Cap, std::move(name)}; }

    std::size_t inputs() const;
    std::size_t outputs() const;
};

struct Slice {
    std::vector<Generator> generators;

    std::size_t input_arity() const;
    std::size_t output_arity() const;
};

struct Diagram {
    std::vector<Slice> slices;
    std::map<std::string, ComplexMatrix> matrices;
};

struct Diagnostic {
    std::size_t slice = 0;
    std::optional<std::size_t> generator;
    std::string message;

    std::string to_string() const;
};

// nullopt when the diagram is well formed, otherwise the first problem found
// scanning slices bottom to top and generators left to right.
std::optional<Diagnostic> validate(const Diagram& d);

// Linear map from 2^(inputs of the bottom slice) to 2^(outputs of the top
// slice). Throws ValidationError for an invalid diagram.
ComplexMatrix evaluate(const Diagram& d);

// N[a][b] = sum_i cap[a][i] * cup[i][b]: the map obtained by joining a
// minimum to a maximum, indexed (input, output).
ComplexMatrix compose_min_max(const ComplexMatrix& m_cap, const ComplexMatrix& m_cup);

// Both cancellation conditions: cap * cup = I and cup * cap = I within tol.
bool is_topological(const ComplexMatrix& m_cap, const ComplexMatrix& m_cup, double tol = kDefaultTol);

}  // namespace teletopo::diagram
