#include "teletopo/states.hpp"

#include <algorithm>
#include <cmath>

#include "teletopo/errors.hpp"

namespace teletopo::states {

namespace {

constexpr double kOrthogonalityTol = 1e-8;

std::size_t register_qubits(const ComplexMatrix& m, const char* op) {
    if (!m.is_square()) {
        throw ShapeError(std::string(op) + ": matrix is not square");
    }
    return qubits_for_side(m.rows());
}

}  // namespace

PreparedState delta_state(std::size_t n) {
    if (n == 0) {
        throw InputError("delta_state: n must be positive");
    }
    if (2 * n > kMaxQubits) {
        throw SizeError("delta_state: 2n = " + std::to_string(2 * n) + " qubits exceeds the cap");
    }
    const std::size_t side = std::size_t{1} << n;
    std::vector<Complex> amps(side * side);
    for (std::size_t alpha = 0; alpha < side; ++alpha) {
        amps[alpha * side + alpha] = 1.0;
    }
    return {Ket(2 * n, std::move(amps)), "delta(" + std::to_string(n) + ")"};
}

PreparedState cup_state_from_matrix(const ComplexMatrix& m) {
    const std::size_t n = register_qubits(m, "cup_state_from_matrix");
    return {Ket(2 * n, std::vector<Complex>(m.entries().begin(), m.entries().end())), "cup"};
}

Bra cap_state_from_matrix(const ComplexMatrix& m) {
    const std::size_t n = register_qubits(m, "cap_state_from_matrix");
    return {2 * n, std::vector<Complex>(m.entries().begin(), m.entries().end())};
}

MeasurementState measurement_state_from_matrix(const ComplexMatrix& m) {
    register_qubits(m, "measurement_state_from_matrix");
    return {cap_state_from_matrix(transpose(m)), m};
}

PostSelectionResult post_select(const Bra& bra, const Ket& state) {
    if (bra.num_qubits() > state.num_qubits()) {
        throw ShapeError("post_select: bra covers " + std::to_string(bra.num_qubits()) + " qubits but state has " +
                         std::to_string(state.num_qubits()));
    }
    const double bra_norm2 = bra.norm_squared();
    const double state_norm2 = state.norm_squared();
    if (bra_norm2 == 0.0 || state_norm2 == 0.0) {
        throw InputError("post_select: zero bra or zero state");
    }
    const std::size_t k = state.num_qubits() - bra.num_qubits();
    const std::size_t tail = std::size_t{1} << k;
    std::vector<Complex> out(tail);
    for (std::size_t i = 0; i < bra.dim(); ++i) {
        const Complex c = bra[i];
        if (c == Complex{}) {
            continue;
        }
        for (std::size_t j = 0; j < tail; ++j) {
            out[j] += c * state[i * tail + j];
        }
    }
    PostSelectionResult result{std::nullopt, Ket(k, std::move(out)), std::nullopt, 0.0};
    if (k == 0) {
        result.amplitude = result.residual[0];
    }
    const double raw2 = result.residual.norm_squared();
    if (raw2 > 0.0) {
        result.normalized_residual = result.residual.normalized();
        result.success_probability = std::min(1.0, raw2 / (bra_norm2 * state_norm2));
    }
    return result;
}

PostSelectionResult post_select(const MeasurementState& ms, const Ket& state) { return post_select(ms.bra, state); }

std::vector<double> born_distribution(std::span<const Bra> basis, const Ket& state) {
    if (basis.empty()) {
        throw BasisError("born_distribution: empty basis");
    }
    const std::size_t measured = basis.front().num_qubits();
    std::vector<Bra> unit;
    unit.reserve(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].num_qubits() != measured) {
            throw BasisError("born_distribution: basis element " + std::to_string(i) + " has a different size");
        }
        if (basis[i].norm_squared() == 0.0) {
            throw BasisError("born_distribution: basis element " + std::to_string(i) + " is zero");
        }
        unit.push_back(basis[i].normalized());
    }
    if (unit.size() != (std::size_t{1} << measured)) {
        throw BasisError("born_distribution: " + std::to_string(unit.size()) + " elements cannot span 2^" +
                         std::to_string(measured) + " dimensions");
    }
    for (std::size_t i = 0; i < unit.size(); ++i) {
        for (std::size_t j = i + 1; j < unit.size(); ++j) {
            if (std::abs(inner(unit[i], unit[j])) > kOrthogonalityTol) {
                throw BasisError("born_distribution: basis elements " + std::to_string(i) + " and " +
                                 std::to_string(j) + " are not orthogonal");
            }
        }
    }
    const Ket psi = state.normalized();
    std::vector<double> probs;
    probs.reserve(unit.size());
    for (const auto& b : unit) {
        probs.push_back(post_select(b, psi).residual.norm_squared());
    }
    return probs;
}

std::vector<double> born_distribution(std::span<const MeasurementState> basis, const Ket& state) {
    std::vector<Bra> bras;
    bras.reserve(basis.size());
    for (const auto& ms : basis) {
        bras.push_back(ms.bra);
    }
    return born_distribution(std::span<const Bra>(bras), state);
}

bool is_entangled_two_qubit(const Ket& state, double tol) {
    if (state.num_qubits() != 2) {
        throw ShapeError("is_entangled_two_qubit: expected a 2-qubit state");
    }
    const double norm2 = state.norm_squared();
    if (norm2 == 0.0) {
        throw InputError("is_entangled_two_qubit: zero state");
    }
    const ComplexMatrix m{{state[0], state[1]}, {state[2], state[3]}};
    return std::abs(det2(m)) > tol * norm2;
}

bool phase_equal(const Ket& a, const Ket& b, double tol) {
    if (a.num_qubits() != b.num_qubits()) {
        throw ShapeError("phase_equal: qubit counts differ");
    }
    if (a.norm_squared() == 0.0 || b.norm_squared() == 0.0) {
        throw InputError("phase_equal: zero state");
    }
    return std::abs(inner(a.normalized(), b.normalized())) >= 1.0 - tol;
}

}  // namespace teletopo::states
