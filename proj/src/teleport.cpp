#include "teletopo/teleport.hpp"

#include <cmath>

#include "teletopo/errors.hpp"
#include "teletopo/random.hpp"

namespace teletopo::teleport {

namespace {

void require_label(PauliLabel label) {
    if (label.high > 1 || label.low > 1) {
        throw InputError("Pauli label bits must be 0 or 1");
    }
}

std::size_t sample_index(std::span<const double> probs, std::uint64_t seed) {
    SeededRng rng(seed);
    const double u = rng.uniform();
    double cdf = 0.0;
    std::size_t last_nonzero = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] > 0.0) {
            last_nonzero = i;
        }
        cdf += probs[i];
        if (u < cdf) {
            return i;
        }
    }
    // Rounding left the cdf just below 1.
    return last_nonzero;
}

}  // namespace

std::string PauliLabel::str() const {
    require_label(*this);
    return {static_cast<char>('0' + high), static_cast<char>('0' + low)};
}

PauliLabel PauliLabel::parse(std::string_view s) {
    if (s.size() != 2 || (s[0] != '0' && s[0] != '1') || (s[1] != '0' && s[1] != '1')) {
        throw ParseError("bad Pauli label \"" + std::string(s) + "\"");
    }
    return {static_cast<std::uint8_t>(s[0] - '0'), static_cast<std::uint8_t>(s[1] - '0')};
}

ComplexMatrix pauli(PauliLabel label) {
    require_label(label);
    switch (label.high * 2 + label.low) {
        case 0:
            return ComplexMatrix::identity(2);
        case 1:
            return {{0.0, 1.0}, {1.0, 0.0}};
        case 2:
            return {{0.0, 1.0}, {-1.0, 0.0}};
        default:
            return {{1.0, 0.0}, {0.0, -1.0}};
    }
}

ComplexMatrix pauli_inverse(PauliLabel label) {
    require_label(label);
    if (label == PauliLabel{1, 0}) {
        return {{0.0, -1.0}, {1.0, 0.0}};
    }
    return pauli(label);
}

ComplexMatrix pauli_word(std::span<const PauliLabel> word) {
    if (word.empty()) {
        throw InputError("pauli_word: empty word");
    }
    ComplexMatrix out = pauli(word.front());
    for (std::size_t i = 1; i < word.size(); ++i) {
        out = kron(out, pauli(word[i]));
    }
    return out;
}

ComplexMatrix pauli_word_inverse(std::span<const PauliLabel> word) {
    if (word.empty()) {
        throw InputError("pauli_word_inverse: empty word");
    }
    ComplexMatrix out = pauli_inverse(word.front());
    for (std::size_t i = 1; i < word.size(); ++i) {
        out = kron(out, pauli_inverse(word[i]));
    }
    return out;
}

PauliWord word_from_index(std::size_t index, std::size_t n) {
    PauliWord word(n);
    for (std::size_t q = 0; q < n; ++q) {
        const std::size_t bits = (index >> (2 * (n - 1 - q))) & 3U;
        word[q] = {static_cast<std::uint8_t>(bits >> 1), static_cast<std::uint8_t>(bits & 1U)};
    }
    return word;
}

std::size_t word_index(std::span<const PauliLabel> word) {
    std::size_t index = 0;
    for (const auto& label : word) {
        require_label(label);
        index = (index << 2) | (std::size_t{label.high} << 1) | label.low;
    }
    return index;
}

bool is_scaled_special_unitary(const ComplexMatrix& m, double tol) {
    if (m.rows() != 2 || m.cols() != 2) {
        throw ShapeError("is_scaled_special_unitary: expected a 2x2 matrix");
    }
    const double lambda = frobenius_norm_squared(m) / 2.0;
    if (lambda == 0.0) {
        return false;
    }
    const auto gram = matmul(dagger(m), m);
    if (max_abs_diff(gram, scale(ComplexMatrix::identity(2), lambda)) > tol * lambda) {
        return false;
    }
    return std::abs(std::abs(det2(m)) - lambda) <= tol * lambda;
}

bool basis_states_orthogonal(const ComplexMatrix& m, double tol) {
    if (m.rows() != 2 || m.cols() != 2) {
        throw ShapeError("basis_states_orthogonal: expected a 2x2 matrix");
    }
    if (frobenius_norm_squared(m) == 0.0) {
        return false;
    }
    std::vector<Bra> unit;
    for (std::size_t w = 0; w < 4; ++w) {
        const auto product = matmul(pauli(word_from_index(w, 1).front()), m);
        unit.push_back(states::measurement_state_from_matrix(product).bra.normalized());
    }
    for (std::size_t i = 0; i < unit.size(); ++i) {
        for (std::size_t j = i + 1; j < unit.size(); ++j) {
            if (std::abs(inner(unit[i], unit[j])) > tol) {
                return false;
            }
        }
    }
    return true;
}

std::vector<BasisElement> measurement_basis_for(const ComplexMatrix& u) {
    if (!u.is_square()) {
        throw ShapeError("measurement_basis_for: gate is not square");
    }
    const std::size_t n = qubits_for_side(u.rows());
    if (n == 0) {
        throw ShapeError("measurement_basis_for: gate must act on at least one qubit");
    }
    if (n > kMaxTeleportQubits) {
        throw SizeError("measurement_basis_for: " + std::to_string(n) + " qubits exceeds the limit of " +
                        std::to_string(kMaxTeleportQubits));
    }
    if (!is_unitary(u, kDefaultTol)) {
        throw PreconditionError("measurement_basis_for: gate is not unitary");
    }
    const std::size_t count = std::size_t{1} << (2 * n);
    std::vector<BasisElement> basis;
    basis.reserve(count);
    for (std::size_t w = 0; w < count; ++w) {
        auto labels = word_from_index(w, n);
        auto ms = states::measurement_state_from_matrix(matmul(pauli_word(labels), u));
        auto unit = ms.bra.normalized();
        basis.push_back({std::move(labels), std::move(ms), std::move(unit)});
    }
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i + 1; j < count; ++j) {
            if (std::abs(inner(basis[i].normalized, basis[j].normalized)) > kBasisOrthogonalityTol) {
                throw ConsistencyError("measurement basis elements " + std::to_string(i) + " and " +
                                       std::to_string(j) + " are not orthogonal");
            }
        }
    }
    return basis;
}

std::string ClassicalMessage::bits() const {
    std::string out;
    if (!success) {
        return out;
    }
    for (const auto& label : labels) {
        out += label.str();
    }
    return out;
}

TeleportSession run_teleportation(std::size_t n, const Ket& psi, const ComplexMatrix& u, std::uint64_t seed,
                                  const TeleportOptions& options) {
    if (n == 0) {
        throw InputError("run_teleportation: n must be positive");
    }
    if (psi.num_qubits() != n) {
        throw ShapeError("run_teleportation: psi has " + std::to_string(psi.num_qubits()) + " qubits, expected " +
                         std::to_string(n));
    }
    if (psi.norm_squared() == 0.0) {
        throw InputError("run_teleportation: psi is zero");
    }
    if (!u.is_square() || u.rows() != psi.dim()) {
        throw ShapeError("run_teleportation: gate does not act on " + std::to_string(n) + " qubits");
    }

    const auto basis = measurement_basis_for(u);
    const Ket joint = tensor(psi, states::delta_state(n).ket);

    std::size_t chosen = 0;
    if (options.forced_outcome) {
        if (options.forced_outcome->size() != n) {
            throw InputError("run_teleportation: forced outcome must have one label per qubit");
        }
        chosen = word_index(*options.forced_outcome);
    } else {
        std::vector<states::MeasurementState> bras;
        bras.reserve(basis.size());
        for (const auto& e : basis) {
            bras.push_back(e.state);
        }
        const auto probs = states::born_distribution(std::span<const states::MeasurementState>(bras), joint);
        chosen = sample_index(probs, seed);
    }
    const auto& element = basis[chosen];

    auto selected = states::post_select(element.state, joint);
    if (!selected.normalized_residual) {
        throw ConsistencyError("run_teleportation: selected outcome has zero amplitude");
    }

    TeleportSession session{n,
                            psi,
                            u,
                            element.labels,
                            ClassicalMessage{element.labels, true},
                            *selected.normalized_residual,
                            std::nullopt,
                            seed,
                            false};
    if (options.inject_failure) {
        session.message = ClassicalMessage{{}, false};
        return session;
    }
    session.bob_corrected = apply(pauli_word_inverse(session.message.labels), session.bob_raw);
    session.verified = states::phase_equal(*session.bob_corrected, apply(u, psi), options.tol);
    return session;
}

std::size_t classical_bit_cost(std::size_t n) {
    if (n == 0) {
        throw InputError("classical_bit_cost: n must be positive");
    }
    return 2 * n;
}

}  // namespace teletopo::teleport
