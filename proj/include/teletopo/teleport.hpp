#pragma once

// Gate teleportation over the modified Pauli basis.
//
// The modified Pauli matrices are I, X = [[0,1],[1,0]], Y = [[0,1],[-1,0]]
// (i times sigma_2, all entries real) and Z = [[1,0],[0,-1]], labelled by the
// bit pairs 00, 01, 10, 11. For a unitary U on n qubits, the 4^n measurement
// states built from T_L * U (T_L a Pauli word) form an orthogonal basis of
// the 2n measured qubits. Post-selecting outcome L on |psi>|delta> leaves
// T_L U |psi> with Bob, who undoes T_L once Alice sends him the 2n bits of L.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "teletopo/linalg.hpp"
#include "teletopo/states.hpp"

namespace teletopo::teleport {

// Largest register the protocol engine accepts; the basis holds 4^n bras of
// length 4^n.
inline constexpr std::size_t kMaxTeleportQubits = 5;
inline constexpr double kBasisOrthogonalityTol = 1e-8;

struct PauliLabel {
    std::uint8_t high = 0;
    std::uint8_t low = 0;

    // "00", "01", "10" or "11".
    std::string str() const;
    // Throws ParseError for anything else.
    static PauliLabel parse(std::string_view s);

    friend auto operator<=>(const PauliLabel&, const PauliLabel&) = default;
};

using PauliWord = std::vector<PauliLabel>;

ComplexMatrix pauli(PauliLabel label);
// Exact inverse; -Y for Y, the label's own matrix otherwise.
ComplexMatrix pauli_inverse(PauliLabel label);

// Kronecker product of the per-qubit matrices, first label outermost.
ComplexMatrix pauli_word(std::span<const PauliLabel> word);
ComplexMatrix pauli_word_inverse(std::span<const PauliLabel> word);

// Word number `index` of length n in lexicographic label order; the first
// label takes the two most significant bits.
PauliWord word_from_index(std::size_t index, std::size_t n);
std::size_t word_index(std::span<const PauliLabel> word);

// True iff m is a nonzero complex multiple of [[z, w], [-conj(w), conj(z)]]:
// m^dagger m = lambda I and |det m| = lambda, lambda = |m|_F^2 / 2, both
// within tol * lambda.
bool is_scaled_special_unitary(const ComplexMatrix& m, double tol = kDefaultTol);

// Pairwise orthogonality (|<i|j>| <= tol after normalization) of the
// measurement states for M, XM, YM and ZM. False for the zero matrix.
bool basis_states_orthogonal(const ComplexMatrix& m, double tol = kBasisOrthogonalityTol);

struct BasisElement {
    PauliWord labels;
    states::MeasurementState state;
    Bra normalized;
};

// One element per Pauli word, in word_from_index order. Throws
// PreconditionError if u is not unitary within 1e-10 and ConsistencyError if
// the result fails the orthogonality check.
std::vector<BasisElement> measurement_basis_for(const ComplexMatrix& u);

struct ClassicalMessage {
    // One label per qubit when success; empty on failure.
    PauliWord labels;
    bool success = false;

    // 2n characters of '0'/'1'; empty on failure.
    std::string bits() const;
};

struct TeleportSession {
    std::size_t n = 0;
    Ket psi;
    ComplexMatrix gate;
    PauliWord outcome;
    ClassicalMessage message;
    Ket bob_raw;
    // Empty when the message reports failure.
    std::optional<Ket> bob_corrected;
    std::uint64_t rng_seed = 0;
    // bob_corrected is phase-equal to gate * psi.
    bool verified = false;
};

struct TeleportOptions {
    // Skip sampling and post-select this outcome instead.
    std::optional<PauliWord> forced_outcome;
    // Send the failure message; Bob applies no correction.
    bool inject_failure = false;
    double tol = kDefaultTol;
};

TeleportSession run_teleportation(std::size_t n, const Ket& psi, const ComplexMatrix& u, std::uint64_t seed,
                                  const TeleportOptions& options = {});

// Bits needed to name one of the 4^n outcomes.
std::size_t classical_bit_cost(std::size_t n);

}  // namespace teletopo::teleport
