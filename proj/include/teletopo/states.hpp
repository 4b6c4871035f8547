#pragma once

// Preparation and measurement states over qubit registers, post-selection on
// a prefix of tensor factors, and Born-rule probabilities.
//
// Raw residuals and amplitudes are unnormalized and follow the plain
// index contraction. Probabilities are always taken after normalizing both
// the measurement bra and the input state.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "teletopo/linalg.hpp"

namespace teletopo::states {

struct PreparedState {
    Ket ket;
    std::string label;
};

// Bra over 2n qubits built from a 2^n x 2^n operator M, laid out so that
// post-selecting it on |psi>|delta> leaves M|psi>: the coefficient of
// <alpha|<beta| is M[beta][alpha].
struct MeasurementState {
    Bra bra;
    ComplexMatrix source_matrix;
};

struct PostSelectionResult {
    // Set only when the bra covers the whole state (nothing left over).
    std::optional<Complex> amplitude;
    Ket residual;
    // Empty when the raw residual is zero.
    std::optional<Ket> normalized_residual;
    double success_probability = 0.0;
};

// |delta> = sum_alpha |alpha, alpha> over 2n qubits, unnormalized.
PreparedState delta_state(std::size_t n);

// |Cup> = sum M[a][b] |a>|b>.
PreparedState cup_state_from_matrix(const ComplexMatrix& m);

// <Cap| = sum M[a][b] <a|<b|, coefficients taken as written.
Bra cap_state_from_matrix(const ComplexMatrix& m);

MeasurementState measurement_state_from_matrix(const ComplexMatrix& m);

// residual[j] = sum_i bra[i] * state[i * 2^k + j] where k is the number of
// qubits the bra leaves unmeasured.
PostSelectionResult post_select(const Bra& bra, const Ket& state);
PostSelectionResult post_select(const MeasurementState& ms, const Ket& state);

// Outcome probabilities for a rank-1 projective measurement on the leading
// qubits. The normalized bras must be pairwise orthogonal (|<i|j>| <= 1e-8)
// and complete; otherwise BasisError.
std::vector<double> born_distribution(std::span<const Bra> basis, const Ket& state);
std::vector<double> born_distribution(std::span<const MeasurementState> basis, const Ket& state);

// True iff the 2x2 coefficient matrix of the state is invertible, i.e.
// |det| > tol * <psi|psi>.
bool is_entangled_two_qubit(const Ket& state, double tol = kDefaultTol);

// Equal up to global phase: |<a^|b^>| >= 1 - tol.
bool phase_equal(const Ket& a, const Ket& b, double tol = kDefaultTol);

}  // namespace teletopo::states
