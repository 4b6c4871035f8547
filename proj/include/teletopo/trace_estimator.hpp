#pragma once

// |tr U| from the preparation |delta>, gate U (x) I, measurement <delta|
// process.
//
// With |delta> unnormalized the process amplitude is tr(U) itself. With
// |delta> normalized on both sides it is tr(U) / 2^n, so one trial succeeds
// with probability |tr U|^2 / 4^n and |tr U| = 2^n sqrt(p).

#include <cstddef>
#include <cstdint>

#include "teletopo/linalg.hpp"

namespace teletopo::trace_estimator {

struct TraceEstimate {
    std::size_t n = 0;
    std::uint64_t shots = 0;
    std::uint64_t successes = 0;
    double estimate = 0.0;
    double std_error = 0.0;
    // No successes: std_error holds the 95% upper bound 2^n sqrt(3 / shots).
    bool std_error_is_upper_bound = false;
    double exact_abs_trace = 0.0;
    std::uint64_t seed = 0;
};

// <delta| (u (x) I) |delta> with unnormalized delta; equals tr(u). u need not
// be unitary.
Complex exact_trace_amplitude(const ComplexMatrix& u);

// |tr u|^2 / 4^n. Throws PreconditionError unless u is unitary within 1e-10.
double success_probability(const ComplexMatrix& u);

// `shots` Bernoulli trials at success_probability(u) drawn from one
// SeededRng(seed) stream. std_error is the delta-method propagation of the
// binomial error through 2^n sqrt(p).
TraceEstimate estimate_abs_trace(const ComplexMatrix& u, std::uint64_t shots, std::uint64_t seed);

}  // namespace teletopo::trace_estimator
