#include "teletopo/trace_estimator.hpp"

#include <cmath>

#include "teletopo/errors.hpp"
#include "teletopo/random.hpp"
#include "teletopo/states.hpp"

namespace teletopo::trace_estimator {

namespace {

std::size_t gate_qubits(const ComplexMatrix& u) {
    if (!u.is_square()) {
        throw ShapeError("trace estimator: gate is not square");
    }
    const std::size_t n = qubits_for_side(u.rows());
    if (n == 0) {
        throw ShapeError("trace estimator: gate must act on at least one qubit");
    }
    return n;
}

void require_unitary(const ComplexMatrix& u) {
    if (!is_unitary(u, kDefaultTol)) {
        throw PreconditionError("trace estimator: gate is not unitary");
    }
}

}  // namespace

Complex exact_trace_amplitude(const ComplexMatrix& u) {
    const std::size_t n = gate_qubits(u);
    const Ket delta = states::delta_state(n).ket;
    return *states::post_select(dual(delta), apply_on_prefix(u, delta)).amplitude;
}

double success_probability(const ComplexMatrix& u) {
    const std::size_t n = gate_qubits(u);
    require_unitary(u);
    const Ket delta = states::delta_state(n).ket;
    // post_select normalizes both sides before forming the probability.
    return states::post_select(dual(delta), apply_on_prefix(u, delta)).success_probability;
}

TraceEstimate estimate_abs_trace(const ComplexMatrix& u, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw InputError("estimate_abs_trace: shots must be positive");
    }
    const std::size_t n = gate_qubits(u);
    const double p = success_probability(u);

    SeededRng rng(seed);
    std::uint64_t successes = 0;
    for (std::uint64_t t = 0; t < shots; ++t) {
        if (rng.uniform() < p) {
            ++successes;
        }
    }

    const double dim = std::ldexp(1.0, static_cast<int>(n));
    const double trials = static_cast<double>(shots);
    const double p_hat = static_cast<double>(successes) / trials;

    TraceEstimate out;
    out.n = n;
    out.shots = shots;
    out.successes = successes;
    out.estimate = dim * std::sqrt(p_hat);
    out.exact_abs_trace = std::abs(trace(u));
    out.seed = seed;
    if (successes == 0) {
        out.std_error = dim * std::sqrt(3.0 / trials);
        out.std_error_is_upper_bound = true;
    } else {
        out.std_error = dim * std::sqrt(p_hat * (1.0 - p_hat) / trials) / (2.0 * std::sqrt(p_hat));
    }
    return out;
}

}  // namespace teletopo::trace_estimator
