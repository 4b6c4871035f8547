// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "teletopo/diagram.hpp"
#include "teletopo/errors.hpp"
#include "teletopo/linalg.hpp"
#include "teletopo/states.hpp"
#include "teletopo/teleport.hpp"
#include "teletopo/trace_estimator.hpp"
#include "test_support.hpp"

using namespace teletopo;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(3);
    s << x;
    return s.str();
}

Outcome circle_amplitude() {
    const auto start = Clock::now();
    fixtures::Gen gen(1001);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = gen.matrix(2, 2);
        const auto b = gen.matrix(2, 2);
        const auto value = diagram::evaluate(fixtures::circle(a, b));
        worst = std::max(worst, std::abs(value(0, 0) - fixtures::circle_oracle(a, b)));
    }
    const double t = seconds_since(start);
    return {worst <= 1e-12 && t < 1.0, "max error " + fmt(worst) + ", " + fmt(t) + " s"};
}

Outcome zigzag() {
    fixtures::Gen gen(1002);
    const auto id = ComplexMatrix::identity(2);
    double worst = 0.0;
    int topological = 0;
    int flipped = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = gen.invertible2();
        const auto cap = inverse2(a);
        worst = std::max(worst, max_abs_diff(diagram::evaluate(fixtures::zigzag(a, cap)), id));
        topological += diagram::is_topological(cap, a);
        const std::size_t k = gen.index(4);
        std::vector<Complex> e(cap.entries().begin(), cap.entries().end());
        e[k] += 1e-3;
        flipped += !diagram::is_topological(ComplexMatrix(2, 2, e), a);
    }
    return {worst <= 1e-10 && topological == 100 && flipped == 100,
            "max error " + fmt(worst) + ", topological " + std::to_string(topological) + "/100, perturbed rejected " +
                std::to_string(flipped) + "/100"};
}

Outcome delta_norm() {
    bool ok = true;
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto d = states::delta_state(n).ket;
        const Complex v = pair(dual(d), d);
        ok = ok && v == Complex(std::ldexp(1.0, static_cast<int>(n)), 0.0);
    }
    return {ok, "n = 1..8 exact"};
}

Outcome teleportation_lemma() {
    const auto start = Clock::now();
    fixtures::Gen gen(1004);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 3;
        const auto m = gen.matrix(std::size_t{1} << n, std::size_t{1} << n);
        const auto psi = gen.ket(n);
        const auto r = states::post_select(states::measurement_state_from_matrix(m),
                                           tensor(psi, states::delta_state(n).ket));
        worst = std::max(worst, max_abs_diff(r.residual, apply(m, psi)));
    }
    const double t = seconds_since(start);
    return {worst <= 1e-10 && t < 5.0, "max error " + fmt(worst) + ", " + fmt(t) + " s"};
}

Outcome basis_lemma() {
    fixtures::Gen gen(1005);
    std::vector<ComplexMatrix> cases = {
        ComplexMatrix::identity(2),
        {{0.0, 1.0}, {1.0, 0.0}},
        {{0.0, 1.0}, {-1.0, 0.0}},
        {{1.0, 0.0}, {0.0, -1.0}},
        {{1.0, 2.0}, {2.0, 4.0}},
        {{1.0, 2.0}, {0.0, 3.0}},
        {{Complex(2, 1), 0.5}, {0.0, Complex(-1, 3)}},
    };
    for (int i = 0; i < 1000; ++i) {
        cases.push_back(gen.matrix(2, 2));
    }
    for (int i = 0; i < 100; ++i) {
        // Scaled special unitaries and singular matrices, both rare under plain sampling.
        const Complex z = gen.complex(), w = gen.complex(), s = gen.complex();
        cases.push_back(scale(ComplexMatrix{{z, w}, {-std::conj(w), std::conj(z)}}, s));
        cases.push_back(gen.singular2());
    }
    int agree = 0;
    int positives = 0;
    for (const auto& m : cases) {
        const bool orth = teleport::basis_states_orthogonal(m);
        const bool ssu = teleport::is_scaled_special_unitary(m);
        agree += orth == ssu;
        positives += ssu;
    }
    const auto total = static_cast<int>(cases.size());
    return {agree == total, std::to_string(agree) + "/" + std::to_string(total) + " agree (" +
                                std::to_string(positives) + " scaled special unitary)"};
}

Outcome trace_process() {
    const auto start = Clock::now();
    fixtures::Gen gen(1006);
    double worst_exact = 0.0;
    for (std::size_t n = 1; n <= 3; ++n) {
        for (int i = 0; i < 10; ++i) {
            const auto u = gen.matrix(std::size_t{1} << n, std::size_t{1} << n);
            worst_exact = std::max(worst_exact, std::abs(trace_estimator::exact_trace_amplitude(u) - trace(u)));
        }
    }
    int covered = 0;
    for (int i = 0; i < 20; ++i) {
        const std::size_t n = 1 + i % 3;
        const auto u = gen.unitary(std::size_t{1} << n);
        const auto e = trace_estimator::estimate_abs_trace(u, 100000, 2000 + i);
        covered += std::abs(e.estimate - std::abs(trace(u))) <= 3.0 * e.std_error;
    }
    bool extremes = true;
    const ComplexMatrix z{{1.0, 0.0}, {0.0, -1.0}};
    for (std::size_t n = 1; n <= 3; ++n) {
        const std::size_t side = std::size_t{1} << n;
        extremes = extremes && trace_estimator::estimate_abs_trace(ComplexMatrix::identity(side), 1000, 9).estimate ==
                                   static_cast<double>(side);
        ComplexMatrix zn = z;
        for (std::size_t k = 1; k < n; ++k) {
            zn = kron(zn, ComplexMatrix::identity(2));
        }
        extremes = extremes && trace_estimator::estimate_abs_trace(zn, 1000, 9).estimate == 0.0;
    }
    const double t = seconds_since(start);
    return {worst_exact <= 1e-12 && covered >= 18 && extremes && t < 30.0,
            "exact error " + fmt(worst_exact) + ", " + std::to_string(covered) + "/20 within 3 sigma, I/Z " +
                (extremes ? "exact" : "wrong") + ", " + fmt(t) + " s"};
}

Outcome gate_teleportation() {
    fixtures::Gen gen(1007);
    int sampled_ok = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + trial % 2;
        const auto u = gen.unitary(std::size_t{1} << n);
        const auto psi = gen.ket(n).normalized();
        const auto s = teleport::run_teleportation(n, psi, u, 5000 + trial);
        sampled_ok += s.bob_corrected && states::phase_equal(*s.bob_corrected, apply(u, psi), 1e-10);
    }
    int forced_ok = 0;
    int forced_total = 0;
    double worst_dev = 0.0;
    for (std::size_t n = 1; n <= 2; ++n) {
        const auto u = gen.unitary(std::size_t{1} << n);
        const auto psi = gen.ket(n).normalized();
        const std::size_t outcomes = std::size_t{1} << (2 * n);
        for (std::size_t k = 0; k < outcomes; ++k) {
            teleport::TeleportOptions opts;
            opts.forced_outcome = teleport::word_from_index(k, n);
            const auto s = teleport::run_teleportation(n, psi, u, 1, opts);
            forced_ok += s.bob_corrected && states::phase_equal(*s.bob_corrected, apply(u, psi), 1e-10);
            ++forced_total;
        }
        std::vector<states::MeasurementState> basis;
        for (const auto& el : teleport::measurement_basis_for(u)) {
            basis.push_back(el.state);
        }
        const auto p = states::born_distribution(basis, tensor(psi, states::delta_state(n).ket));
        for (double q : p) {
            worst_dev = std::max(worst_dev, std::abs(q - 1.0 / static_cast<double>(outcomes)));
        }
    }
    return {sampled_ok == 50 && forced_ok == forced_total && worst_dev <= 1e-10,
            "sampled " + std::to_string(sampled_ok) + "/50, forced " + std::to_string(forced_ok) + "/" +
                std::to_string(forced_total) + ", max deviation from uniform " + fmt(worst_dev)};
}

Outcome entanglement() {
    fixtures::Gen gen(1008);
    int agree = 0;
    for (int i = 0; i < 500; ++i) {
        // Ground truth comes from construction: rank-one products are singular, Gaussian draws are not.
        const bool singular = i < 100;
        const auto m = singular ? gen.singular2() : gen.matrix(2, 2);
        const bool invertible = !singular && std::abs(det2(m)) > 0.0;
        agree += states::is_entangled_two_qubit(states::cup_state_from_matrix(m).ket) == invertible;
    }
    return {agree == 500, std::to_string(agree) + "/500 agree"};
}

std::string capture(const std::string& command, int& status) {
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), got);
    }
    status = pclose(pipe);
    return out;
}

Outcome determinism() {
    const std::string cli = TELETOPO_CLI_PATH;
    const std::string dir = std::string(TELETOPO_TEST_DATA) + "/";
    const std::vector<std::string> commands = {
        "diagram-eval " + dir + "zigzag_inverse.json",
        "teleport --psi " + dir + "ket_random2q.json --gate " + dir + "gate_random4.json --seed 42 --verify",
        "trace --gate " + dir + "gate_random4.json --shots 20000 --seed 42",
        "basis-check " + dir + "matrix_generic.json",
        "entangle-check " + dir + "ket_two_qubit.json",
    };
    int identical = 0;
    for (const auto& c : commands) {
        int s1 = 0, s2 = 0;
        const auto first = capture("'" + cli + "' " + c, s1);
        const auto second = capture("'" + cli + "' " + c, s2);
        identical += s1 == 0 && s2 == 0 && !first.empty() && first == second;
    }
    return {identical == 5, std::to_string(identical) + "/5 commands byte-identical"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"circle amplitude matches double-sum oracle", circle_amplitude},
        {"zig-zag with inverse matrices is the identity", zigzag},
        {"<delta|delta> = 2^n", delta_norm},
        {"post-selected residual equals M psi", teleportation_lemma},
        {"basis orthogonality iff scaled special unitary", basis_lemma},
        {"trace estimation", trace_process},
        {"gate teleportation end to end", gate_teleportation},
        {"entanglement iff invertibility", entanglement},
        {"CLI determinism", determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
                  << o.detail << ")\n";
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
