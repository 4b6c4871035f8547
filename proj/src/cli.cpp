#include "teletopo/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "teletopo/diagram.hpp"
#include "teletopo/errors.hpp"
#include "teletopo/json_io.hpp"
#include "teletopo/states.hpp"
#include "teletopo/teleport.hpp"
#include "teletopo/trace_estimator.hpp"

namespace teletopo::cli {

namespace {

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json_io::Json load(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoFailure("cannot open " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return json_io::parse(buf.str());
}

json_io::OrderedJson diagram_eval(const RunConfig& c) {
    const auto d = json_io::diagram_from_json(load(c.input_paths.at(0)));
    if (auto diag = diagram::validate(d)) {
        throw ValidationError(diag->to_string());
    }
    const auto m = diagram::evaluate(d);
    if (m.rows() == 1 && m.cols() == 1) {
        return {{"amplitude", json_io::complex_to_json(m(0, 0))}};
    }
    return json_io::matrix_to_json(m);
}

json_io::OrderedJson teleport_cmd(const RunConfig& c) {
    const Ket psi = json_io::ket_from_json(load(c.input_paths.at(0)));
    const ComplexMatrix gate = json_io::matrix_from_json(load(c.input_paths.at(1)));
    teleport::TeleportOptions options;
    options.tol = c.tol;
    const auto session = teleport::run_teleportation(psi.num_qubits(), psi, gate, *c.seed, options);
    if (c.verify && !session.verified) {
        throw VerificationFailure("corrected state is not phase-equal to gate * psi");
    }
    return json_io::session_to_json(session);
}

json_io::OrderedJson trace_cmd(const RunConfig& c) {
    const ComplexMatrix gate = json_io::matrix_from_json(load(c.input_paths.at(0)));
    return json_io::trace_report_to_json(trace_estimator::estimate_abs_trace(gate, *c.shots, *c.seed));
}

json_io::OrderedJson basis_check(const RunConfig& c) {
    const ComplexMatrix m = json_io::matrix_from_json(load(c.input_paths.at(0)));
    if (m.rows() != 2 || m.cols() != 2) {
        throw ShapeError("basis-check expects a 2x2 matrix");
    }
    const bool orthogonal = teleport::basis_states_orthogonal(m);
    const bool special = teleport::is_scaled_special_unitary(m, c.tol);
    json_io::OrderedJson j{{"orthogonal", orthogonal}, {"scaled_special_unitary", special}};
    if (orthogonal != special) {
        throw ConsistencyError("orthogonality and scaled-special-unitary checks disagree: " + j.dump());
    }
    return j;
}

json_io::OrderedJson entangle_check(const RunConfig& c) {
    const Ket k = json_io::ket_from_json(load(c.input_paths.at(0)));
    const bool entangled = states::is_entangled_two_qubit(k, c.tol);
    const ComplexMatrix m{{k[0], k[1]}, {k[2], k[3]}};
    return {{"entangled", entangled}, {"det", json_io::complex_to_json(det2(m))}};
}

void emit(const RunConfig& c, const json_io::OrderedJson& result, std::ostream& out) {
    const std::string text = result.dump() + "\n";
    if (c.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.output, std::ios::binary | std::ios::trunc);
    if (!f || !(f << text) || !f.flush()) {
        throw IoFailure("cannot write " + c.output);
    }
}

}  // namespace

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        json_io::OrderedJson result;
        switch (config.command) {
            case Command::DiagramEval:
                result = diagram_eval(config);
                break;
            case Command::Teleport:
                if (!config.seed) {
                    throw InputError("teleport requires --seed");
                }
                result = teleport_cmd(config);
                break;
            case Command::Trace:
                if (!config.seed || !config.shots) {
                    throw InputError("trace requires --seed and --shots");
                }
                result = trace_cmd(config);
                break;
            case Command::BasisCheck:
                result = basis_check(config);
                break;
            case Command::EntangleCheck:
                result = entangle_check(config);
                break;
        }
        emit(config, result, out);
        return kOk;
    } catch (const IoFailure& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const VerificationFailure& e) {
        err << "verification failed: " << e.what() << "\n";
        return kVerificationFailed;
    } catch (const ConsistencyError& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return kInternalInconsistency;
    } catch (const ValidationError& e) {
        err << "invalid diagram: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cup/cap diagrams, gate teleportation and |tr U| estimation"};
    app.require_subcommand(1);

    RunConfig config;
    std::string path;
    std::string psi_path;
    std::string gate_path;
    std::uint64_t seed = 0;
    std::uint64_t shots = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--tol", config.tol, "Tolerance for equality checks")->check(CLI::PositiveNumber);
        sub->add_option("--output", config.output, "Write the result here instead of standard output");
    };

    auto* diag = app.add_subcommand("diagram-eval", "Evaluate a cup/cap diagram");
    diag->add_option("diagram", path, "Diagram JSON file")->required();
    add_common(diag);

    auto* tele = app.add_subcommand("teleport", "Run one gate-teleportation session");
    tele->add_option("--psi", psi_path, "Ket JSON file")->required();
    tele->add_option("--gate", gate_path, "Unitary matrix JSON file")->required();
    tele->add_option("--seed", seed, "RNG seed")->required();
    tele->add_flag("--verify", config.verify, "Exit 4 unless Bob ends with gate * psi");
    add_common(tele);

    auto* tr = app.add_subcommand("trace", "Estimate |tr U| by repeated trials");
    tr->add_option("--gate", gate_path, "Unitary matrix JSON file")->required();
    tr->add_option("--shots", shots, "Number of trials")->required()->check(CLI::PositiveNumber);
    tr->add_option("--seed", seed, "RNG seed")->required();
    add_common(tr);

    auto* basis = app.add_subcommand("basis-check", "Check the M, XM, YM, ZM orthogonality criterion");
    basis->add_option("matrix", path, "2x2 matrix JSON file")->required();
    add_common(basis);

    auto* ent = app.add_subcommand("entangle-check", "Test a two-qubit ket for entanglement");
    ent->add_option("ket", path, "Ket JSON file")->required();
    add_common(ent);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    if (diag->parsed()) {
        config.command = Command::DiagramEval;
        config.input_paths = {path};
    } else if (tele->parsed()) {
        config.command = Command::Teleport;
        config.input_paths = {psi_path, gate_path};
        config.seed = seed;
    } else if (tr->parsed()) {
        config.command = Command::Trace;
        config.input_paths = {gate_path};
        config.seed = seed;
        config.shots = shots;
    } else if (basis->parsed()) {
        config.command = Command::BasisCheck;
        config.input_paths = {path};
    } else {
        config.command = Command::EntangleCheck;
        config.input_paths = {path};
    }
    return execute(config, out, err);
}

}  // namespace teletopo::cli
