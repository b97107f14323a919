// Copyright 2026 The cvexact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvexact/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "cvexact/baseline.hpp"
#include "cvexact/circuit_tools.hpp"
#include "cvexact/decomposer.hpp"
#include "cvexact/dsl.hpp"
#include "cvexact/errors.hpp"
#include "cvexact/verifier.hpp"

namespace cvexact {

namespace {

constexpr double kSymbolicThreshold = 1e-9;

struct Flags {
    std::string out;
    bool no_verify = false;
    int cutoff = 0;  // 0: skip the numeric check
    int subspace = 5;
    double tolerance = 1e-5;
    double param_split = 1.0;
    double even_shift = 2.0;
    std::string format = "text";
    int trotter = 0;
    double epsilon = 1e-3;
    std::size_t term_budget = 5000;
};

void add_compile_flags(CLI::App *cmd, Flags &f) {
    cmd->add_option("--out", f.out, "Write the circuit JSON to this file");
    cmd->add_flag("--no-verify", f.no_verify, "Skip the symbolic Heisenberg-action check");
    cmd->add_option("--numeric-cutoff", f.cutoff, "Also compare in a truncated Fock space of this cutoff")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--subspace", f.subspace, "Levels per mode compared numerically")->check(CLI::PositiveNumber);
    cmd->add_option("--tolerance", f.tolerance, "Numeric error threshold")->check(CLI::PositiveNumber);
    cmd->add_option("--param-split", f.param_split, "Cubic strength t in exp(isPX^2) = ... (3 a^2 t = s)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--even-shift", f.even_shift, "Conjugator strength in the even single-mode identity")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", f.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--term-budget", f.term_budget,
                    "Image size at which flat symbolic checking yields to per-identity checking");
    cmd->add_option("--trotter", f.trotter, "Split a '+'-separated sum with K Trotter steps")
        ->check(CLI::PositiveNumber);
}

CompileOptions compile_options(const Flags &f) {
    CompileOptions o;
    o.param_split = f.param_split;
    o.even_shift = f.even_shift;
    return o;
}

FockContext fock_context(const Flags &f) {
    FockContext ctx;
    ctx.cutoff = f.cutoff;
    ctx.subspace = f.subspace;
    ctx.tolerance = f.tolerance;
    return ctx;
}

void write_circuit(const GateSeq &seq, const std::string &path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write '" + path + "'");
    os << serialize(seq).dump(1) << '\n';
}

void emit(std::ostream &out, const Flags &f, const std::string &target, const DecompReport &r,
          bool passed) {
    if (f.format == "json") {
        nlohmann::json j = {{"target", target}, {"report", report_to_json(r)}, {"verified", passed}};
        if (!f.out.empty()) j["circuit_file"] = f.out;
        out << j.dump(2) << '\n';
        return;
    }
    out << "target:               " << target << '\n' << report_to_text(r);
    if (!f.out.empty()) out << "circuit written to:   " << f.out << '\n';
    out << "verification:         " << (passed ? "ok" : "FAILED") << '\n';
}

int check_numeric(const GateSeq &seq, const TargetGate &t, const Flags &f, DecompReport &r) {
    if (f.cutoff <= 0) return kExitOk;
    NumericResult n = verify_numeric(seq, t, fock_context(f));
    r.residual_numeric = n.subspace_error;
    r.phase_offset = n.phase_offset;
    return n.subspace_error <= f.tolerance ? kExitOk : kExitVerify;
}

int cmd_trotter(const std::string &spec, const Flags &f, std::ostream &out) {
    const auto terms = parse_terms(spec);
    std::vector<NOPoly> hs;
    NOPoly sum;
    for (const auto &t : terms) {
        hs.push_back(t.hamiltonian());
        sum += t.hamiltonian();
    }
    const double strength = terms.front().strength;
    GateSeq seq = optimize(trotter_suzuki(hs, strength, f.trotter, compile_options(f)));
    DecompReport r;
    r.route = "Trotter(K=" + std::to_string(f.trotter) + ")";
    r.n_gates_total = count_gates(seq, false);
    r.n_gates_nonfourier = count_gates(seq, true);
    r.n_gates_preopt = r.n_gates_nonfourier;
    r.n_ancillas = seq.ancilla_modes.size();
    bool passed = true;
    if (f.cutoff > 0) {
        // Approximate circuit: compare against the dense exponential of the sum.
        const std::uint32_t modes = seq.total_modes();
        const CMatrix u = circuit_unitary(seq, modes, f.cutoff);
        const CMatrix exact = expi_hermitian(hamiltonian_matrix(sum, modes, f.cutoff), strength);
        double phase = 0;
        r.residual_numeric = subspace_distance(u, exact, modes, f.cutoff, f.subspace, &phase);
        r.phase_offset = phase;
        passed = *r.residual_numeric <= f.tolerance;
    }
    if (!f.out.empty()) write_circuit(seq, f.out);
    emit(out, f, spec, r, passed);
    return passed ? kExitOk : kExitVerify;
}

int cmd_compile(const std::string &spec, const Flags &f, std::ostream &out) {
    if (f.trotter > 0) return cmd_trotter(spec, f, out);
    const TargetGate t = parse_target(spec);
    Compiled c = compile(t, compile_options(f));
    int status = kExitOk;
    if (!f.no_verify) {
        try {
            c.report.residual_symbolic = verify_symbolic(c.seq, t, f.term_budget);
            c.report.symbolic_method = "flat";
        } catch (const VerificationBudgetExceeded &) {
            // Deep circuits: check each identity application instead.
            const Certificate cert = certify_lowering(t, compile_options(f));
            c.report.residual_symbolic = cert.residual;
            c.report.symbolic_method = "compositional, " + std::to_string(cert.identities) + " identities";
        }
        if (c.report.residual_symbolic > kSymbolicThreshold) status = kExitVerify;
    }
    if (check_numeric(c.seq, t, f, c.report) != kExitOk) status = kExitVerify;
    if (!f.out.empty()) write_circuit(c.seq, f.out);
    emit(out, f, format_target(t), c.report, status == kExitOk);
    return status;
}

int cmd_compare(const std::string &spec, const Flags &f, std::ostream &out) {
    const TargetGate t = parse_target(spec);
    const Compiled c = compile(t, compile_options(f));
    const CommutatorEstimate e = estimate_commutator_count(t, f.epsilon);
    const double exact = static_cast<double>(c.report.n_gates_nonfourier);
    const double ratio = exact > 0 ? e.gates / exact : 0.0;
    if (f.format == "json") {
        nlohmann::json j = {{"target", format_target(t)},
                            {"epsilon", f.epsilon},
                            {"exact_gates", c.report.n_gates_nonfourier},
                            {"estimate_gates", e.gates},
                            {"estimate_K", e.K},
                            {"estimate_levels", e.levels},
                            {"ratio", ratio},
                            {"model", e.model}};
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << "target:            " << format_target(t) << '\n'
        << "exact (non-Fourier): " << c.report.n_gates_nonfourier << " gates\n"
        << "commutator approx:   " << std::setprecision(3) << e.gates << " gates (epsilon "
        << f.epsilon << ", K=" << e.K << ", levels=" << e.levels << ")\n"
        << "ratio:               " << ratio << '\n'
        << "model:               " << e.model << '\n';
    return kExitOk;
}

int cmd_verify(const std::string &path, const std::string &spec, const Flags &f, std::ostream &out,
               std::ostream &err) {
    std::ifstream is(path);
    if (!is) throw ParseError("cannot read '" + path + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(is);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("circuit file is not JSON: ") + e.what());
    }
    const GateSeq seq = deserialize(doc);
    const TargetGate t = parse_target(spec);
    DecompReport r;
    r.route = "file";
    r.n_gates_total = count_gates(seq, false);
    r.n_gates_nonfourier = count_gates(seq, true);
    r.n_gates_preopt = r.n_gates_nonfourier;
    r.n_ancillas = seq.ancilla_modes.size();
    try {
        r.residual_symbolic = verify_symbolic(seq, t, f.term_budget);
        r.symbolic_method = "flat";
    } catch (const VerificationBudgetExceeded &e) {
        err << "inconclusive: " << e.what() << "; raise --term-budget\n";
        return kExitVerify;
    }
    int status = r.residual_symbolic > kSymbolicThreshold ? kExitVerify : kExitOk;
    if (check_numeric(seq, t, f, r) != kExitOk) status = kExitVerify;
    emit(out, f, format_target(t), r, status == kExitOk);
    return status;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact decomposition of continuous-variable gates into a universal gate set", "cvexact"};
    app.require_subcommand(1);
    Flags f;
    std::string spec, name, path;

    auto *compile_cmd = app.add_subcommand("compile", "Compile a target such as \"t=1 X[0] X[1]^2\"");
    compile_cmd->add_option("spec", spec, "Target specification")->required();
    add_compile_flags(compile_cmd, f);

    auto *preset_cmd = app.add_subcommand("preset", "Compile the gate kernel of an application preset");
    preset_cmd->add_option("name", name, "Preset name (see --list)");
    bool list = false;
    preset_cmd->add_flag("--list", list, "List preset names");
    add_compile_flags(preset_cmd, f);

    auto *compare_cmd = app.add_subcommand("compare", "Exact gate count vs. commutator-approximation estimate");
    compare_cmd->add_option("spec", spec, "Target specification")->required();
    compare_cmd->add_option("--epsilon", f.epsilon, "Target precision")->check(CLI::PositiveNumber);
    compare_cmd->add_option("--param-split", f.param_split, "See compile")->check(CLI::PositiveNumber);
    compare_cmd->add_option("--format", f.format, "Report format")->check(CLI::IsMember({"text", "json"}));

    auto *verify_cmd = app.add_subcommand("verify", "Check a circuit file against a target");
    verify_cmd->add_option("circuit", path, "Circuit JSON file")->required();
    verify_cmd->add_option("spec", spec, "Target specification")->required();
    verify_cmd->add_option("--numeric-cutoff", f.cutoff, "Also compare in a truncated Fock space")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--subspace", f.subspace, "Levels per mode compared numerically")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--tolerance", f.tolerance, "Numeric error threshold")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--format", f.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    verify_cmd->add_option("--term-budget", f.term_budget, "Largest Heisenberg image size before giving up");

    std::vector<std::string> argv_store = {"cvexact"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*compile_cmd) return cmd_compile(spec, f, out);
        if (*preset_cmd) {
            if (list) {
                for (const auto &n : preset_names()) out << n << '\n';
                return kExitOk;
            }
            if (name.empty()) throw ParseError("preset name required");
            const std::string kernel = preset_spec(name);
            out << "preset:               " << name << " -> " << kernel << '\n';
            return cmd_compile(kernel, f, out);
        }
        if (*compare_cmd) return cmd_compare(spec, f, out);
        if (*verify_cmd) return cmd_verify(path, spec, f, out, err);
    } catch (const ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SchemaViolation &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DimensionTooLarge &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Ineligible &e) {
        err << "ineligible: " << e.what() << '\n';
        return kExitIneligible;
    } catch (const NoUnitCentralMode &e) {
        err << "ineligible: " << e.what() << '\n';
        return kExitIneligible;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}

}  // namespace cvexact
