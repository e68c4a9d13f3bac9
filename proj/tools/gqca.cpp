// Copyright 2026 The gqca Authors
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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gqca/endio.hpp"
#include "gqca/engine.hpp"
#include "gqca/library.hpp"
#include "gqca/logical.hpp"
#include "gqca/parallel.hpp"
#include "gqca/readout.hpp"
#include "gqca/spectra.hpp"
#include "gqca/synth.hpp"
#include "gqca/transport.hpp"

using namespace gqca;

namespace {

std::string format_amplitude(cdouble a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f%+.6fi", a.real(), a.imag());
    return buf;
}

std::string superposed_line(const QuantumState &state) {
    auto terms = state.top_terms(8);
    std::string s = "superposed(";
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i) {
            s += ", ";
        }
        s += format_amplitude(terms[i].second) + " " +
             format_config(state.indexer().unrank(terms[i].first));
    }
    s += ")";
    return s;
}

struct SimArgs {
    std::string config_literal;
    std::string layout_path;
    std::string word_literal;
    std::string pulses_path;
    int mode = 2;
    uint64_t seed = 0;
    std::string trace = "text";
    std::string engine = "auto";
};

int run_sim(const SimArgs &args) {
    Mode mode = args.mode == 3 ? Mode::ThreeLevel : Mode::TwoLevel;
    CellConfig config;
    if (!args.config_literal.empty()) {
        config = parse_config(args.config_literal);
    } else if (!args.layout_path.empty()) {
        Layout layout = load_layout_file(args.layout_path);
        config = encode(layout, parse_word(args.word_literal));
    } else {
        std::cerr << "sim: need --config or --layout with --word\n";
        return 2;
    }
    validate_config(config, mode);
    PulseSequence seq = load_pulse_file(args.pulses_path);

    bool classical = args.engine == "classical" ||
                     (args.engine == "auto" && sequence_is_classical(seq));
    if (args.engine == "quantum") {
        classical = false;
    }

    nlohmann::json jtrace;
    jtrace["schema"] = 1;
    jtrace["steps"] = nlohmann::json::array();
    auto emit_text = [&](size_t step, const std::string &rule, const std::string &body) {
        std::printf("%zu | %s | %s\n", step, rule.c_str(), body.c_str());
    };

    if (classical) {
        CellConfig c = config;
        for (size_t i = 0; i < seq.size(); ++i) {
            c = classical_apply(c, seq[i], mode);
            if (args.trace == "json") {
                jtrace["steps"].push_back(
                    {{"step", i}, {"rule", format_rule(seq[i])}, {"config", format_config(c)}});
            } else {
                emit_text(i, format_rule(seq[i]), format_config(c));
            }
        }
        if (args.trace == "json") {
            std::printf("%s\n", jtrace.dump(2).c_str());
        }
        return 0;
    }

    QuantumState psi = QuantumState::basis_state(config, mode);
    for (size_t i = 0; i < seq.size(); ++i) {
        apply_rule(psi, seq[i]);
        auto terms = psi.top_terms(8);
        bool basis = terms.size() == 1 && std::abs(std::abs(terms[0].second) - 1.0) < 1e-9;
        if (args.trace == "json") {
            nlohmann::json step{{"step", i}, {"rule", format_rule(seq[i])}};
            if (basis) {
                step["config"] = format_config(psi.indexer().unrank(terms[0].first));
            } else {
                step["terms"] = nlohmann::json::array();
                for (auto &[r, a] : terms) {
                    step["terms"].push_back(
                        {{"amp", {a.real(), a.imag()}},
                         {"config", format_config(psi.indexer().unrank(r))}});
                }
            }
            jtrace["steps"].push_back(step);
        } else {
            emit_text(i, format_rule(seq[i]),
                      basis ? format_config(psi.indexer().unrank(terms[0].first))
                            : superposed_line(psi));
        }
    }
    if (args.trace == "json") {
        std::printf("%s\n", jtrace.dump(2).c_str());
    }
    return 0;
}

int run_verify(const std::string &dir, bool full) {
    GateLibrary lib = GateLibrary::load(dir);
    bool all_ok = true;
    for (const LibraryEntry &entry : lib.entries()) {
        GateSpec spec;
        spec.kind = entry.kind;
        spec.u = gates::pauli_x();
        spec.u_label = "X";
        spec.target = entry.roles.at(0);
        if (entry.kind != GateSpec::Kind::OneQubit) {
            spec.control1 = entry.roles.at(1);
            spec.control1_on_one = entry.senses.at(0) == '1';
        }
        if (entry.kind == GateSpec::Kind::CCU) {
            spec.control2 = entry.roles.at(2);
            spec.control2_on_one = entry.senses.at(1) == '1';
        }

        auto action_for = [&](const Gate1 &u, const std::string &label) {
            PulseSequence seq = substitute_slot(entry.sequence, entry.slot_index,
                                                GateLibrary::slot_gate(entry, u), label);
            return extract_logical_action(seq, entry.layout);
        };
        auto err_for = [&](const Gate1 &u, const std::string &ulabel, double *err) {
            GateSpec s = spec;
            s.u = u;
            s.u_label = ulabel;
            LogicalAction a = action_for(u, ulabel == "X" ? "INV" : "");
            *err = a.max_deviation(logical_matrix(s, entry.layout.n_qubits()));
            return *err < 1e-8 && a.leakage < 1e-8;
        };

        double errx, errz = 0, errt = 0, errh = -1;
        bool ok = err_for(gates::pauli_x(), "X", &errx);
        if (entry.kind != GateSpec::Kind::CCU) {
            ok = err_for(gates::pauli_z(), "Z", &errz) && ok;
            ok = err_for(gates::phase(3.14159265358979323846 / 4.0), "T", &errt) && ok;
            if (entry.layout.n_cells <= 20 || full) {
                ok = err_for(gates::hadamard(), "H", &errh) && ok;
            }
        }

        if (errh >= 0) {
            std::printf("%-12s len=%-3zu errX=%.2e errZ=%.2e errT=%.2e errH=%.2e %s\n",
                        entry.name.c_str(), entry.sequence.size(), errx, errz, errt, errh,
                        ok ? "PASS" : "FAIL");
        } else {
            std::printf("%-12s len=%-3zu errX=%.2e errZ=%.2e errT=%.2e %s\n", entry.name.c_str(),
                        entry.sequence.size(), errx, errz, errt, ok ? "PASS" : "FAIL");
        }
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"1-D globally-driven cell-array quantum computation simulator"};
    app.require_subcommand(1);

    SimArgs sim_args;
    auto *sim = app.add_subcommand("sim", "apply a pulse file to a configuration");
    sim->add_option("--config", sim_args.config_literal, "config literal over {d,u,f}");
    sim->add_option("--layout", sim_args.layout_path, "layout file");
    sim->add_option("--word", sim_args.word_literal, "word literal, e.g. q=10,cu=1");
    sim->add_option("--pulses", sim_args.pulses_path, "pulse file")->required();
    sim->add_option("--mode", sim_args.mode, "2 or 3 level mode");
    sim->add_option("--seed", sim_args.seed, "seed for stochastic commands");
    sim->add_option("--trace", sim_args.trace, "text|json");
    sim->add_option("--engine", sim_args.engine, "auto|classical|quantum");

    std::string gate_layout, gate_word, gate_spec;
    std::string data_dir = GateLibrary::default_dir();
    auto *gate = app.add_subcommand("gate", "apply a logical gate via the sequence library");
    gate->add_option("--layout", gate_layout, "layout file")->required();
    gate->add_option("--word", gate_word, "word literal")->required();
    gate->add_option("--gate", gate_spec, "gate literal, e.g. C-X@1,0")->required();
    gate->add_option("--data", data_dir, "golden data directory");

    std::string synth_target, synth_layout_path, synth_out;
    size_t synth_max_len = 25;
    double synth_tol = 1e-8;
    auto *synth = app.add_subcommand("synth", "search for a gate pulse sequence");
    synth->add_option("--target", synth_target, "gate literal")->required();
    synth->add_option("--layout", synth_layout_path, "layout file (defaults per gate kind)");
    synth->add_option("--max-len", synth_max_len, "sequence length bound");
    synth->add_option("--tol", synth_tol, "action and leakage tolerance");
    synth->add_option("--out", synth_out, "write the found sequence to this pulse file");

    size_t par_n = 8;
    std::string par_pred = "all", par_gate = "X", par_report = "csv", par_scan;
    bool par_run = false;
    auto *par = app.add_subcommand("parallel", "sub-computer parallelism runs");
    par->add_option("--n", par_n, "qubit count");
    par->add_option("--pred", par_pred, "all|single:K|pow2:P|interval:LO:HI");
    par->add_option("--gate", par_gate, "broadcast gate name (X,Z,H,T)");
    par->add_option("--report", par_report, "csv|text");
    par->add_option("--scan", par_scan, "comma-separated N list for scaling rows");
    par->add_flag("--run", par_run, "simulate the step and verify gate placement");
    par->add_option("--data", data_dir, "golden data directory");

    double sp_k = 3.0, sp_disorder = 0.0;
    std::string sp_scan;
    size_t sp_cutoff = 0;
    auto *spectra_cmd = app.add_subcommand("spectra", "multiplet separation scans");
    spectra_cmd->add_option("--k", sp_k, "interaction exponent");
    spectra_cmd->add_option("--scan", sp_scan, "lo:hi:step exponent grid");
    spectra_cmd->add_option("--cutoff", sp_cutoff, "half-chain cutoff (0 = analytic tail)");
    spectra_cmd->add_option("--disorder", sp_disorder, "per-cell bare-gap spread");

    bool verify_full = false;
    auto *verify = app.add_subcommand("verify", "verify the golden sequence library");
    verify->add_option("--data", data_dir, "golden data directory");
    verify->add_flag("--full", verify_full, "include dense checks on large layouts");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) {
            return run_sim(sim_args);
        }
        if (gate->parsed()) {
            GateLibrary lib = GateLibrary::load(data_dir);
            Layout layout = load_layout_file(gate_layout);
            LogicalWord word = parse_word(gate_word);
            GateSpec spec = GateSpec::from_literal(gate_spec);
            CellConfig config = encode(layout, word);
            AssembledGate assembled = lib.assemble(layout, spec);
            if (sequence_is_classical(assembled.pulses)) {
                CellConfig out = classical_apply_sequence(config, assembled.pulses);
                std::printf("%s\n", format_config(out).c_str());
                auto decoded = try_decode(layout, out);
                if (decoded) {
                    std::printf("%s\n", format_word(*decoded).c_str());
                }
            } else {
                QuantumState psi = QuantumState::basis_state(config, Mode::TwoLevel);
                apply_sequence(psi, assembled.pulses);
                std::printf("%s\n", superposed_line(psi).c_str());
            }
            return 0;
        }
        if (synth->parsed()) {
            SynthesisProblem prob;
            prob.target = GateSpec::from_literal(synth_target);
            if (!synth_layout_path.empty()) {
                prob.layout = load_layout_file(synth_layout_path);
            } else {
                switch (prob.target.kind) {
                    case GateSpec::Kind::OneQubit: prob.layout = min_one_qubit_layout(); break;
                    case GateSpec::Kind::ControlledU:
                        prob.layout = min_two_qubit_layout();
                        break;
                    case GateSpec::Kind::CCU: prob.layout = min_three_qubit_layout(); break;
                }
            }
            if (BasisIndexer(prob.layout.n_cells, Mode::TwoLevel).dim() > kMaxQuantumDim) {
                prob.classical_only = true;
            }
            prob.max_len = synth_max_len;
            prob.tolerance = synth_tol;
            auto res = synthesize(prob);
            if (!res) {
                std::printf("{\"schema\":1,\"found\":false,\"max_len\":%zu}\n", synth_max_len);
                return 0;
            }
            std::printf("%s\n", synthesis_report_json(prob, *res).c_str());
            if (!synth_out.empty()) {
                save_pulse_file(synth_out, res->sequence);
            }
            return 0;
        }
        if (par->parsed()) {
            GateLibrary lib = GateLibrary::load(data_dir);
            Gate1 u = gates::pauli_x();
            std::string label = par_gate == "X" ? "INV" : par_gate;
            if (par_gate == "Z") {
                u = gates::pauli_z();
            } else if (par_gate == "H") {
                u = gates::hadamard();
            } else if (par_gate == "T") {
                u = gates::phase(3.14159265358979323846 / 4.0);
            } else if (par_gate != "X") {
                std::cerr << "parallel: unknown gate '" << par_gate << "'\n";
                return 2;
            }
            if (!par_scan.empty()) {
                std::vector<size_t> ns;
                std::stringstream ss(par_scan);
                std::string tok;
                while (std::getline(ss, tok, ',')) {
                    ns.push_back(std::stoul(tok));
                }
                std::string family = par_pred.substr(0, par_pred.find(':'));
                auto rows = scaling_report(family, ns, lib, u, label);
                std::printf("%s", scaling_csv(rows).c_str());
                return 0;
            }
            ParallelLayout lay = build_parallel_layout(par_n);
            EnablePredicate pred = EnablePredicate::from_literal(par_pred);
            if (par_run) {
                std::vector<int> qubits(par_n, 0);
                auto [out, budget] =
                    run_parallel_step(lay, lib, lay.initial_config(qubits), u, label, pred);
                auto values = lay.decode_qubits(out);
                std::string bits;
                for (int v : values) {
                    bits += v ? '1' : '0';
                }
                std::printf("qubits=%s tau=%zu dispatch=%zu gate=%zu uncompute=%zu total=%zu\n",
                            bits.c_str(), budget.predicate_compute, budget.cu_dispatch,
                            budget.gate, budget.uncompute, budget.total());
                return 0;
            }
            ParallelStep step = plan_parallel_step(lay, lib, u, label, pred);
            if (par_report == "csv") {
                std::printf("N,tau,total_pulses,overhead_factor\n%zu,%zu,%zu,%.6g\n", par_n,
                            step.budget.predicate_compute, step.budget.total(),
                            lay.overhead_factor);
            } else {
                std::printf("N=%zu tau=%zu dispatch=%zu gate=%zu uncompute=%zu total=%zu "
                            "overhead=%.3f cells=%zu\n",
                            par_n, step.budget.predicate_compute, step.budget.cu_dispatch,
                            step.budget.gate, step.budget.uncompute, step.budget.total(),
                            lay.overhead_factor, lay.n_cells);
            }
            return 0;
        }
        if (spectra_cmd->parsed()) {
            if (!sp_scan.empty()) {
                double lo, hi, stepv;
                if (std::sscanf(sp_scan.c_str(), "%lf:%lf:%lf", &lo, &hi, &stepv) != 3) {
                    std::cerr << "spectra: --scan wants lo:hi:step\n";
                    return 2;
                }
                ThresholdScan scan = threshold_scan(1.0, lo, hi, stepv, sp_cutoff, sp_disorder);
                std::printf("%s", scan_csv(scan).c_str());
                std::printf("# crossover_k,%.9f\n", scan.crossover_k);
                return 0;
            }
            ThresholdScan scan = threshold_scan(1.0, sp_k, sp_k, 1.0, sp_cutoff, sp_disorder);
            std::printf("%s", scan_csv(scan).c_str());
            return 0;
        }
        if (verify->parsed()) {
            return run_verify(data_dir, verify_full);
        }
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
