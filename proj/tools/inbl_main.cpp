// inbl: run, verify and inspect noise-based logic circuits.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "inbl/circuit.hpp"
#include "inbl/errors.hpp"
#include "inbl/gates.hpp"
#include "inbl/logic.hpp"
#include "inbl/verifier.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw inbl::ArgumentError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Wire product a string selects, most significant bit first.
std::string wires_of(const inbl::StringTerm &term) {
    std::string out;
    for (int i = term.n_bits(); i >= 1; --i) {
        if (!out.empty()) out += ' ';
        out += "R" + std::to_string(i) + "," + std::to_string(term.value_at(i));
    }
    return out;
}

void print_stage(const char *title, const inbl::Superposition &sup, const inbl::WireTable &table) {
    std::cout << title << '\n';
    for (std::uint64_t k = 0; k < 4; ++k) {
        const auto it = std::find_if(sup.terms().begin(), sup.terms().end(),
                                     [k](const inbl::StringTerm &t) { return (t.bits() & 3u) == k; });
        const inbl::StringTerm &term = *it;
        const inbl::StringTerm decoded(sup.n_bits(), inbl::decode_term(term, table));
        std::cout << "  Y" << (term.bits() & 3u) << ": " << wires_of(term) << "  reads as  " << wires_of(decoded)
                  << '\n';
    }
}

int run_demo(const std::string &gate, const std::string &labels, bool json) {
    constexpr int n = 3;
    if (labels.size() != 4 || labels.find_first_not_of("01") != std::string::npos) {
        std::cerr << "error: --labels needs four binary digits x0x1x2x3\n";
        return kExitUsage;
    }
    std::vector<inbl::StringTerm> terms;
    for (unsigned k = 0; k < 4; ++k) {
        const std::uint64_t x = labels[k] == '1' ? 1 : 0;
        terms.emplace_back(n, (k & 1u) | (((k >> 1) & 1u) << 1) | (x << 2));
    }
    const inbl::Superposition sup(terms);

    inbl::ReferenceSystem cleared(n, 0);
    inbl::clear_bit(cleared, 3);
    inbl::ReferenceSystem gated(n, 0);
    std::string name;
    if (gate == "xor") {
        inbl::xor_gate(gated, 1, 2, 3);
        name = "XOR";
    } else {
        inbl::xnor_gate(gated, 1, 2, 3);
        name = "XNOR";
    }

    if (json) {
        nlohmann::json j;
        j["gate"] = gate;
        j["before"] = inbl::superposition_to_json(sup);
        j["cleared"] = inbl::superposition_to_json(inbl::decode_superposition(sup, cleared.table()));
        j["after"] = inbl::superposition_to_json(inbl::decode_superposition(sup, gated.table()));
        j["mul_counter"] = gated.mul_counter();
        j["wires"] = inbl::wire_table_to_json(gated.table());
        std::cout << j.dump(2) << '\n';
        return kExitOk;
    }
    std::cout << name << " gate, inputs i=1 f=2, output h=3, initial h labels x=" << labels << "\n\n";
    print_stage("strings before:", sup, inbl::WireTable(n, 0));
    print_stage("after clearing bit 3 (R3,1 *= R3,0*R3,1):", sup, cleared.table());
    print_stage(gate == "xor" ? "after XOR (R3,1, R1,1, R2,1 *= R3,0*R3,1):"
                              : "after XNOR (R3,1, R1,1, R2,0 *= R3,0*R3,1):",
                sup, gated.table());
    std::cout << "\nmultiplications: " << gated.mul_counter() << '\n';
    return kExitOk;
}

int run_orthogonality(int n_bits, std::uint64_t cycles, std::uint64_t seed, bool json) {
    inbl::Report report = inbl::orthogonality_suite(seed, n_bits, cycles);
    if (!report.passed()) report = inbl::orthogonality_suite(seed + 1, n_bits, cycles);
    if (json) {
        std::cout << inbl::report_to_json(report).dump(2) << '\n';
    } else {
        for (const auto &c : report.checks) {
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << ": observed " << c.observed << ", bound " << c.bound
                      << '\n';
        }
        std::cout << report.checks.size() - report.failures() << "/" << report.checks.size() << " checks passed\n";
    }
    return report.passed() ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Instantaneous noise-based logic simulator"};
    app.require_subcommand(1);

    auto *run = app.add_subcommand("run", "Run a circuit file");
    std::string circuit_path;
    std::uint64_t seed = 0, verify_signal = 0, stats = 0, cycles = 0;
    std::string waveform_path;
    bool json = false;
    run->add_option("file", circuit_path, "Circuit file")->required();
    auto *seed_opt = run->add_option("--seed", seed, "Override the circuit's seed");
    auto *verify_opt = run->add_option("--verify-signal", verify_signal, "Cross-check against the signal simulator for M cycles");
    auto *stats_opt = run->add_option("--stats", stats, "Statistical presence check over M cycles");
    auto *dump_opt = run->add_option("--dump-waveform", waveform_path, "Write the output waveform as CSV");
    auto *cycles_opt = run->add_option("--cycles", cycles, "Cycles to dump");
    dump_opt->needs(cycles_opt);
    cycles_opt->needs(dump_opt);
    run->add_flag("--json", json, "JSON output");

    auto *demo = app.add_subcommand("demo", "Trace the canonical XOR/XNOR example");
    std::string demo_gate, labels = "1011";
    demo->add_option("gate", demo_gate, "xor or xnor")->required()->check(CLI::IsMember({"xor", "xnor"}));
    demo->add_option("--labels", labels, "Initial h labels x0x1x2x3");
    demo->add_flag("--json", json, "JSON output");

    auto *subspaces = app.add_subcommand("subspaces", "Count the subspaces of an N-bit superposition");
    int sub_bits = 0;
    subspaces->add_option("N", sub_bits, "Noise-bits")->required()->check(CLI::Range(1, 24));

    auto *ortho = app.add_subcommand("orthogonality", "Empirical RTW orthogonality checks");
    int ortho_bits = 0;
    std::uint64_t ortho_cycles = 0;
    ortho->add_option("N", ortho_bits, "Noise-bits")->required()->check(CLI::Range(1, inbl::kMaxBits));
    ortho->add_option("M", ortho_cycles, "Cycles (>= 10000)")->required()->check(CLI::Range(std::uint64_t{10000},
                                                                                         std::uint64_t{1} << 40));
    ortho->add_option("--seed", seed, "Seed");
    ortho->add_flag("--json", json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*run) {
            const inbl::CircuitFile circuit = inbl::parse_circuit(read_file(circuit_path));
            inbl::RunOptions options;
            if (*seed_opt) options.seed = seed;
            if (*verify_opt) options.verify_signal = verify_signal;
            if (*stats_opt) options.stats = stats;
            if (*dump_opt) options.waveform_cycles = cycles;
            const inbl::RunReport report = inbl::run_circuit(circuit, options);
            if (report.waveform) {
                std::ofstream out(waveform_path);
                if (!out) throw inbl::ArgumentError("cannot write '" + waveform_path + "'");
                inbl::write_waveform_csv(out, *report.waveform);
            }
            if (json) {
                std::cout << inbl::run_report_to_json(report).dump(2) << '\n';
            } else {
                std::cout << inbl::run_report_to_text(report);
            }
            return report.ok() ? kExitOk : kExitVerification;
        }
        if (*demo) return run_demo(demo_gate, labels, json);
        if (*subspaces) {
            std::cout << inbl::subspace_count(sub_bits) << '\n';
            return kExitOk;
        }
        if (*ortho) return run_orthogonality(ortho_bits, ortho_cycles, seed, json);
    } catch (const inbl::ParseError &e) {
        std::cerr << circuit_path << ":" << e.line() << ":" << e.column() << ": error: " << e.message() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
