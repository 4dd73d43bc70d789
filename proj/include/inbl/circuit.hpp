#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "inbl/gates.hpp"
#include "inbl/logic.hpp"
#include "inbl/reference_system.hpp"
#include "inbl/verifier.hpp"

#include "json.hpp"

namespace inbl {

struct InitTerm {
    std::uint64_t value = 0;
    std::uint64_t multiplicity = 1;
    friend bool operator==(const InitTerm &, const InitTerm &) = default;
};

struct CircuitFile {
    int n_bits = 0;
    std::optional<std::uint64_t> seed;
    std::vector<InitTerm> inits;
    GateSchedule schedule;

    std::uint64_t effective_seed() const noexcept { return seed.value_or(0); }
    Superposition superposition() const;

    friend bool operator==(const CircuitFile &, const CircuitFile &) = default;
};

/// Parses the line-oriented circuit format:
///
///     # comment
///     bits 3
///     seed 42
///     init 110 x2
///     not 1
///     clear 2
///     xor 1 2 -> 3 [alt]
///     xnor 1 2 -> 3 [alt] [vianot]
///
/// `bits` must be the first directive. Literals are MSB first, so significance
/// 1 is the rightmost character. Throws ParseError with 1-based line and column.
CircuitFile parse_circuit(std::string_view text);

// Canonical text; parse_circuit(print_circuit(c)) == c.
std::string print_circuit(const CircuitFile &circuit);

struct RunOptions {
    std::optional<std::uint64_t> seed;           // overrides the file's seed
    std::optional<std::uint64_t> verify_signal;  // cycles for the signal-level oracle
    std::optional<std::uint64_t> stats;          // cycles for the statistical presence check
    std::optional<std::uint64_t> waveform_cycles;
};

struct RunReport {
    int n_bits = 0;
    std::uint64_t seed = 0;
    Superposition before;
    std::optional<Superposition> after;
    std::string error;  // set when the final wiring is undecodable
    WireTable wires;
    std::uint64_t mul_counter = 0;
    Report verification;
    std::optional<Waveform> waveform;

    bool ok() const noexcept { return after.has_value() && verification.passed(); }
};

// Builds a fresh system, applies the schedule, decodes and runs the requested checks.
RunReport run_circuit(const CircuitFile &circuit, const RunOptions &options = {});

nlohmann::json run_report_to_json(const RunReport &report);
std::string run_report_to_text(const RunReport &report);

// "t,sum" header, then one row per cycle.
void write_waveform_csv(std::ostream &out, const Waveform &waveform);

}  // namespace inbl
