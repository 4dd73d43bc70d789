#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "inbl/gates.hpp"
#include "inbl/generator_mask.hpp"
#include "inbl/logic.hpp"
#include "inbl/reference_system.hpp"

#include "json.hpp"

namespace inbl {

// Output-wire signal: one integer per clock cycle.
struct Waveform {
    std::vector<std::int64_t> samples;

    std::size_t size() const noexcept { return samples.size(); }
    friend bool operator==(const Waveform &, const Waveform &) = default;
};

// Waveform of a superposition under a wire table, through the mask engine.
Waveform engine_waveform(const Superposition &sup, const WireTable &table, std::uint64_t cycles);

/// Signal-level simulation of a superposition riding on gated reference wires.
///
/// Every cycle samples the base generators, forms each reference wire by
/// literal +1/-1 multiplications with the multiplier R_{h,0} R_{h,1} of each
/// scheduled gate, multiplies out each string and sums. No generator masks are
/// involved, so this path is an independent check of the mask engine.
/// Throws ScheduleError for an invalid schedule.
Waveform signal_simulate(int n_bits, std::uint64_t seed, const Superposition &sup, const GateSchedule &schedule,
                         std::uint64_t cycles);

struct OracleVerdict {
    bool agree = true;
    std::optional<std::uint64_t> first_divergence;

    explicit operator bool() const noexcept { return agree; }
};

// Sample-by-sample equality; a length mismatch diverges at the shorter length.
OracleVerdict compare_waveforms(const Waveform &a, const Waveform &b);

// Runs the schedule through the mask engine and the signal simulator and compares.
OracleVerdict check_engine_vs_signal(int n_bits, std::uint64_t seed, const Superposition &sup,
                                     const GateSchedule &schedule, std::uint64_t cycles);

struct Check {
    std::string name;
    bool pass = false;
    double observed = 0.0;
    double bound = 0.0;
};

struct Report {
    std::vector<Check> checks;

    bool passed() const noexcept;
    std::size_t failures() const noexcept;
    void add(std::string name, bool pass, double observed, double bound);
    void append(const Report &other);
};

// {"checks": [{"name", "pass", "observed", "bound"}, ...]}
nlohmann::json report_to_json(const Report &report);

enum class TruthTableGate { xor_gate, xnor_gate };

// Four strings with (i, f) = (0,0), (1,0), (0,1), (1,1) on bits 1 and 2, for
// all 16 choices of their initial labels on bit 3; bits above 3 carry
// seed-derived payloads. Applies every construction of the gate to a fresh
// system and checks the decoded output bit and the untouched payloads.
// observed = mismatching strings, bound = 0. Throws ArgumentError for n_bits < 3.
Report truth_table_check(TruthTableGate gate, int n_bits, std::uint64_t seed);

// (1/M) sum_t waveform(t) * probe(t) over the first `cycles` samples: the
// multiplicity of strings realizing `probe`, plus zero-mean noise from all the
// others. Throws ArgumentError if cycles is 0 or exceeds the waveform.
double statistical_presence(const Waveform &waveform, const GeneratorMask &probe, std::uint64_t seed,
                            std::uint64_t cycles);

// 5 sqrt(K) / sqrt(M).
double presence_bound(std::uint64_t total_multiplicity, std::uint64_t cycles);

// Identity mean exactly 1; every generator, every generator pair and 50 random
// product masks within 5/sqrt(M) of zero. Throws ArgumentError for cycles < 10^4.
Report orthogonality_suite(std::uint64_t seed, int n_bits, std::uint64_t cycles);

}  // namespace inbl
