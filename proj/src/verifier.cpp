#include "inbl/verifier.hpp"

#include <array>
#include <cmath>
#include <random>

#include "inbl/errors.hpp"
#include "inbl/rtw.hpp"

namespace inbl {

namespace {

// Wire lists the multiplier R_{h,0} R_{h,1} of one hardware stage feeds.
struct Stage {
    int h;
    std::vector<std::pair<int, int>> wires;  // (significance, value)
};

std::vector<Stage> stages_of(const Gate &gate) {
    std::vector<Stage> out;
    std::visit(
        [&out](const auto &g) {
            using G = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<G, NotGate>) {
                out.push_back({g.h, {{g.h, 0}, {g.h, 1}}});
            } else if constexpr (std::is_same_v<G, ClearGate>) {
                out.push_back({g.h, {{g.h, 1}}});
            } else if constexpr (std::is_same_v<G, XorGate>) {
                const int v = g.variant == XorVariant::ones ? 1 : 0;
                out.push_back({g.h, {{g.h, 1}, {g.i, v}, {g.f, v}}});
            } else if (g.mode == XnorMode::direct) {
                const int v = g.variant == XnorVariant::standard ? 1 : 0;
                out.push_back({g.h, {{g.h, 1}, {g.i, v}, {g.f, 1 - v}}});
            } else {
                const int v = g.variant == XnorVariant::standard ? 1 : 0;
                out.push_back({g.h, {{g.h, 1}, {g.i, v}, {g.f, v}}});
                out.push_back({g.h, {{g.h, 0}, {g.h, 1}}});
            }
        },
        gate);
    return out;
}

std::size_t wire_slot(int significance, int value) {
    return 2 * static_cast<std::size_t>(significance - 1) + static_cast<std::size_t>(value);
}

}  // namespace

Waveform engine_waveform(const Superposition &sup, const WireTable &table, std::uint64_t cycles) {
    std::vector<GeneratorMask> masks;
    std::vector<std::int64_t> mults;
    for (const auto &term : sup.terms()) {
        masks.push_back(realized_mask(term, table));
        mults.push_back(static_cast<std::int64_t>(term.multiplicity()));
    }
    const auto total = static_cast<std::int64_t>(sup.total_multiplicity());
    Waveform wf;
    wf.samples.resize(cycles);
    std::vector<std::uint64_t> blocks(masks.size());
    for (std::uint64_t t0 = 0; t0 < cycles; t0 += kCyclesPerBlock) {
        const std::uint64_t b = t0 / kCyclesPerBlock;
        for (std::size_t k = 0; k < masks.size(); ++k) blocks[k] = mask_block(table.seed(), masks[k], b);
        const std::uint64_t end = std::min<std::uint64_t>(cycles, t0 + kCyclesPerBlock);
        for (std::uint64_t t = t0; t < end; ++t) {
            std::int64_t negative = 0;
            for (std::size_t k = 0; k < masks.size(); ++k) {
                if ((blocks[k] >> (t - t0)) & 1u) negative += mults[k];
            }
            wf.samples[t] = total - 2 * negative;
        }
    }
    return wf;
}

Waveform signal_simulate(int n_bits, std::uint64_t seed, const Superposition &sup, const GateSchedule &schedule,
                         std::uint64_t cycles) {
    validate_schedule(schedule, n_bits);
    if (sup.n_bits() != n_bits) throw DimensionError("superposition and system disagree on N");
    std::vector<Stage> stages;
    for (const auto &g : schedule) {
        for (auto &s : stages_of(g)) stages.push_back(std::move(s));
    }

    const std::size_t width = 2 * static_cast<std::size_t>(n_bits);
    std::vector<int> base(width);
    std::vector<int> wire(width);
    Waveform wf;
    wf.samples.resize(cycles);
    for (std::uint64_t t = 0; t < cycles; ++t) {
        for (std::size_t k = 0; k < width; ++k) base[k] = sample_generator(seed, k, t);
        wire = base;
        for (const auto &stage : stages) {
            const int multiplier = base[wire_slot(stage.h, 0)] * base[wire_slot(stage.h, 1)];
            for (auto [s, v] : stage.wires) wire[wire_slot(s, v)] *= multiplier;
        }
        std::int64_t sum = 0;
        for (const auto &term : sup.terms()) {
            int product = 1;
            for (int i = 1; i <= n_bits; ++i) product *= wire[wire_slot(i, term.value_at(i))];
            sum += static_cast<std::int64_t>(term.multiplicity()) * product;
        }
        wf.samples[t] = sum;
    }
    return wf;
}

OracleVerdict compare_waveforms(const Waveform &a, const Waveform &b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t t = 0; t < n; ++t) {
        if (a.samples[t] != b.samples[t]) return {false, t};
    }
    if (a.size() != b.size()) return {false, n};
    return {};
}

OracleVerdict check_engine_vs_signal(int n_bits, std::uint64_t seed, const Superposition &sup,
                                     const GateSchedule &schedule, std::uint64_t cycles) {
    ReferenceSystem sys(n_bits, seed);
    apply_schedule(sys, schedule);
    return compare_waveforms(engine_waveform(sup, sys.table(), cycles),
                             signal_simulate(n_bits, seed, sup, schedule, cycles));
}

bool Report::passed() const noexcept { return failures() == 0; }

std::size_t Report::failures() const noexcept {
    std::size_t n = 0;
    for (const auto &c : checks) n += c.pass ? 0 : 1;
    return n;
}

void Report::add(std::string name, bool pass, double observed, double bound) {
    checks.push_back({std::move(name), pass, observed, bound});
}

void Report::append(const Report &other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

nlohmann::json report_to_json(const Report &report) {
    auto checks = nlohmann::json::array();
    for (const auto &c : report.checks) {
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"observed", c.observed}, {"bound", c.bound}});
    }
    return {{"checks", std::move(checks)}};
}

Report truth_table_check(TruthTableGate gate, int n_bits, std::uint64_t seed) {
    if (n_bits < 3) throw ArgumentError("the truth-table scenario needs at least 3 noise-bits");
    constexpr int i = 1, f = 2, h = 3;

    struct Construction {
        std::string name;
        Gate gate;
    };
    std::vector<Construction> constructions;
    if (gate == TruthTableGate::xor_gate) {
        constructions = {{"xor/ones", XorGate{i, f, h, XorVariant::ones}},
                         {"xor/zeros", XorGate{i, f, h, XorVariant::zeros}}};
    } else {
        constructions = {{"xnor/direct", XnorGate{i, f, h, XnorMode::direct, XnorVariant::standard}},
                         {"xnor/direct-alt", XnorGate{i, f, h, XnorMode::direct, XnorVariant::alternate}},
                         {"xnor/via-not", XnorGate{i, f, h, XnorMode::via_not, XnorVariant::standard}}};
    }
    const bool invert = gate == TruthTableGate::xnor_gate;

    std::mt19937_64 rng(seed);
    std::array<std::uint64_t, 4> payload{};
    for (auto &p : payload) p = n_bits > 3 ? (rng() & (max_strings(n_bits) - 1)) & ~std::uint64_t{7} : 0;

    Report report;
    for (const auto &c : constructions) {
        for (unsigned labels = 0; labels < 16; ++labels) {
            std::vector<StringTerm> terms;
            for (unsigned k = 0; k < 4; ++k) {
                const std::uint64_t in_i = k & 1u, in_f = (k >> 1) & 1u, x = (labels >> k) & 1u;
                terms.emplace_back(n_bits, payload[k] | in_i | (in_f << 1) | (x << 2));
            }
            ReferenceSystem sys(n_bits, seed);
            apply_gate(sys, c.gate);
            std::size_t mismatches = 0;
            for (const auto &term : terms) {
                std::uint64_t expected = term.bits() & ~std::uint64_t{4};
                const unsigned out = static_cast<unsigned>(term.value_at(i) ^ term.value_at(f)) ^ (invert ? 1u : 0u);
                expected |= std::uint64_t{out} << 2;
                try {
                    if (decode_term(term, sys.table()) != expected) ++mismatches;
                } catch (const UndecodableError &) {
                    ++mismatches;
                }
            }
            std::string label = "x=";
            for (unsigned k = 0; k < 4; ++k) label += static_cast<char>('0' + ((labels >> k) & 1u));
            report.add(c.name + " " + label, mismatches == 0, static_cast<double>(mismatches), 0.0);
        }
    }
    return report;
}

double statistical_presence(const Waveform &waveform, const GeneratorMask &probe, std::uint64_t seed,
                            std::uint64_t cycles) {
    if (cycles == 0) throw ArgumentError("statistical_presence needs at least one cycle");
    if (cycles > waveform.size()) throw ArgumentError("waveform shorter than the requested cycle count");
    std::int64_t acc = 0;
    for (std::uint64_t t0 = 0; t0 < cycles; t0 += kCyclesPerBlock) {
        const std::uint64_t bits = mask_block(seed, probe, t0 / kCyclesPerBlock);
        const std::uint64_t end = std::min<std::uint64_t>(cycles, t0 + kCyclesPerBlock);
        for (std::uint64_t t = t0; t < end; ++t) {
            const std::int64_t v = waveform.samples[t];
            acc += ((bits >> (t - t0)) & 1u) ? -v : v;
        }
    }
    return static_cast<double>(acc) / static_cast<double>(cycles);
}

double presence_bound(std::uint64_t total_multiplicity, std::uint64_t cycles) {
    return 5.0 * std::sqrt(static_cast<double>(total_multiplicity)) / std::sqrt(static_cast<double>(cycles));
}

Report orthogonality_suite(std::uint64_t seed, int n_bits, std::uint64_t cycles) {
    if (cycles < 10000) throw ArgumentError("orthogonality_suite needs at least 10^4 cycles");
    const WireTable fresh(n_bits, seed);
    const std::size_t width = fresh.mask_width();
    const double bound = 5.0 / std::sqrt(static_cast<double>(cycles));
    auto zero_mean = [&](const std::string &name, const GeneratorMask &m) {
        const double mean = mean_estimate(seed, m, cycles);
        return Check{name, std::abs(mean) <= bound, mean, bound};
    };

    Report report;
    const double identity = mean_estimate(seed, GeneratorMask::identity(width), cycles);
    report.add("identity", identity == 1.0, identity, 1.0);

    auto name_of = [](std::size_t k) {
        const GeneratorId id = generator_id(k);
        return "R" + std::to_string(id.significance) + "," + std::to_string(id.value);
    };
    for (std::size_t a = 0; a < width; ++a) {
        report.checks.push_back(zero_mean("mean " + name_of(a), GeneratorMask::unit(width, a)));
    }
    for (std::size_t a = 0; a < width; ++a) {
        for (std::size_t b = a + 1; b < width; ++b) {
            GeneratorMask m = GeneratorMask::unit(width, a);
            m.set(b);
            report.checks.push_back(zero_mean("mean " + name_of(a) + "*" + name_of(b), m));
        }
    }
    std::mt19937_64 rng(seed ^ 0x5deece66dULL);
    for (int k = 0; k < 50; ++k) {
        GeneratorMask m(width);
        while (m.is_identity()) {
            for (std::size_t c = 0; c < width; ++c) m.set(c, (rng() >> 17) & 1u);
        }
        report.checks.push_back(zero_mean("mean product " + m.to_hex(), m));
    }
    return report;
}

}  // namespace inbl
