// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "inbl/circuit.hpp"
#include "inbl/errors.hpp"
#include "inbl/gates.hpp"
#include "inbl/logic.hpp"
#include "inbl/verifier.hpp"

using namespace inbl;
using boost::multiprecision::cpp_int;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

struct Criterion {
    int id;
    const char *title;
    double time_limit_s;
    std::function<Outcome()> body;
};

int random_bit(std::mt19937_64 &rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)) + 1; }

void random_triple(std::mt19937_64 &rng, int n, int &i, int &f, int &h) {
    h = random_bit(rng, n);
    do i = random_bit(rng, n); while (i == h);
    do f = random_bit(rng, n); while (f == h || f == i);
}

Superposition random_superposition(std::mt19937_64 &rng, int n, std::uint64_t max_total) {
    const std::uint64_t k = 1 + rng() % std::min<std::uint64_t>(max_total, max_strings(n));
    std::vector<StringTerm> terms;
    for (std::uint64_t q = 0; q < k; ++q) terms.emplace_back(n, rng() & (max_strings(n) - 1));
    return Superposition(terms);
}

Gate random_gate(std::mt19937_64 &rng, int n) {
    const int h = random_bit(rng, n);
    if (n < 3 || rng() % 3 == 0) {
        if (rng() & 1u) return NotGate{h};
        return ClearGate{h};
    }
    int i, f, out;
    random_triple(rng, n, i, f, out);
    if (rng() & 1u) return XorGate{i, f, out, rng() & 1u ? XorVariant::ones : XorVariant::zeros};
    return XnorGate{i, f, out, rng() & 1u ? XnorMode::direct : XnorMode::via_not,
                    rng() & 1u ? XnorVariant::standard : XnorVariant::alternate};
}

WireTable gated(int n, const Gate &g) {
    ReferenceSystem sys(n, 0);
    apply_gate(sys, g);
    return sys.table();
}

Outcome truth_table(TruthTableGate gate, const char *label) {
    const Report r = truth_table_check(gate, 3, 0);
    return {r.passed(), std::to_string(r.checks.size() - r.failures()) + "/" + std::to_string(r.checks.size()) +
                            " " + label + " label/construction cases exact"};
}

Outcome construction_equivalence() {
    std::mt19937_64 rng(3001);
    constexpr int kConfigs = 1000;
    std::size_t compared = 0;
    for (int rep = 0; rep < kConfigs; ++rep) {
        const int n = 3 + static_cast<int>(rng() % 6);
        int i, f, h;
        random_triple(rng, n, i, f, h);
        const Superposition sup = random_superposition(rng, n, 16);
        const std::pair<Gate, Gate> pairs[] = {
            {XorGate{i, f, h, XorVariant::ones}, XorGate{i, f, h, XorVariant::zeros}},
            {XnorGate{i, f, h, XnorMode::direct, XnorVariant::standard},
             XnorGate{i, f, h, XnorMode::direct, XnorVariant::alternate}},
            {XnorGate{i, f, h, XnorMode::direct, XnorVariant::standard},
             XnorGate{i, f, h, XnorMode::via_not, XnorVariant::standard}}};
        for (const auto &[a, b] : pairs) {
            const WireTable ta = gated(n, a), tb = gated(n, b);
            for (const auto &term : sup.terms()) {
                ++compared;
                if (realized_mask(term, ta) != realized_mask(term, tb)) {
                    return {false, to_string(a) + " vs " + to_string(b) + " differ on " + term.literal()};
                }
            }
        }
    }
    return {true, std::to_string(kConfigs) + " configurations, " + std::to_string(compared) + " string masks equal"};
}

Outcome cost_claim() {
    constexpr int n = 10;
    for (std::uint64_t k = 1; k <= 1024; k *= 2) {
        std::vector<StringTerm> terms;
        for (std::uint64_t r = 0; r < k; ++r) terms.push_back(string_from_number(r, n));
        const Superposition sup(terms);
        ReferenceSystem sys(n, 0);
        auto delta = [&sys](auto &&apply) {
            const auto before = sys.mul_counter();
            apply();
            return sys.mul_counter() - before;
        };
        const auto x = delta([&] { xor_gate(sys, 1, 2, 3); });
        const auto xn = delta([&] { xnor_gate(sys, 4, 5, 6, XnorMode::direct); });
        const auto nt = delta([&] { not_gate(sys, 7); });
        (void)decode_superposition(sup, sys.table());
        if (x != 4 || xn != 4 || nt != 3) {
            return {false, "K=" + std::to_string(k) + ": xor " + std::to_string(x) + ", xnor " + std::to_string(xn) +
                               ", not " + std::to_string(nt)};
        }
    }
    return {true, "xor 4, xnor 4, not 3 multiplications for K = 1, 2, 4, ..., 1024"};
}

Outcome involution() {
    std::mt19937_64 rng(5005);
    constexpr int kCases = 200;
    for (int rep = 0; rep < kCases; ++rep) {
        const int n = 3 + static_cast<int>(rng() % 6);
        int i, f, h;
        random_triple(rng, n, i, f, h);
        const Gate gates[] = {XorGate{i, f, h, rng() & 1u ? XorVariant::ones : XorVariant::zeros},
                              XnorGate{i, f, h, XnorMode::direct,
                                       rng() & 1u ? XnorVariant::standard : XnorVariant::alternate},
                              NotGate{h}, ClearGate{h}};
        for (const Gate &g : gates) {
            ReferenceSystem sys(n, rep);
            for (int k = 0; k < static_cast<int>(rng() % 3); ++k) apply_gate(sys, random_gate(rng, n));
            const WireSnapshot before = sys.snapshot();
            apply_gate(sys, g);
            apply_gate(sys, g);
            if (sys.snapshot() != before) return {false, to_string(g) + " twice did not restore the wires"};
        }
    }
    return {true, std::to_string(kCases) + " cases x 4 gates restored bit-exactly"};
}

Outcome oracle_equivalence() {
    std::mt19937_64 rng(6006);
    constexpr int kCases = 100;
    constexpr std::uint64_t kCycles = 10000;
    for (int rep = 0; rep < kCases; ++rep) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const Superposition sup = random_superposition(rng, n, 32);
        GateSchedule sched;
        const int len = static_cast<int>(rng() % 9);
        for (int g = 0; g < len; ++g) sched.push_back(random_gate(rng, n));
        const std::uint64_t seed = rng();
        const OracleVerdict v = check_engine_vs_signal(n, seed, sup, sched, kCycles);
        if (!v.agree) {
            return {false, "case " + std::to_string(rep) + " diverged at t=" + std::to_string(*v.first_divergence)};
        }
    }
    return {true, std::to_string(kCases) + " cases, 10^4 cycles each, sample-exact"};
}

Outcome rtw_identities() {
    constexpr std::uint64_t kCycles = 1000000;
    Report r = orthogonality_suite(42, 4, kCycles);
    std::string note;
    if (!r.passed()) {
        note = " (after seed retry)";
        r = orthogonality_suite(43, 4, kCycles);
    }
    double worst = 0;
    bool identity_exact = false;
    for (const auto &c : r.checks) {
        if (c.name == "identity") {
            identity_exact = c.observed == 1.0;
        } else {
            worst = std::max(worst, std::abs(c.observed));
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu means, worst |mean| %.5f <= %.5f, identity exactly 1%s", r.checks.size(),
                  worst, 5.0 / std::sqrt(static_cast<double>(kCycles)), note.c_str());
    return {r.passed() && identity_exact, buf};
}

Outcome statistical_presence_check() {
    constexpr std::uint64_t kCycles = 100000;
    constexpr double kTolerance = 0.032;
    auto attempt = [&](std::uint64_t seed, double &worst) {
        std::mt19937_64 rng(seed);
        bool ok = true;
        for (int rep = 0; rep < 10; ++rep) {
            const int n = 4;
            std::vector<StringTerm> terms;
            std::uint64_t total = 0;
            while (total < 4) {
                const std::uint64_t m = std::min<std::uint64_t>(1 + rng() % 2, 4 - total);
                terms.emplace_back(n, rng() & 15u, m);
                total += m;
            }
            const Superposition sup(terms);
            ReferenceSystem sys(n, rng());
            for (int g = 0; g < 3; ++g) apply_gate(sys, random_gate(rng, n));
            const Waveform wf = engine_waveform(sup, sys.table(), kCycles);
            for (std::uint64_t r = 0; r < 16; ++r) {
                const StringTerm probe_term(n, r);
                const GeneratorMask probe = realized_mask(probe_term, sys.table());
                std::uint64_t expected = 0;
                for (const auto &t : sup.terms()) {
                    if (realized_mask(t, sys.table()) == probe) expected += t.multiplicity();
                }
                const double err =
                    std::abs(statistical_presence(wf, probe, sys.seed(), kCycles) - static_cast<double>(expected));
                worst = std::max(worst, err);
                ok = ok && err <= kTolerance;
            }
        }
        return ok;
    };
    double worst = 0;
    bool ok = attempt(8008, worst);
    std::string note;
    if (!ok) {
        worst = 0;
        ok = attempt(8009, worst);
        note = " (after seed retry)";
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "10 superpositions x 16 probes, worst error %.4f <= %.3f%s", worst, kTolerance,
                  note.c_str());
    return {ok, buf};
}

cpp_int binomial_subset_sum(std::size_t n) {
    std::vector<cpp_int> row{1};
    for (std::size_t r = 1; r <= n; ++r) {
        std::vector<cpp_int> next(r + 1, 1);
        for (std::size_t k = 1; k < r; ++k) next[k] = row[k - 1] + row[k];
        row = std::move(next);
    }
    cpp_int sum = 0;
    for (std::size_t k = 1; k <= n; ++k) sum += row[k];
    return sum;
}

Outcome subspaces() {
    const int expected[] = {3, 15, 255, 65535};
    std::string detail;
    for (int n = 1; n <= 4; ++n) {
        const cpp_int closed = subspace_count(n);
        if (closed != binomial_subset_sum(std::size_t{1} << n) || closed != expected[n - 1]) {
            return {false, "N=" + std::to_string(n) + " gave " + closed.str()};
        }
        detail += (detail.empty() ? "" : ", ") + closed.str();
    }
    return {true, "closed form = binomial sum: " + detail};
}

Outcome parser() {
    auto error_at = [](const char *text, std::size_t line, const char *needle) {
        try {
            parse_circuit(text);
        } catch (const ParseError &e) {
            return e.line() == line && e.message().find(needle) != std::string::npos;
        }
        return false;
    };
    const CircuitFile basic = parse_circuit("bits 3\ninit 000\ninit 110\nxor 1 2 -> 3");
    if (basic.inits.size() != 2 || basic.schedule.size() != 1) return {false, "basic circuit misparsed"};

    const RunReport xr = run_circuit(parse_circuit("bits 3\ninit 100\ninit 001\ninit 110\ninit 111\nxor 1 2 -> 3"));
    if (!xr.after || xr.mul_counter != 4) return {false, "canonical xor run failed"};
    for (const auto &t : xr.after->terms()) {
        if (t.value_at(3) != (t.value_at(1) ^ t.value_at(2))) return {false, "xor output wrong on " + t.literal()};
    }
    const RunReport empty = run_circuit(parse_circuit("bits 2\ninit 01\ninit 10"));
    if (!empty.after || *empty.after != empty.before) return {false, "empty schedule changed the decoding"};

    if (!error_at("bits 2\ninit 101", 2, "literal length 3 != 2")) return {false, "literal length error"};
    if (!error_at("bits 3\ninit 000\nxor 1 1 -> 2", 3, "distinct")) return {false, "distinctness error"};
    if (!error_at("bits 3\ninit 000\nnand 1 2 -> 3", 3, "unknown directive")) return {false, "unknown directive"};
    return {true, "3 grammar examples and 3 line-numbered error cases as specified"};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "XOR truth table", 1.0, [] { return truth_table(TruthTableGate::xor_gate, "xor"); }},
        {2, "XNOR truth table (direct and via NOT)", 1.0, [] { return truth_table(TruthTableGate::xnor_gate, "xnor"); }},
        {3, "construction equivalences", 10.0, construction_equivalence},
        {4, "multiplication cost per gate", 1.0, cost_claim},
        {5, "involution of repeated gates", 5.0, involution},
        {6, "mask engine vs signal simulator", 30.0, oracle_equivalence},
        {7, "RTW mean and orthogonality identities", 30.0, rtw_identities},
        {8, "statistical presence readout", 10.0, statistical_presence_check},
        {9, "subspace count", 1.0, subspaces},
        {10, "circuit parser", 1.0, parser},
    };

    int failed = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.body();
        } catch (const std::exception &e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.time_limit_s;
        const bool pass = out.pass && in_time;
        failed += pass ? 0 : 1;
        std::printf("[%s] %2d %-40s %s; %.3f s (limit %.0f s)%s\n", pass ? "PASS" : "FAIL", c.id, c.title,
                    out.detail.c_str(), secs, c.time_limit_s, in_time ? "" : " TOO SLOW");
    }
    std::printf("%zu/%zu acceptance criteria passed\n", criteria.size() - static_cast<std::size_t>(failed),
                criteria.size());
    return failed == 0 ? 0 : 1;
}
