#include "inbl/circuit.hpp"

#include <charconv>
#include <map>
#include <sstream>

#include "inbl/errors.hpp"

namespace inbl {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t k = 0;
    while (k < line.size()) {
        if (line[k] == '#') break;
        if (line[k] == ' ' || line[k] == '\t' || line[k] == '\r') {
            ++k;
            continue;
        }
        const std::size_t start = k;
        while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r' && line[k] != '#') ++k;
        out.push_back({line.substr(start, k - start), start + 1});
    }
    return out;
}

class LineParser {
public:
    LineParser(std::vector<Token> tokens, std::size_t line) : tokens_(std::move(tokens)), line_(line) {}

    [[noreturn]] void fail(const std::string &message, std::size_t column) const {
        throw ParseError(message, line_, column);
    }

    std::size_t end_column() const {
        return tokens_.empty() ? 1 : tokens_.back().column + tokens_.back().text.size();
    }

    const Token &at(std::size_t k, const char *expected) const {
        if (k >= tokens_.size()) fail(std::string("expected ") + expected, end_column());
        return tokens_[k];
    }

    std::uint64_t unsigned_at(std::size_t k, const char *expected) const {
        const Token &t = at(k, expected);
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
            fail(std::string("expected ") + expected + ", got '" + std::string(t.text) + "'", t.column);
        }
        return v;
    }

    int bit_at(std::size_t k, int n_bits) const {
        const std::uint64_t v = unsigned_at(k, "a bit index");
        if (v < 1 || v > static_cast<std::uint64_t>(n_bits)) {
            fail("bit index " + std::to_string(v) + " outside [1, " + std::to_string(n_bits) + "]", tokens_[k].column);
        }
        return static_cast<int>(v);
    }

    void expect_end(std::size_t k) const {
        if (k < tokens_.size()) fail("unexpected '" + std::string(tokens_[k].text) + "'", tokens_[k].column);
    }

    const std::vector<Token> &tokens() const { return tokens_; }

private:
    std::vector<Token> tokens_;
    std::size_t line_;
};

// Parses "<i> <f> -> <h>" starting at token 1, returns the next token index.
std::size_t parse_two_input(const LineParser &p, int n_bits, int &i, int &f, int &h) {
    i = p.bit_at(1, n_bits);
    f = p.bit_at(2, n_bits);
    const Token &arrow = p.at(3, "'->'");
    if (arrow.text != "->") p.fail("expected '->', got '" + std::string(arrow.text) + "'", arrow.column);
    h = p.bit_at(4, n_bits);
    if (i == f || i == h || f == h) {
        p.fail("gate bits must be pairwise distinct, got " + std::to_string(i) + " " + std::to_string(f) + " -> " +
                   std::to_string(h),
               p.tokens()[0].column);
    }
    return 5;
}

}  // namespace

Superposition CircuitFile::superposition() const {
    std::vector<StringTerm> terms;
    terms.reserve(inits.size());
    for (const auto &init : inits) terms.emplace_back(n_bits, init.value, init.multiplicity);
    return Superposition(terms);
}

CircuitFile parse_circuit(std::string_view text) {
    CircuitFile circuit;
    bool have_bits = false;
    std::uint64_t total = 0;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        LineParser p(tokenize(line), line_no);
        if (p.tokens().empty()) continue;
        const Token &head = p.tokens()[0];
        const std::string_view directive = head.text;

        if (!have_bits) {
            if (directive != "bits") p.fail("missing 'bits' directive; it must come first", head.column);
            const std::uint64_t n = p.unsigned_at(1, "the number of noise-bits");
            if (n < 1 || n > static_cast<std::uint64_t>(kMaxBits)) {
                p.fail("number of noise-bits must be in [1, " + std::to_string(kMaxBits) + "]", p.tokens()[1].column);
            }
            p.expect_end(2);
            circuit.n_bits = static_cast<int>(n);
            have_bits = true;
            continue;
        }

        const int n_bits = circuit.n_bits;
        if (directive == "bits") {
            p.fail("duplicate 'bits' directive", head.column);
        } else if (directive == "seed") {
            if (circuit.seed) p.fail("duplicate 'seed' directive", head.column);
            circuit.seed = p.unsigned_at(1, "a 64-bit seed");
            p.expect_end(2);
        } else if (directive == "init") {
            const Token &lit = p.at(1, "a binary literal");
            if (lit.text.size() != static_cast<std::size_t>(n_bits)) {
                p.fail("literal length " + std::to_string(lit.text.size()) + " != " + std::to_string(n_bits),
                       lit.column);
            }
            for (std::size_t k = 0; k < lit.text.size(); ++k) {
                if (lit.text[k] != '0' && lit.text[k] != '1') {
                    p.fail("literal character '" + std::string(1, lit.text[k]) + "' is not 0 or 1", lit.column + k);
                }
            }
            InitTerm init{parse_binary_literal(lit.text, n_bits), 1};
            std::size_t next = 2;
            if (p.tokens().size() > 2) {
                const Token &mult = p.tokens()[2];
                std::uint64_t k = 0;
                auto [ptr, ec] = std::from_chars(mult.text.data() + 1, mult.text.data() + mult.text.size(), k);
                if (mult.text.size() < 2 || mult.text[0] != 'x' || ec != std::errc() ||
                    ptr != mult.text.data() + mult.text.size() || k == 0) {
                    p.fail("expected multiplicity 'x<K>' with K >= 1, got '" + std::string(mult.text) + "'",
                           mult.column);
                }
                init.multiplicity = k;
                next = 3;
            }
            p.expect_end(next);
            if (init.multiplicity > max_strings(n_bits) - total) {
                p.fail("more than " + std::to_string(max_strings(n_bits)) + " strings for " + std::to_string(n_bits) +
                           " noise-bits",
                       head.column);
            }
            total += init.multiplicity;
            circuit.inits.push_back(init);
        } else if (directive == "not" || directive == "clear") {
            const int h = p.bit_at(1, n_bits);
            p.expect_end(2);
            if (directive == "not") {
                circuit.schedule.emplace_back(NotGate{h});
            } else {
                circuit.schedule.emplace_back(ClearGate{h});
            }
        } else if (directive == "xor") {
            XorGate g{0, 0, 0};
            std::size_t next = parse_two_input(p, n_bits, g.i, g.f, g.h);
            if (next < p.tokens().size() && p.tokens()[next].text == "alt") {
                g.variant = XorVariant::zeros;
                ++next;
            }
            p.expect_end(next);
            circuit.schedule.emplace_back(g);
        } else if (directive == "xnor") {
            XnorGate g{0, 0, 0};
            std::size_t next = parse_two_input(p, n_bits, g.i, g.f, g.h);
            bool alt = false, vianot = false;
            for (; next < p.tokens().size(); ++next) {
                const Token &opt = p.tokens()[next];
                if (opt.text == "alt" && !alt) {
                    alt = true;
                } else if (opt.text == "vianot" && !vianot) {
                    vianot = true;
                } else {
                    break;
                }
            }
            p.expect_end(next);
            g.variant = alt ? XnorVariant::alternate : XnorVariant::standard;
            g.mode = vianot ? XnorMode::via_not : XnorMode::direct;
            circuit.schedule.emplace_back(g);
        } else {
            p.fail("unknown directive '" + std::string(directive) + "'", head.column);
        }
    }

    if (!have_bits) throw ParseError("missing 'bits' directive", line_no == 0 ? 1 : line_no, 1);
    if (circuit.inits.empty()) throw ParseError("circuit has no 'init' strings", line_no, 1);
    return circuit;
}

std::string print_circuit(const CircuitFile &circuit) {
    std::ostringstream out;
    out << "bits " << circuit.n_bits << '\n';
    if (circuit.seed) out << "seed " << *circuit.seed << '\n';
    for (const auto &init : circuit.inits) {
        out << "init " << binary_literal(init.value, circuit.n_bits);
        if (init.multiplicity != 1) out << " x" << init.multiplicity;
        out << '\n';
    }
    for (const auto &g : circuit.schedule) out << to_string(g) << '\n';
    return out.str();
}

namespace {

std::uint64_t alternate_seed(std::uint64_t seed) { return (seed ^ 0x9e3779b97f4a7c15ULL) * 0xbf58476d1ce4e5b9ULL + 1; }

Report presence_checks(const Superposition &sup, const WireTable &table, std::uint64_t cycles, const char *suffix) {
    std::map<GeneratorMask, std::uint64_t> present;
    for (const auto &term : sup.terms()) present[realized_mask(term, table)] += term.multiplicity();

    const Waveform wf = engine_waveform(sup, table, cycles);
    const double bound = presence_bound(sup.total_multiplicity(), cycles);
    Report report;
    for (const auto &[mask, mult] : present) {
        const double p = statistical_presence(wf, mask, table.seed(), cycles);
        report.add("presence " + mask.to_hex() + suffix, std::abs(p - static_cast<double>(mult)) <= bound, p, bound);
    }
    // One string that the superposition does not carry, when there is one.
    for (std::uint64_t r = 0; r < max_strings(table.n_bits()) && r < 4096; ++r) {
        const GeneratorMask m = realized_mask(string_from_number(r, table.n_bits()), table);
        if (present.contains(m)) continue;
        const double p = statistical_presence(wf, m, table.seed(), cycles);
        report.add("absence " + m.to_hex() + suffix, std::abs(p) <= bound, p, bound);
        break;
    }
    return report;
}

std::string mask_as_product(const GeneratorMask &m) {
    if (m.is_identity()) return "1";
    std::string out;
    for (std::size_t k : m.support()) {
        const GeneratorId id = generator_id(k);
        if (!out.empty()) out += '*';
        out += "R" + std::to_string(id.significance) + "," + std::to_string(id.value);
    }
    return out;
}

std::string superposition_text(const Superposition &sup) {
    std::string out;
    for (const auto &t : sup.terms()) {
        if (!out.empty()) out += " + ";
        if (t.multiplicity() != 1) out += std::to_string(t.multiplicity()) + "*";
        out += "X[" + t.literal() + "]";
    }
    return out;
}

}  // namespace

RunReport run_circuit(const CircuitFile &circuit, const RunOptions &options) {
    const std::uint64_t seed = options.seed.value_or(circuit.effective_seed());
    const Superposition sup = circuit.superposition();
    ReferenceSystem sys(circuit.n_bits, seed);

    RunReport report{circuit.n_bits, seed, decode_superposition(sup, sys.table()), std::nullopt, {}, sys.table(), 0, {},
                     std::nullopt};
    apply_schedule(sys, circuit.schedule);
    report.wires = sys.table();
    report.mul_counter = sys.mul_counter();
    try {
        report.after = decode_superposition(sup, sys.table());
    } catch (const UndecodableError &e) {
        report.error = e.what();
    }

    if (options.verify_signal) {
        const std::uint64_t m = *options.verify_signal;
        const OracleVerdict v = check_engine_vs_signal(circuit.n_bits, seed, sup, circuit.schedule, m);
        report.verification.add("signal oracle", v.agree,
                                static_cast<double>(v.first_divergence.value_or(m)), static_cast<double>(m));
    }
    if (options.stats) {
        Report stats = presence_checks(sup, sys.table(), *options.stats, "");
        if (!stats.passed()) {
            ReferenceSystem retry(circuit.n_bits, alternate_seed(seed));
            apply_schedule(retry, circuit.schedule);
            stats = presence_checks(sup, retry.table(), *options.stats, " (retry seed)");
        }
        report.verification.append(stats);
    }
    if (options.waveform_cycles) report.waveform = engine_waveform(sup, sys.table(), *options.waveform_cycles);
    return report;
}

nlohmann::json run_report_to_json(const RunReport &report) {
    nlohmann::json j;
    j["bits"] = report.n_bits;
    j["seed"] = report.seed;
    j["before"] = superposition_to_json(report.before);
    j["after"] = report.after ? superposition_to_json(*report.after) : nlohmann::json(nullptr);
    if (!report.error.empty()) j["error"] = report.error;
    j["wires"] = wire_table_to_json(report.wires);
    j["mul_counter"] = report.mul_counter;
    j["verification"] = report_to_json(report.verification);
    j["ok"] = report.ok();
    return j;
}

std::string run_report_to_text(const RunReport &report) {
    std::ostringstream out;
    out << "bits " << report.n_bits << ", seed " << report.seed << '\n';
    out << "before: " << superposition_text(report.before) << '\n';
    if (report.after) {
        out << "after:  " << superposition_text(*report.after) << '\n';
    } else {
        out << "after:  undecodable (" << report.error << ")\n";
    }
    out << "multiplications: " << report.mul_counter << '\n';
    out << "wires:\n";
    for (std::size_t k = 0; k < report.wires.wires().size(); ++k) {
        const GeneratorId id = generator_id(k);
        const GeneratorMask &m = report.wires.wires()[k];
        out << "  (" << id.significance << "," << id.value << ") = " << mask_as_product(m) << "  [" << m.to_hex()
            << "]\n";
    }
    for (const auto &c : report.verification.checks) {
        out << (c.pass ? "PASS " : "FAIL ") << c.name << ": observed " << c.observed << ", bound " << c.bound << '\n';
    }
    return out.str();
}

void write_waveform_csv(std::ostream &out, const Waveform &waveform) {
    out << "t,sum\n";
    for (std::size_t t = 0; t < waveform.size(); ++t) out << t << ',' << waveform.samples[t] << '\n';
}

}  // namespace inbl
