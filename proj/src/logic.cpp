#include "inbl/logic.hpp"

#include <algorithm>
#include <map>

#include "inbl/errors.hpp"

namespace inbl {

namespace {

bool fits(std::uint64_t bits, int n_bits) { return n_bits >= 64 || (bits >> n_bits) == 0; }

void check_bits(int n_bits) {
    if (n_bits < 1 || n_bits > kMaxBits) {
        throw ArgumentError("number of noise-bits must be in [1, " + std::to_string(kMaxBits) + "], got " +
                            std::to_string(n_bits));
    }
}

void check_same_n(int a, int b, const char *what) {
    if (a != b) {
        throw DimensionError(std::string(what) + ": " + std::to_string(a) + "-bit term against " +
                             std::to_string(b) + "-bit wire table");
    }
}

}  // namespace

StringTerm::StringTerm(int n_bits, std::uint64_t bits, std::uint64_t multiplicity)
    : n_bits_(n_bits), bits_(bits), multiplicity_(multiplicity) {
    check_bits(n_bits);
    if (!fits(bits, n_bits)) throw ArgumentError("assignment does not fit in " + std::to_string(n_bits) + " bits");
    if (multiplicity == 0) throw ArgumentError("string multiplicity must be at least 1");
}

int StringTerm::value_at(int significance) const {
    if (significance < 1 || significance > n_bits_) {
        throw IndexError("significance " + std::to_string(significance) + " outside [1, " + std::to_string(n_bits_) +
                         "]");
    }
    return static_cast<int>((bits_ >> (significance - 1)) & 1u);
}

std::string StringTerm::literal() const { return binary_literal(bits_, n_bits_); }

StringTerm string_from_number(std::uint64_t r, int n_bits) {
    check_bits(n_bits);
    if (!fits(r, n_bits)) {
        throw ArgumentError("number " + std::to_string(r) + " not representable with " + std::to_string(n_bits) +
                            " noise-bits");
    }
    return StringTerm(n_bits, r, 1);
}

std::uint64_t parse_binary_literal(std::string_view literal, int n_bits) {
    if (literal.size() != static_cast<std::size_t>(n_bits)) {
        throw ArgumentError("literal length " + std::to_string(literal.size()) + " != " + std::to_string(n_bits));
    }
    std::uint64_t bits = 0;
    for (char c : literal) {
        if (c != '0' && c != '1') throw ArgumentError("literal '" + std::string(literal) + "' is not binary");
        bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return bits;
}

std::string binary_literal(std::uint64_t bits, int n_bits) {
    std::string out(static_cast<std::size_t>(n_bits), '0');
    for (int i = 0; i < n_bits; ++i) {
        if ((bits >> i) & 1u) out[static_cast<std::size_t>(n_bits - 1 - i)] = '1';
    }
    return out;
}

std::uint64_t max_strings(int n_bits) noexcept {
    return n_bits >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << n_bits;
}

Superposition::Superposition(std::span<const StringTerm> terms) {
    if (terms.empty()) throw ArgumentError("a superposition needs at least one string");
    n_bits_ = terms.front().n_bits();
    std::map<std::uint64_t, std::uint64_t> merged;
    for (const auto &t : terms) {
        if (t.n_bits() != n_bits_) throw ArgumentError("all strings of a superposition must share N");
        if (t.multiplicity() > max_strings(n_bits_) - total_) {
            throw ArgumentError("superposition exceeds the " + std::to_string(max_strings(n_bits_)) +
                                " strings available with " + std::to_string(n_bits_) + " noise-bits");
        }
        total_ += t.multiplicity();
        merged[t.bits()] += t.multiplicity();
    }
    terms_.reserve(merged.size());
    for (const auto &[bits, mult] : merged) terms_.emplace_back(n_bits_, bits, mult);
}

std::uint64_t Superposition::multiplicity_of(std::uint64_t bits) const noexcept {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), bits,
                               [](const StringTerm &t, std::uint64_t b) { return t.bits() < b; });
    return (it != terms_.end() && it->bits() == bits) ? it->multiplicity() : 0;
}

nlohmann::json superposition_to_json(const Superposition &sup) {
    auto terms = nlohmann::json::array();
    for (const auto &t : sup.terms()) terms.push_back({{"value", t.literal()}, {"mult", t.multiplicity()}});
    return {{"bits", sup.n_bits()}, {"terms", std::move(terms)}};
}

Superposition superposition_from_json(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("bits") || !j.contains("terms") || !j["bits"].is_number_integer() ||
        !j["terms"].is_array()) {
        throw ArgumentError("superposition JSON needs integer 'bits' and array 'terms'");
    }
    const int n = j["bits"].get<int>();
    std::vector<StringTerm> terms;
    for (const auto &t : j["terms"]) {
        if (!t.is_object() || !t.contains("value") || !t["value"].is_string() || !t.contains("mult") ||
            !t["mult"].is_number_unsigned()) {
            throw ArgumentError("superposition term needs string 'value' and positive 'mult'");
        }
        terms.emplace_back(n, parse_binary_literal(t["value"].get<std::string>(), n),
                           t["mult"].get<std::uint64_t>());
    }
    return Superposition(terms);
}

GeneratorMask realized_mask(const StringTerm &term, const WireTable &table) {
    check_same_n(term.n_bits(), table.n_bits(), "realized_mask");
    GeneratorMask acc = GeneratorMask::identity(table.mask_width());
    for (int i = 1; i <= term.n_bits(); ++i) acc ^= table.wire(GeneratorId{i, term.value_at(i)});
    return acc;
}

std::int64_t eval_superposition(const Superposition &sup, const WireTable &table, ClockIndex t) {
    std::int64_t sum = 0;
    for (const auto &term : sup.terms()) {
        sum += static_cast<std::int64_t>(term.multiplicity()) * eval_mask(table.seed(), realized_mask(term, table), t);
    }
    return sum;
}

std::uint64_t decode_term(const StringTerm &term, const WireTable &table) {
    const GeneratorMask m = realized_mask(term, table);
    std::uint64_t out = 0;
    for (int i = 1; i <= table.n_bits(); ++i) {
        const std::size_t zero = generator_index(GeneratorId{i, 0}, table.n_bits());
        const bool has0 = m.test(zero);
        const bool has1 = m.test(zero + 1);
        if (has0 == has1) {
            throw UndecodableError("string " + term.literal() + " realizes " + (has0 ? "both" : "neither") +
                                       " wire of significance " + std::to_string(i),
                                   i);
        }
        if (has1) out |= std::uint64_t{1} << (i - 1);
    }
    return out;
}

Superposition decode_superposition(const Superposition &sup, const WireTable &table) {
    std::vector<StringTerm> decoded;
    decoded.reserve(sup.terms().size());
    for (const auto &term : sup.terms()) {
        decoded.emplace_back(sup.n_bits(), decode_term(term, table), term.multiplicity());
    }
    return Superposition(decoded);
}

boost::multiprecision::cpp_int subspace_count(int n_bits) {
    if (n_bits < 1) throw ArgumentError("subspace_count needs at least one noise-bit");
    if (n_bits > 24) throw ArgumentError("2^(2^N) - 1 is too large to materialize for N > 24");
    boost::multiprecision::cpp_int one = 1;
    return (one << (std::size_t{1} << n_bits)) - 1;
}

}  // namespace inbl
