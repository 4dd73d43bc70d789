#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "inbl/generator_mask.hpp"
#include "inbl/reference_system.hpp"
#include "inbl/rtw.hpp"

#include "json.hpp"

namespace inbl {

/// One string: a choice of one reference wire per bit significance.
///
/// Bit (i-1) of `bits` is the value selected at significance i. The string
/// signal is the product of the selected wires, times `multiplicity`.
class StringTerm {
public:
    // Throws ArgumentError when bits does not fit in n_bits or multiplicity is 0.
    StringTerm(int n_bits, std::uint64_t bits, std::uint64_t multiplicity = 1);

    int n_bits() const noexcept { return n_bits_; }
    std::uint64_t bits() const noexcept { return bits_; }
    std::uint64_t multiplicity() const noexcept { return multiplicity_; }

    // Value selected at significance i (1-based). Throws IndexError.
    int value_at(int significance) const;

    // N characters, most significant first; significance 1 is the last character.
    std::string literal() const;

    friend bool operator==(const StringTerm &, const StringTerm &) = default;

private:
    int n_bits_;
    std::uint64_t bits_;
    std::uint64_t multiplicity_;
};

// X_R: significance i selects bit (i-1) of R. Throws ArgumentError unless 0 <= R < 2^N.
StringTerm string_from_number(std::uint64_t r, int n_bits);

// Parses an N-character binary literal, MSB first. Throws ArgumentError.
std::uint64_t parse_binary_literal(std::string_view literal, int n_bits);
std::string binary_literal(std::uint64_t bits, int n_bits);

// Largest total multiplicity a superposition over n_bits may carry (2^N, saturated).
std::uint64_t max_strings(int n_bits) noexcept;

/// A sum of strings on one wire.
///
/// Terms are kept sorted by assignment with duplicates merged into
/// multiplicities. Total multiplicity is at least 1 and at most 2^N.
class Superposition {
public:
    // Throws ArgumentError for an empty list, mixed N, or more than 2^N strings.
    explicit Superposition(std::span<const StringTerm> terms);
    Superposition(std::initializer_list<StringTerm> terms)
        : Superposition(std::span<const StringTerm>(terms.begin(), terms.size())) {}

    int n_bits() const noexcept { return n_bits_; }
    std::span<const StringTerm> terms() const noexcept { return terms_; }
    std::uint64_t total_multiplicity() const noexcept { return total_; }
    // Multiplicity of assignment `bits`, 0 when absent.
    std::uint64_t multiplicity_of(std::uint64_t bits) const noexcept;

    friend bool operator==(const Superposition &, const Superposition &) = default;

private:
    int n_bits_ = 0;
    std::uint64_t total_ = 0;
    std::vector<StringTerm> terms_;
};

inline Superposition superpose(std::span<const StringTerm> terms) { return Superposition(terms); }

// {"bits": N, "terms": [{"value": "<literal>", "mult": k}, ...]}, ascending by value.
nlohmann::json superposition_to_json(const Superposition &sup);
// Throws ArgumentError on malformed input.
Superposition superposition_from_json(const nlohmann::json &j);

// Product of the wires a term selects under the given wire table. Throws DimensionError.
GeneratorMask realized_mask(const StringTerm &term, const WireTable &table);

// Multiplicity-weighted sum of the term signals at cycle t.
std::int64_t eval_superposition(const Superposition &sup, const WireTable &table, ClockIndex t);

// Reads the realized mask back as a number: bit (i-1) is the value whose
// component is set in pair i. Throws UndecodableError if some pair has zero or
// two components set, DimensionError on mismatched N.
std::uint64_t decode_term(const StringTerm &term, const WireTable &table);

// Decoded values with multiplicities, merged.
Superposition decode_superposition(const Superposition &sup, const WireTable &table);

// Number of non-empty subsets of the 2^N strings: 2^(2^N) - 1.
// Throws ArgumentError for n_bits outside [1, 24].
boost::multiprecision::cpp_int subspace_count(int n_bits);

}  // namespace inbl
