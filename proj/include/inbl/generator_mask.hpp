#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace inbl {

// Largest supported number of noise-bits; decoded values are 64-bit integers.
inline constexpr int kMaxBits = 64;

// One base generator R_{i,j}: significance i in [1, N], value j in {0, 1}.
struct GeneratorId {
    int significance = 1;
    int value = 0;

    friend bool operator==(const GeneratorId &, const GeneratorId &) = default;
};

// Linear index 2*(significance-1) + value. Throws IndexError when id is not valid for n_bits.
std::size_t generator_index(GeneratorId id, int n_bits);

// Inverse of generator_index.
GeneratorId generator_id(std::size_t index);

/// Exponent vector over GF(2) of a product of base generators.
///
/// Component k is set when base generator k appears an odd number of times in
/// the product. Multiplying two product signals corresponds to XOR of their
/// masks because every generator squares to the constant +1. The all-zero mask
/// is the identity and stands for the constant signal +1.
class GeneratorMask {
public:
    GeneratorMask() = default;
    explicit GeneratorMask(std::size_t width);

    static GeneratorMask identity(std::size_t width) { return GeneratorMask(width); }
    static GeneratorMask unit(std::size_t width, std::size_t index);
    // Parses the hex form produced by to_hex(). Throws ArgumentError.
    static GeneratorMask from_hex(std::size_t width, std::string_view hex);

    std::size_t width() const noexcept { return width_; }
    std::span<const std::uint64_t> words() const noexcept { return words_; }

    bool test(std::size_t index) const;
    void set(std::size_t index, bool on = true);
    void flip(std::size_t index);

    bool is_identity() const noexcept;
    std::size_t popcount() const noexcept;
    // Indices of set components in ascending order.
    std::vector<std::size_t> support() const;

    // Throws DimensionError on width mismatch.
    GeneratorMask &operator^=(const GeneratorMask &other);
    friend GeneratorMask operator^(GeneratorMask a, const GeneratorMask &b) { return a ^= b; }

    friend bool operator==(const GeneratorMask &, const GeneratorMask &) = default;
    friend auto operator<=>(const GeneratorMask &a, const GeneratorMask &b) {
        if (auto c = a.width_ <=> b.width_; c != 0) return c;
        for (std::size_t k = a.words_.size(); k-- > 0;) {
            if (auto c = a.words_[k] <=> b.words_[k]; c != 0) return c;
        }
        return std::strong_ordering::equal;
    }

    // Lowercase hex numeral of sum(bit_k * 2^k), ceil(width/4) digits, most
    // significant digit first. Bit 0 is linear index 0.
    std::string to_hex() const;

private:
    std::size_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

// Product of two generator products: componentwise XOR.
inline GeneratorMask mask_product(const GeneratorMask &a, const GeneratorMask &b) { return a ^ b; }

}  // namespace inbl
