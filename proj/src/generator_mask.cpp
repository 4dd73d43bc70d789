#include "inbl/generator_mask.hpp"

#include <bit>

#include "inbl/errors.hpp"

namespace inbl {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t width) { return (width + kWordBits - 1) / kWordBits; }

int hex_digit_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

std::size_t generator_index(GeneratorId id, int n_bits) {
    if (id.significance < 1 || id.significance > n_bits) {
        throw IndexError("significance " + std::to_string(id.significance) + " outside [1, " +
                         std::to_string(n_bits) + "]");
    }
    if (id.value != 0 && id.value != 1) {
        throw IndexError("bit value " + std::to_string(id.value) + " outside {0, 1}");
    }
    return 2 * static_cast<std::size_t>(id.significance - 1) + static_cast<std::size_t>(id.value);
}

GeneratorId generator_id(std::size_t index) {
    return GeneratorId{static_cast<int>(index / 2) + 1, static_cast<int>(index % 2)};
}

GeneratorMask::GeneratorMask(std::size_t width) : width_(width), words_(word_count(width), 0) {}

GeneratorMask GeneratorMask::unit(std::size_t width, std::size_t index) {
    GeneratorMask m(width);
    m.set(index);
    return m;
}

GeneratorMask GeneratorMask::from_hex(std::size_t width, std::string_view hex) {
    if (hex.size() != (width + 3) / 4) {
        throw ArgumentError("mask hex '" + std::string(hex) + "' must have " + std::to_string((width + 3) / 4) +
                            " digits");
    }
    GeneratorMask m(width);
    for (std::size_t k = 0; k < hex.size(); ++k) {
        int v = hex_digit_value(hex[hex.size() - 1 - k]);
        if (v < 0) throw ArgumentError("invalid hex digit in mask '" + std::string(hex) + "'");
        for (std::size_t b = 0; b < 4; ++b) {
            if (!((v >> b) & 1)) continue;
            std::size_t idx = 4 * k + b;
            if (idx >= width) throw ArgumentError("mask '" + std::string(hex) + "' sets bits beyond its width");
            m.set(idx);
        }
    }
    return m;
}

bool GeneratorMask::test(std::size_t index) const {
    if (index >= width_) throw IndexError("mask component " + std::to_string(index) + " beyond width");
    return (words_[index / kWordBits] >> (index % kWordBits)) & 1u;
}

void GeneratorMask::set(std::size_t index, bool on) {
    if (index >= width_) throw IndexError("mask component " + std::to_string(index) + " beyond width");
    const std::uint64_t bit = std::uint64_t{1} << (index % kWordBits);
    if (on) {
        words_[index / kWordBits] |= bit;
    } else {
        words_[index / kWordBits] &= ~bit;
    }
}

void GeneratorMask::flip(std::size_t index) {
    if (index >= width_) throw IndexError("mask component " + std::to_string(index) + " beyond width");
    words_[index / kWordBits] ^= std::uint64_t{1} << (index % kWordBits);
}

bool GeneratorMask::is_identity() const noexcept {
    for (auto w : words_) {
        if (w != 0) return false;
    }
    return true;
}

std::size_t GeneratorMask::popcount() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::vector<std::size_t> GeneratorMask::support() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        for (std::uint64_t w = words_[k]; w != 0; w &= w - 1) {
            out.push_back(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        }
    }
    return out;
}

GeneratorMask &GeneratorMask::operator^=(const GeneratorMask &other) {
    if (other.width_ != width_) {
        throw DimensionError("mask width " + std::to_string(other.width_) + " does not match " +
                             std::to_string(width_));
    }
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
    return *this;
}

std::string GeneratorMask::to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    const std::size_t digits = (width_ + 3) / 4;
    std::string out(digits, '0');
    for (std::size_t k = 0; k < digits; ++k) {
        unsigned v = 0;
        for (std::size_t b = 0; b < 4; ++b) {
            std::size_t idx = 4 * k + b;
            if (idx < width_ && test(idx)) v |= 1u << b;
        }
        out[digits - 1 - k] = kDigits[v];
    }
    return out;
}

}  // namespace inbl
