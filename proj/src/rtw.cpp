#include "inbl/rtw.hpp"

#include <bit>

#include "inbl/errors.hpp"

namespace inbl {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t generator_block(std::uint64_t seed, std::size_t index, std::uint64_t block) noexcept {
    const std::uint64_t key = mix64(mix64(seed ^ 0x243f6a8885a308d3ULL) + kGolden * (index + 1));
    return mix64(mix64(key + kGolden * block) ^ (block * 0xd1b54a32d192ed03ULL + key));
}

Sample sample_generator(std::uint64_t seed, std::size_t index, ClockIndex t) noexcept {
    const std::uint64_t bits = generator_block(seed, index, t / kCyclesPerBlock);
    return ((bits >> (t % kCyclesPerBlock)) & 1u) ? -1 : +1;
}

std::uint64_t mask_block(std::uint64_t seed, const GeneratorMask &mask, std::uint64_t block) noexcept {
    std::uint64_t acc = 0;
    const auto words = mask.words();
    for (std::size_t k = 0; k < words.size(); ++k) {
        for (std::uint64_t w = words[k]; w != 0; w &= w - 1) {
            acc ^= generator_block(seed, k * 64 + static_cast<std::size_t>(std::countr_zero(w)), block);
        }
    }
    return acc;
}

Sample eval_mask(std::uint64_t seed, const GeneratorMask &mask, ClockIndex t) noexcept {
    return ((mask_block(seed, mask, t / kCyclesPerBlock) >> (t % kCyclesPerBlock)) & 1u) ? -1 : +1;
}

double mean_estimate(std::uint64_t seed, const GeneratorMask &mask, std::uint64_t cycles) {
    if (cycles == 0) throw ArgumentError("mean_estimate needs at least one cycle");
    if (mask.is_identity()) return 1.0;
    std::uint64_t negatives = 0;
    const std::uint64_t full_blocks = cycles / kCyclesPerBlock;
    for (std::uint64_t b = 0; b < full_blocks; ++b) {
        negatives += static_cast<std::uint64_t>(std::popcount(mask_block(seed, mask, b)));
    }
    if (const std::uint64_t rest = cycles % kCyclesPerBlock; rest != 0) {
        const std::uint64_t keep = (std::uint64_t{1} << rest) - 1;
        negatives += static_cast<std::uint64_t>(std::popcount(mask_block(seed, mask, full_blocks) & keep));
    }
    const auto m = static_cast<double>(cycles);
    return (m - 2.0 * static_cast<double>(negatives)) / m;
}

}  // namespace inbl
