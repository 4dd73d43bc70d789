#pragma once

#include <cstddef>
#include <cstdint>

#include "inbl/generator_mask.hpp"

namespace inbl {

// Clock cycle counter.
using ClockIndex = std::uint64_t;

// A +1/-1 signal value.
using Sample = int;

inline constexpr std::size_t kCyclesPerBlock = 64;

// 64 consecutive cycles of base generator `index`, starting at cycle
// 64*block. Bit b set means the sample at cycle 64*block + b is -1.
//
// Counter-based: a keyed mix of (seed, index, block), so any cycle can be
// sampled directly and every (index, cycle) gets an independent fair coin.
std::uint64_t generator_block(std::uint64_t seed, std::size_t index, std::uint64_t block) noexcept;

// Random telegraph wave of base generator `index` at cycle t.
Sample sample_generator(std::uint64_t seed, std::size_t index, ClockIndex t) noexcept;

// Sign bits of the product signal over one block (XOR of generator blocks).
std::uint64_t mask_block(std::uint64_t seed, const GeneratorMask &mask, std::uint64_t block) noexcept;

// Product of the base generators set in mask; +1 for the identity mask.
Sample eval_mask(std::uint64_t seed, const GeneratorMask &mask, ClockIndex t) noexcept;

// Time average of eval_mask over t = 0..cycles-1. Throws ArgumentError for cycles == 0.
double mean_estimate(std::uint64_t seed, const GeneratorMask &mask, std::uint64_t cycles);

}  // namespace inbl
