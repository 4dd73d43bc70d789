#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "inbl/generator_mask.hpp"
#include "inbl/rtw.hpp"

#include "json.hpp"

namespace inbl {

/// Immutable view of the 2N reference wires.
///
/// Wire (i, j) carries the product signal named by its mask. Tables are plain
/// values: copies taken from a ReferenceSystem may be sampled and decoded from
/// any thread.
class WireTable {
public:
    // Fresh table: wire (i, j) is the singleton mask of base generator (i, j).
    // Throws ArgumentError unless 1 <= n_bits <= kMaxBits.
    WireTable(int n_bits, std::uint64_t seed);

    int n_bits() const noexcept { return n_bits_; }
    std::uint64_t seed() const noexcept { return seed_; }
    std::size_t mask_width() const noexcept { return 2 * static_cast<std::size_t>(n_bits_); }

    const GeneratorMask &wire(GeneratorId id) const { return wires_[generator_index(id, n_bits_)]; }
    std::span<const GeneratorMask> wires() const noexcept { return wires_; }

    Sample wire_signal(GeneratorId id, ClockIndex t) const { return eval_mask(seed_, wire(id), t); }

    // Odd parity on the home pair and even parity on every foreign pair, for every wire.
    bool pair_local() const;

    friend bool operator==(const WireTable &, const WireTable &) = default;

private:
    friend class ReferenceSystem;
    friend WireTable wire_table_from_json(int, std::uint64_t, const nlohmann::json &);

    int n_bits_;
    std::uint64_t seed_;
    std::vector<GeneratorMask> wires_;
};

using WireSnapshot = WireTable;

/// The mutable reference noise system that gates operate on.
///
/// Every pair_product and multiply_wire call counts as one multiplication in
/// mul_counter(). Snapshots and restores leave the counter alone.
class ReferenceSystem {
public:
    ReferenceSystem(int n_bits, std::uint64_t seed) : table_(n_bits, seed) {}

    int n_bits() const noexcept { return table_.n_bits(); }
    std::uint64_t seed() const noexcept { return table_.seed(); }
    std::size_t mask_width() const noexcept { return table_.mask_width(); }
    std::uint64_t mul_counter() const noexcept { return mul_counter_; }

    const WireTable &table() const noexcept { return table_; }
    const GeneratorMask &wire(GeneratorId id) const { return table_.wire(id); }
    Sample wire_signal(GeneratorId id, ClockIndex t) const { return table_.wire_signal(id, t); }

    // R_{h,0} R_{h,1} formed from the base generators, independent of the
    // current wire contents. Throws IndexError for h outside [1, N].
    GeneratorMask pair_product(int h);

    // wire(id) := wire(id) * by. Throws IndexError or DimensionError.
    void multiply_wire(GeneratorId id, const GeneratorMask &by);

    WireSnapshot snapshot() const { return table_; }
    // Throws ArgumentError when the snapshot has a different N or seed.
    void restore(const WireSnapshot &snap);

private:
    WireTable table_;
    std::uint64_t mul_counter_ = 0;
};

// [[significance, value, "mask-hex"], ...] in linear-index order.
nlohmann::json wire_table_to_json(const WireTable &table);
// Throws ArgumentError on malformed input.
WireTable wire_table_from_json(int n_bits, std::uint64_t seed, const nlohmann::json &j);

}  // namespace inbl
