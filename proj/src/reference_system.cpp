#include "inbl/reference_system.hpp"

#include <string>
#include <utility>

#include "inbl/errors.hpp"

namespace inbl {

WireTable::WireTable(int n_bits, std::uint64_t seed) : n_bits_(n_bits), seed_(seed) {
    if (n_bits < 1 || n_bits > kMaxBits) {
        throw ArgumentError("number of noise-bits must be in [1, " + std::to_string(kMaxBits) + "], got " +
                            std::to_string(n_bits));
    }
    wires_.reserve(mask_width());
    for (std::size_t k = 0; k < mask_width(); ++k) wires_.push_back(GeneratorMask::unit(mask_width(), k));
}

bool WireTable::pair_local() const {
    for (std::size_t k = 0; k < wires_.size(); ++k) {
        const std::size_t home = k / 2;
        for (std::size_t pair = 0; pair < static_cast<std::size_t>(n_bits_); ++pair) {
            const bool parity = wires_[k].test(2 * pair) != wires_[k].test(2 * pair + 1);
            if (parity != (pair == home)) return false;
        }
    }
    return true;
}

GeneratorMask ReferenceSystem::pair_product(int h) {
    const std::size_t zero = generator_index(GeneratorId{h, 0}, n_bits());
    GeneratorMask p = GeneratorMask::unit(mask_width(), zero);
    p.set(zero + 1);
    ++mul_counter_;
    return p;
}

void ReferenceSystem::multiply_wire(GeneratorId id, const GeneratorMask &by) {
    auto &w = table_.wires_[generator_index(id, n_bits())];
    w ^= by;
    ++mul_counter_;
}

void ReferenceSystem::restore(const WireSnapshot &snap) {
    if (snap.n_bits() != n_bits() || snap.seed() != seed()) {
        throw ArgumentError("snapshot of a " + std::to_string(snap.n_bits()) +
                            "-bit system cannot restore a " + std::to_string(n_bits()) +
                            "-bit system (or seeds differ)");
    }
    table_ = snap;
}

nlohmann::json wire_table_to_json(const WireTable &table) {
    auto out = nlohmann::json::array();
    for (std::size_t k = 0; k < table.wires().size(); ++k) {
        const GeneratorId id = generator_id(k);
        out.push_back(nlohmann::json::array({id.significance, id.value, table.wires()[k].to_hex()}));
    }
    return out;
}

WireTable wire_table_from_json(int n_bits, std::uint64_t seed, const nlohmann::json &j) {
    WireTable table(n_bits, seed);
    if (!j.is_array() || j.size() != table.mask_width()) {
        throw ArgumentError("wire table must be an array of " + std::to_string(table.mask_width()) + " triples");
    }
    std::vector<bool> seen(table.mask_width(), false);
    std::vector<GeneratorMask> wires(table.mask_width());
    for (const auto &entry : j) {
        if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer() || !entry[2].is_string()) {
            throw ArgumentError("wire entry must be [significance, value, hex]");
        }
        std::size_t idx = 0;
        try {
            idx = generator_index(GeneratorId{entry[0].get<int>(), entry[1].get<int>()}, n_bits);
        } catch (const IndexError &e) {
            throw ArgumentError(e.what());
        }
        if (seen[idx]) throw ArgumentError("duplicate wire entry");
        seen[idx] = true;
        wires[idx] = GeneratorMask::from_hex(table.mask_width(), entry[2].get<std::string>());
    }
    table.wires_ = std::move(wires);
    return table;
}

}  // namespace inbl
