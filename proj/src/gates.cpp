#include "inbl/gates.hpp"

#include <tuple>

#include "inbl/errors.hpp"

namespace inbl {

namespace {

void check_significance(const ReferenceSystem &sys, int s) {
    if (s < 1 || s > sys.n_bits()) {
        throw IndexError("significance " + std::to_string(s) + " outside [1, " + std::to_string(sys.n_bits()) + "]");
    }
}

void check_three(const ReferenceSystem &sys, int i, int f, int h) {
    check_significance(sys, i);
    check_significance(sys, f);
    check_significance(sys, h);
    if (i == f || i == h || f == h) {
        throw DistinctnessError("gate inputs and output must be distinct bits, got " + std::to_string(i) + ", " +
                                std::to_string(f) + " -> " + std::to_string(h));
    }
}

}  // namespace

void not_gate(ReferenceSystem &sys, int h) {
    check_significance(sys, h);
    const GeneratorMask p = sys.pair_product(h);
    sys.multiply_wire({h, 0}, p);
    sys.multiply_wire({h, 1}, p);
}

void clear_bit(ReferenceSystem &sys, int h) {
    check_significance(sys, h);
    const GeneratorMask p = sys.pair_product(h);
    sys.multiply_wire({h, 1}, p);
}

void xor_gate(ReferenceSystem &sys, int i, int f, int h, XorVariant variant) {
    check_three(sys, i, f, h);
    const GeneratorMask p = sys.pair_product(h);
    sys.multiply_wire({h, 1}, p);
    const int tap = variant == XorVariant::ones ? 1 : 0;
    sys.multiply_wire({i, tap}, p);
    sys.multiply_wire({f, tap}, p);
}

void xnor_gate(ReferenceSystem &sys, int i, int f, int h, XnorMode mode, XnorVariant variant) {
    check_three(sys, i, f, h);
    if (mode == XnorMode::via_not) {
        xor_gate(sys, i, f, h, variant == XnorVariant::standard ? XorVariant::ones : XorVariant::zeros);
        not_gate(sys, h);
        return;
    }
    const GeneratorMask p = sys.pair_product(h);
    sys.multiply_wire({h, 1}, p);
    const int i_tap = variant == XnorVariant::standard ? 1 : 0;
    sys.multiply_wire({i, i_tap}, p);
    sys.multiply_wire({f, 1 - i_tap}, p);
}

void validate_schedule(const GateSchedule &schedule, int n_bits) {
    auto in_range = [n_bits](int s) { return s >= 1 && s <= n_bits; };
    for (std::size_t k = 0; k < schedule.size(); ++k) {
        const Gate &g = schedule[k];
        const std::string where = "gate " + std::to_string(k + 1) + " (" + to_string(g) + "): ";
        if (const auto *x = std::get_if<NotGate>(&g)) {
            if (!in_range(x->h)) throw ScheduleError(where + "bit out of range", k);
        } else if (const auto *x = std::get_if<ClearGate>(&g)) {
            if (!in_range(x->h)) throw ScheduleError(where + "bit out of range", k);
        } else {
            const auto [i, f, h] = std::holds_alternative<XorGate>(g)
                                       ? std::tuple{std::get<XorGate>(g).i, std::get<XorGate>(g).f, std::get<XorGate>(g).h}
                                       : std::tuple{std::get<XnorGate>(g).i, std::get<XnorGate>(g).f,
                                                    std::get<XnorGate>(g).h};
            if (!in_range(i) || !in_range(f) || !in_range(h)) throw ScheduleError(where + "bit out of range", k);
            if (i == f || i == h || f == h) throw ScheduleError(where + "bits must be pairwise distinct", k);
        }
    }
}

void apply_gate(ReferenceSystem &sys, const Gate &gate) {
    std::visit(
        [&sys](const auto &g) {
            using G = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<G, NotGate>) {
                not_gate(sys, g.h);
            } else if constexpr (std::is_same_v<G, ClearGate>) {
                clear_bit(sys, g.h);
            } else if constexpr (std::is_same_v<G, XorGate>) {
                xor_gate(sys, g.i, g.f, g.h, g.variant);
            } else {
                xnor_gate(sys, g.i, g.f, g.h, g.mode, g.variant);
            }
        },
        gate);
}

void apply_schedule(ReferenceSystem &sys, const GateSchedule &schedule) {
    validate_schedule(schedule, sys.n_bits());
    for (const auto &g : schedule) apply_gate(sys, g);
}

std::string to_string(const Gate &gate) {
    return std::visit(
        [](const auto &g) -> std::string {
            using G = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<G, NotGate>) {
                return "not " + std::to_string(g.h);
            } else if constexpr (std::is_same_v<G, ClearGate>) {
                return "clear " + std::to_string(g.h);
            } else {
                std::string head = std::is_same_v<G, XorGate> ? "xor " : "xnor ";
                std::string s = head + std::to_string(g.i) + " " + std::to_string(g.f) + " -> " + std::to_string(g.h);
                if constexpr (std::is_same_v<G, XorGate>) {
                    if (g.variant == XorVariant::zeros) s += " alt";
                } else {
                    if (g.mode == XnorMode::via_not) {
                        s += " vianot";
                        if (g.variant == XnorVariant::alternate) s += " alt";
                    } else if (g.variant == XnorVariant::alternate) {
                        s += " alt";
                    }
                }
                return s;
            }
        },
        gate);
}

}  // namespace inbl
