#pragma once

#include <string>
#include <variant>
#include <vector>

#include "inbl/reference_system.hpp"

namespace inbl {

// Which pair of input wires the XOR step multiplies: (i,1),(f,1) or (i,0),(f,0).
enum class XorVariant { ones, zeros };
enum class XnorMode { direct, via_not };
// Direct XNOR multiplies (i,1),(f,0) in the standard form, (i,0),(f,1) in the alternate one.
enum class XnorVariant { standard, alternate };

// Gates act only on the reference wires; superpositions are never touched, so
// each gate costs a fixed number of multiplications whatever the number of
// strings riding on the wires.
//
// All gates throw IndexError for a significance outside [1, N]. The two-input
// gates throw DistinctnessError unless i, f, h are pairwise distinct.

// Swaps the roles of wires (h,0) and (h,1): 3 multiplications.
void not_gate(ReferenceSystem &sys, int h);

// Routes every string onto (h,0): 2 multiplications.
void clear_bit(ReferenceSystem &sys, int h);

// h := i XOR f on every string: clearing step plus two input-wire
// multiplications, 4 in total.
void xor_gate(ReferenceSystem &sys, int i, int f, int h, XorVariant variant = XorVariant::ones);

// h := NOT(i XOR f). Direct mode costs 4 multiplications; via_not runs
// xor_gate then not_gate on h (7). In via_not mode the standard variant uses
// XorVariant::ones and the alternate one XorVariant::zeros.
void xnor_gate(ReferenceSystem &sys, int i, int f, int h, XnorMode mode = XnorMode::direct,
               XnorVariant variant = XnorVariant::standard);

struct NotGate {
    int h;
    friend bool operator==(const NotGate &, const NotGate &) = default;
};
struct ClearGate {
    int h;
    friend bool operator==(const ClearGate &, const ClearGate &) = default;
};
struct XorGate {
    int i, f, h;
    XorVariant variant = XorVariant::ones;
    friend bool operator==(const XorGate &, const XorGate &) = default;
};
struct XnorGate {
    int i, f, h;
    XnorMode mode = XnorMode::direct;
    XnorVariant variant = XnorVariant::standard;
    friend bool operator==(const XnorGate &, const XnorGate &) = default;
};

using Gate = std::variant<NotGate, ClearGate, XorGate, XnorGate>;
using GateSchedule = std::vector<Gate>;

// Throws ScheduleError naming the first invalid gate.
void validate_schedule(const GateSchedule &schedule, int n_bits);

void apply_gate(ReferenceSystem &sys, const Gate &gate);
// Validates, then applies each gate in order.
void apply_schedule(ReferenceSystem &sys, const GateSchedule &schedule);

// Circuit-file spelling, e.g. "xor 1 2 -> 3 alt".
std::string to_string(const Gate &gate);

}  // namespace inbl
