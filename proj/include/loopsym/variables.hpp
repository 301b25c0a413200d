#pragma once

#include <compare>
#include <string>

#include "loopsym/errors.hpp"

namespace loopsym {

/// The (m, n) variable universe: m flows x_1..x_m, each with n colors.
struct Ambient {
    int m = 1;
    int n = 1;

    friend bool operator==(const Ambient&, const Ambient&) = default;
};

/// Reduces an arbitrary 1-based color label into {0, .., n-1}.
inline int reduce_color(int label, int n) {
    int c = (label - 1) % n;
    return c < 0 ? c + n : c;
}

/// One variable x_i^(j).  The color is stored 0-based and printed 1-based,
/// matching the convention that superscripts live in Z/nZ.
struct VarId {
    int flow = 1;  // subscript i, 1..m
    int color = 0; // superscript j - 1, 0..n-1

    friend auto operator<=>(const VarId&, const VarId&) = default;
};

/// Checked constructor: reduces the color label mod n and validates the flow.
inline VarId make_var(const Ambient& amb, int flow, int color_label) {
    if (flow < 1 || flow > amb.m)
        throw domain_error("variable flow " + std::to_string(flow) + " outside 1.." +
                           std::to_string(amb.m));
    return VarId{flow, reduce_color(color_label, amb.n)};
}

/// Display form "x_i^(j)" with the 1-based color label.
inline std::string var_to_string(const VarId& v) {
    return "x_" + std::to_string(v.flow) + "^(" + std::to_string(v.color + 1) + ")";
}

/// JSON object key "x:i:j" with the 1-based color label.
std::string var_to_key(const VarId& v);
VarId var_from_key(const Ambient& amb, const std::string& key);

inline void check_ambient(const Ambient& a, const Ambient& b, const char* what) {
    if (!(a == b))
        throw ambient_mismatch(std::string(what) + ": operands live in different (m, n) universes");
}

} // namespace loopsym
