#pragma once

#include <string>
#include <vector>

#include "loopsym/errors.hpp"

namespace loopsym {

/// Integer partition: weakly decreasing positive parts, trailing zeros
/// trimmed away on construction.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Parses "3,2,1"; "0" and "" both mean the empty partition.
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    /// Number of nonzero parts.
    int length() const { return static_cast<int>(parts_.size()); }
    /// Sum of the parts.
    int size() const;
    bool empty() const { return parts_.empty(); }
    /// 1-based part access; zero beyond the length.
    int part(int i) const;

    /// True when every row of `inner` fits inside this shape.
    bool contains(const Partition& inner) const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

    /// Comma-joined parts; "0" for the empty partition.
    std::string to_string() const;

private:
    std::vector<int> parts_;
};

/// The staircase (m-1, m-2, ..., 1).
Partition staircase(int m);

/// lambda + delta as a length-m strictly decreasing composition:
/// alpha_i = lambda_i + m - i.  Requires l(lambda) <= m.
std::vector<int> shifted_parts(const Partition& lambda, int m);

/// All partitions of the given size, largest part first within each, in a
/// fixed deterministic order.
std::vector<Partition> partitions_of(int size);

/// All partitions of size 0..max_size.
std::vector<Partition> partitions_up_to(int max_size);

} // namespace loopsym
