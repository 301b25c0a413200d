#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "loopsym/rational.hpp"
#include "loopsym/variables.hpp"

namespace loopsym {

/// A power product of variables.  Stored as a vector of (variable, exponent)
/// pairs sorted by (flow, color) with all exponents positive.
class Monomial {
public:
    using Entry = std::pair<VarId, int>;

    Monomial() = default;

    /// Builds from arbitrary (variable, exponent) pairs; merges duplicates,
    /// drops zero exponents, rejects negative ones.
    static Monomial from_entries(std::vector<Entry> entries);

    /// The single variable v.
    static Monomial variable(VarId v) { return from_entries({{v, 1}}); }

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_one() const { return entries_.empty(); }
    int total_degree() const;
    int exponent(VarId v) const;

    Monomial mul(const Monomial& other) const;
    Monomial pow(int k) const;

    /// True when every exponent of `other` is covered by this monomial.
    bool divisible_by(const Monomial& other) const;
    /// Exact quotient; requires divisible_by(other).
    Monomial div(const Monomial& other) const;

    /// Exact evaluation; every variable must be assigned.
    Rat eval(const std::map<VarId, Rat>& point) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::string to_string() const; // "1" for the empty product

private:
    std::vector<Entry> entries_;
};

/// The canonical term order: lexicographic on the sorted (flow, color,
/// exponent) triples, ties broken by total degree.  Used for storage,
/// printing and hashing; it is a total order on monomials.
bool monomial_less(const Monomial& a, const Monomial& b);

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return monomial_less(a, b); }
};

/// Cancels the common part of a numerator/denominator monomial pair in
/// place, so their supports end up disjoint.
void reduce_monomial_pair(Monomial& num, Monomial& den);

} // namespace loopsym
