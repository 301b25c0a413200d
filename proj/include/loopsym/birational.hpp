#pragma once

#include <map>
#include <random>
#include <vector>

#include "loopsym/factored.hpp"
#include "loopsym/loop_gen.hpp"
#include "loopsym/poly.hpp"
#include "loopsym/ratfn.hpp"

namespace loopsym {

/// A word in the generators s_1..s_{m-1}.  The word (w_1, ..., w_k) denotes
/// the function composition s_{w_1} after s_{w_2} after ... after s_{w_k}:
/// applying it to an expression substitutes s_{w_k} innermost.
struct PermutationWord {
    std::vector<int> word;

    PermutationWord() = default;
    PermutationWord(std::initializer_list<int> w) : word(w) {}
    explicit PermutationWord(std::vector<int> w) : word(std::move(w)) {}
};

/// Reduced word s_a s_{a+1} ... s_{b-1} ... s_{a+1} s_a for the
/// transposition swapping a and b; empty for a = b.
PermutationWord transposition_word(int a, int b);

/// The permutation of {1..m} a word represents, as the image array
/// perm[i-1] = sigma(i).
std::vector<int> word_permutation(const Ambient& amb, const PermutationWord& w);

/// A substitution field homomorphism given by its images on the variables it
/// moves; every other variable maps to itself.  Immutable once built.
class SubstitutionMap {
public:
    static SubstitutionMap identity(Ambient amb) { return SubstitutionMap(amb); }

    const Ambient& ambient() const { return amb_; }
    const std::map<VarId, Factored>& moved() const { return images_; }

    /// Image of one variable (identity images materialized on demand).
    Factored image_factored(VarId v) const;
    RatFn image(VarId v) const;

    Factored apply_factored(const Poly& p) const;
    Factored apply_factored(const Factored& f) const;
    RatFn apply(const Poly& p) const;
    RatFn apply(const RatFn& f) const;

private:
    explicit SubstitutionMap(Ambient amb) : amb_(amb) {}
    friend SubstitutionMap build_si(const Ambient& amb, int i);
    friend SubstitutionMap compose(const Ambient& amb, const PermutationWord& w);

    Ambient amb_;
    std::map<VarId, Factored> images_; // non-identity images only
};

/// The generator s_i: x_i^(j) -> x_{i+1}^(j+1) kappa_i^(j+1)/kappa_i^(j),
/// x_{i+1}^(j) -> x_i^(j-1) kappa_i^(j-1)/kappa_i^(j), all other variables
/// fixed, where kappa_i^(j) = kappa(j, i, i+1).
SubstitutionMap build_si(const Ambient& amb, int i);

/// Flattens a word to a single variable table, composing left to right.
SubstitutionMap compose(const Ambient& amb, const PermutationWord& w);

/// The composed substitution for t_{a,b}; the identity map when a = b.
SubstitutionMap transposition(const Ambient& amb, int a, int b);

/// Extensional equality: every variable has equal images as rational
/// functions (exact cross-multiplied comparison).
bool substitution_eq(const SubstitutionMap& a, const SubstitutionMap& b);

/// A full rational assignment of the mn variables.
using Point = std::map<VarId, Rat>;

/// Pushes a point through the numeric counterpart of s_i.  Throws
/// divide_by_zero when a kappa denominator vanishes at the point.
Point apply_si_point(const Ambient& amb, int i, const Point& p);

/// Numeric action of a whole word: because points pull back through
/// substitutions, the generators are applied left to right along the word.
Point apply_word_point(const Ambient& amb, const PermutationWord& w, Point p);

/// Deterministic random point with small mixed-sign rational coordinates;
/// suitable for identity testing with rejection on vanishing denominators.
Point random_point(const Ambient& amb, std::mt19937_64& rng);

} // namespace loopsym
