#include "loopsym/birational.hpp"

#include <algorithm>
#include <numeric>

#include "loopsym/errors.hpp"

namespace loopsym {

PermutationWord transposition_word(int a, int b) {
    if (a > b)
        std::swap(a, b);
    std::vector<int> w;
    for (int i = a; i <= b - 1; ++i)
        w.push_back(i);
    for (int i = b - 2; i >= a; --i)
        w.push_back(i);
    return PermutationWord(std::move(w));
}

std::vector<int> word_permutation(const Ambient& amb, const PermutationWord& w) {
    std::vector<int> perm(static_cast<std::size_t>(amb.m));
    std::iota(perm.begin(), perm.end(), 1);
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
        const int i = *it;
        if (i < 1 || i >= amb.m)
            throw domain_error("generator index " + std::to_string(i) + " outside 1..m-1");
        std::swap(perm[static_cast<std::size_t>(i - 1)], perm[static_cast<std::size_t>(i)]);
    }
    return perm;
}

Factored SubstitutionMap::image_factored(VarId v) const {
    auto it = images_.find(v);
    if (it != images_.end())
        return it->second;
    return Factored::from_monomial(amb_, Monomial::variable(v));
}

RatFn SubstitutionMap::image(VarId v) const {
    return image_factored(v).to_ratfn();
}

Factored SubstitutionMap::apply_factored(const Poly& p) const {
    check_ambient(amb_, p.ambient(), "SubstitutionMap::apply");
    if (p.is_zero() || images_.empty())
        return Factored::from_poly(p);
    std::vector<Factored> parts;
    parts.reserve(p.terms().size());
    for (const auto& term : p.terms()) {
        std::vector<Monomial::Entry> fixed;
        Factored moving = Factored::constant(amb_, term.coeff);
        for (const auto& [v, e] : term.mono.entries()) {
            auto it = images_.find(v);
            if (it == images_.end())
                fixed.push_back({v, e});
            else
                moving = moving.mul(it->second.pow(e));
        }
        if (!fixed.empty())
            moving = moving.mul(Factored::from_monomial(amb_, Monomial::from_entries(std::move(fixed))));
        parts.push_back(std::move(moving));
    }
    return factored_sum(parts);
}

Factored SubstitutionMap::apply_factored(const Factored& f) const {
    check_ambient(amb_, f.ambient(), "SubstitutionMap::apply");
    if (images_.empty() || f.is_zero())
        return f;
    Factored acc = Factored::constant(amb_, f.scalar());
    for (const auto& [v, e] : f.mono_num().entries())
        acc = acc.mul(image_factored(v).pow(e));
    for (const auto& [v, e] : f.mono_den().entries())
        acc = acc.mul(image_factored(v).pow(-e));
    for (const auto& fac : f.factors())
        acc = acc.mul(apply_factored(fac.base).pow(fac.exp));
    return acc;
}

RatFn SubstitutionMap::apply(const Poly& p) const {
    return apply_factored(p).to_ratfn();
}

RatFn SubstitutionMap::apply(const RatFn& f) const {
    Factored num = apply_factored(f.num());
    Factored den = apply_factored(f.den());
    return num.div(den).to_ratfn();
}

SubstitutionMap build_si(const Ambient& amb, int i) {
    if (i < 1 || i >= amb.m)
        throw domain_error("generator index " + std::to_string(i) + " outside 1..m-1");
    SubstitutionMap s(amb);
    for (int j = 1; j <= amb.n; ++j) {
        const Poly kj = kappa(amb, j, i, i + 1);
        const Poly kj_up = kappa(amb, j + 1, i, i + 1);
        const Poly kj_dn = kappa(amb, j - 1, i, i + 1);
        Factored up = Factored::from_monomial(amb, Monomial::variable(make_var(amb, i + 1, j + 1)))
                          .mul(Factored::quotient(kj_up, kj));
        Factored dn = Factored::from_monomial(amb, Monomial::variable(make_var(amb, i, j - 1)))
                          .mul(Factored::quotient(kj_dn, kj));
        s.images_.insert_or_assign(make_var(amb, i, j), std::move(up));
        s.images_.insert_or_assign(make_var(amb, i + 1, j), std::move(dn));
    }
    return s;
}

SubstitutionMap compose(const Ambient& amb, const PermutationWord& w) {
    SubstitutionMap acc = SubstitutionMap::identity(amb);
    for (int g : w.word) {
        // acc = acc after s_g: only the variables s_g moves get new images.
        const SubstitutionMap s = build_si(amb, g);
        std::map<VarId, Factored> next = acc.images_;
        for (const auto& [v, img] : s.images_)
            next.insert_or_assign(v, acc.apply_factored(img));
        acc.images_ = std::move(next);
    }
    return acc;
}

SubstitutionMap transposition(const Ambient& amb, int a, int b) {
    auto in_range = [&](int v) { return v >= 1 && v <= amb.m; };
    if (!in_range(a) || !in_range(b))
        throw domain_error("transposition flows must lie in 1..m");
    return compose(amb, transposition_word(a, b));
}

bool substitution_eq(const SubstitutionMap& a, const SubstitutionMap& b) {
    check_ambient(a.ambient(), b.ambient(), "substitution_eq");
    const Ambient& amb = a.ambient();
    for (int i = 1; i <= amb.m; ++i)
        for (int j = 1; j <= amb.n; ++j) {
            const VarId v = make_var(amb, i, j);
            if (!factored_eq(a.image_factored(v), b.image_factored(v)))
                return false;
        }
    return true;
}

Point apply_si_point(const Ambient& amb, int i, const Point& p) {
    if (i < 1 || i >= amb.m)
        throw domain_error("generator index " + std::to_string(i) + " outside 1..m-1");
    std::vector<Rat> kap(static_cast<std::size_t>(amb.n));
    for (int j = 1; j <= amb.n; ++j) {
        kap[static_cast<std::size_t>(j - 1)] = kappa(amb, j, i, i + 1).eval(p);
        if (kap[static_cast<std::size_t>(j - 1)] == 0)
            throw divide_by_zero("kappa vanishes at the sample point");
    }
    auto kappa_at = [&](int j) -> const Rat& {
        return kap[static_cast<std::size_t>(reduce_color(j, amb.n))];
    };
    Point q = p;
    for (int j = 1; j <= amb.n; ++j) {
        q[make_var(amb, i, j)] =
            p.at(make_var(amb, i + 1, j + 1)) * kappa_at(j + 1) / kappa_at(j);
        q[make_var(amb, i + 1, j)] =
            p.at(make_var(amb, i, j - 1)) * kappa_at(j - 1) / kappa_at(j);
    }
    return q;
}

Point apply_word_point(const Ambient& amb, const PermutationWord& w, Point p) {
    for (int g : w.word)
        p = apply_si_point(amb, g, p);
    return p;
}

Point random_point(const Ambient& amb, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    Point p;
    for (int i = 1; i <= amb.m; ++i)
        for (int j = 1; j <= amb.n; ++j) {
            int v = num(rng);
            while (v == 0)
                v = num(rng);
            Rat value(v, den(rng));
            value.canonicalize();
            p[make_var(amb, i, j)] = value;
        }
    return p;
}

} // namespace loopsym
