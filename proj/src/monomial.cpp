#include "loopsym/monomial.hpp"

#include <algorithm>

namespace loopsym {

Monomial Monomial::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    Monomial m;
    m.entries_.reserve(entries.size());
    for (auto& [v, e] : entries) {
        if (e < 0)
            throw domain_error("negative exponent in monomial");
        if (e == 0)
            continue;
        if (!m.entries_.empty() && m.entries_.back().first == v)
            m.entries_.back().second += e;
        else
            m.entries_.emplace_back(v, e);
    }
    return m;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [v, e] : entries_)
        d += e;
    return d;
}

int Monomial::exponent(VarId v) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                               [](const Entry& a, const VarId& b) { return a.first < b; });
    return (it != entries_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::mul(const Monomial& other) const {
    Monomial out;
    out.entries_.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin(), ae = entries_.end();
    auto b = other.entries_.begin(), be = other.entries_.end();
    while (a != ae && b != be) {
        if (a->first < b->first)
            out.entries_.push_back(*a++);
        else if (b->first < a->first)
            out.entries_.push_back(*b++);
        else {
            out.entries_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    out.entries_.insert(out.entries_.end(), a, ae);
    out.entries_.insert(out.entries_.end(), b, be);
    return out;
}

Monomial Monomial::pow(int k) const {
    if (k < 0)
        throw domain_error("negative monomial power");
    Monomial out;
    if (k == 0)
        return out;
    out.entries_ = entries_;
    for (auto& [v, e] : out.entries_)
        e *= k;
    return out;
}

bool Monomial::divisible_by(const Monomial& other) const {
    for (const auto& [v, e] : other.entries_)
        if (exponent(v) < e)
            return false;
    return true;
}

Monomial Monomial::div(const Monomial& other) const {
    Monomial out;
    out.entries_.reserve(entries_.size());
    auto b = other.entries_.begin(), be = other.entries_.end();
    for (const auto& [v, e] : entries_) {
        while (b != be && b->first < v)
            throw domain_error("monomial division is not exact");
        int sub = 0;
        if (b != be && b->first == v) {
            sub = b->second;
            ++b;
        }
        if (e < sub)
            throw domain_error("monomial division is not exact");
        if (e > sub)
            out.entries_.emplace_back(v, e - sub);
    }
    if (b != be)
        throw domain_error("monomial division is not exact");
    return out;
}

Rat Monomial::eval(const std::map<VarId, Rat>& point) const {
    Rat acc(1);
    for (const auto& [v, e] : entries_) {
        auto it = point.find(v);
        if (it == point.end())
            throw unbound_variable("no assignment for " + var_to_string(v));
        Rat p(1);
        for (int i = 0; i < e; ++i)
            p *= it->second;
        acc *= p;
    }
    return acc;
}

std::string Monomial::to_string() const {
    if (entries_.empty())
        return "1";
    std::string s;
    for (const auto& [v, e] : entries_) {
        if (!s.empty())
            s += "*";
        s += var_to_string(v);
        if (e != 1)
            s += "^" + std::to_string(e);
    }
    return s;
}

bool monomial_less(const Monomial& a, const Monomial& b) {
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    auto ia = ea.begin();
    auto ib = eb.begin();
    for (; ia != ea.end() && ib != eb.end(); ++ia, ++ib) {
        if (ia->first != ib->first)
            return ia->first < ib->first;
        if (ia->second != ib->second)
            return ia->second < ib->second;
    }
    if (ia != ea.end() || ib != eb.end())
        return ib != eb.end();
    return a.total_degree() < b.total_degree(); // unreachable tie-break
}

void reduce_monomial_pair(Monomial& num, Monomial& den) {
    std::vector<Monomial::Entry> common;
    for (const auto& [v, e] : den.entries()) {
        int c = std::min(e, num.exponent(v));
        if (c > 0)
            common.emplace_back(v, c);
    }
    if (common.empty())
        return;
    Monomial g = Monomial::from_entries(common);
    num = num.div(g);
    den = den.div(g);
}

} // namespace loopsym
