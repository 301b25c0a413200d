#include "loopsym/loop_gen.hpp"

#include <algorithm>
#include <numeric>

#include "loopsym/errors.hpp"

namespace loopsym {

FlowSet::FlowSet(std::initializer_list<int> flows) : flows_(flows) {
    validate();
}

FlowSet::FlowSet(std::vector<int> flows) : flows_(std::move(flows)) {
    validate();
}

FlowSet FlowSet::full(int m) {
    std::vector<int> flows(static_cast<std::size_t>(std::max(m, 0)));
    std::iota(flows.begin(), flows.end(), 1);
    return FlowSet(std::move(flows));
}

bool FlowSet::contains(int flow) const {
    return std::binary_search(flows_.begin(), flows_.end(), flow);
}

FlowSet FlowSet::without(int flow) const {
    std::vector<int> rest;
    rest.reserve(flows_.size());
    for (int f : flows_)
        if (f != flow)
            rest.push_back(f);
    return FlowSet(std::move(rest));
}

void FlowSet::validate() const {
    for (std::size_t i = 0; i < flows_.size(); ++i) {
        if (flows_[i] < 1)
            throw domain_error("flows must be positive");
        if (i > 0 && flows_[i - 1] >= flows_[i])
            throw domain_error("flows must be strictly increasing");
    }
}

void check_flows(const Ambient& amb, const FlowSet& flows, const char* what) {
    if (!flows.empty() && flows.flows().back() > amb.m)
        throw domain_error(std::string(what) + ": flow " + std::to_string(flows.flows().back()) +
                           " outside 1.." + std::to_string(amb.m));
}

Monomial colored_chain(const Ambient& amb, const std::vector<int>& flows_in_color_order, int r) {
    std::vector<Monomial::Entry> entries;
    entries.reserve(flows_in_color_order.size());
    int color = r;
    for (int flow : flows_in_color_order)
        entries.push_back({make_var(amb, flow, color++), 1});
    return Monomial::from_entries(std::move(entries));
}

Poly loop_e(const Ambient& amb, int k, int r, const FlowSet& flows) {
    if (k < 0)
        throw domain_error("loop_e needs k >= 0");
    check_flows(amb, flows, "loop_e");
    if (k == 0)
        return Poly::one(amb);
    const auto& f = flows.flows();
    if (static_cast<std::size_t>(k) > f.size())
        return Poly::zero(amb);

    std::vector<Poly::Term> terms;
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    const int sz = static_cast<int>(f.size());
    while (true) {
        std::vector<int> chain(static_cast<std::size_t>(k));
        for (int t = 0; t < k; ++t)
            chain[static_cast<std::size_t>(t)] = f[static_cast<std::size_t>(pick[static_cast<std::size_t>(t)])];
        terms.push_back({colored_chain(amb, chain, r), Rat(1)});

        int t = k - 1;
        while (t >= 0 && pick[static_cast<std::size_t>(t)] == sz - k + t)
            --t;
        if (t < 0)
            break;
        ++pick[static_cast<std::size_t>(t)];
        for (int u = t + 1; u < k; ++u)
            pick[static_cast<std::size_t>(u)] = pick[static_cast<std::size_t>(u - 1)] + 1;
    }
    return Poly::from_terms(amb, std::move(terms));
}

Poly loop_h(const Ambient& amb, int k, int r, const FlowSet& flows) {
    if (k < 0)
        throw domain_error("loop_h needs k >= 0");
    check_flows(amb, flows, "loop_h");
    if (k == 0)
        return Poly::one(amb);
    const auto& f = flows.flows();
    if (f.empty())
        return Poly::zero(amb);

    // Multisets of size k as nondecreasing index tuples; the colored chain
    // reads the chosen flows from largest to smallest so the largest carries
    // color r.
    std::vector<Poly::Term> terms;
    std::vector<int> pick(static_cast<std::size_t>(k), 0);
    const int sz = static_cast<int>(f.size());
    while (true) {
        std::vector<int> chain(static_cast<std::size_t>(k));
        for (int t = 0; t < k; ++t)
            chain[static_cast<std::size_t>(t)] =
                f[static_cast<std::size_t>(pick[static_cast<std::size_t>(k - 1 - t)])];
        terms.push_back({colored_chain(amb, chain, r), Rat(1)});

        int t = k - 1;
        while (t >= 0 && pick[static_cast<std::size_t>(t)] == sz - 1)
            --t;
        if (t < 0)
            break;
        const int next = pick[static_cast<std::size_t>(t)] + 1;
        for (int u = t; u < k; ++u)
            pick[static_cast<std::size_t>(u)] = next;
    }
    return Poly::from_terms(amb, std::move(terms));
}

Poly pi(const Ambient& amb, int i) {
    std::vector<Monomial::Entry> entries;
    entries.reserve(static_cast<std::size_t>(amb.n));
    for (int j = 1; j <= amb.n; ++j)
        entries.push_back({make_var(amb, i, j), 1});
    return Poly::monomial(amb, Monomial::from_entries(std::move(entries)));
}

Poly power_sum(const Ambient& amb, int k) {
    if (k < 1)
        throw domain_error("power_sum needs k >= 1");
    Poly sum = Poly::zero(amb);
    for (int i = 1; i <= amb.m; ++i)
        sum = sum.add(pi(amb, i).pow(k));
    return sum;
}

Poly kappa(const Ambient& amb, int r, int a, int b) {
    if (a == b)
        throw domain_error("kappa needs two distinct flows");
    std::vector<Poly::Term> terms;
    terms.reserve(static_cast<std::size_t>(amb.n));
    for (int t = 0; t < amb.n; ++t) {
        std::vector<Monomial::Entry> entries;
        for (int s = 1; s <= amb.n - 1; ++s)
            entries.push_back({make_var(amb, s <= t ? b : a, r + s), 1});
        terms.push_back({Monomial::from_entries(std::move(entries)), Rat(1)});
    }
    return Poly::from_terms(amb, std::move(terms));
}

BandMatrix whirl_product(const Ambient& amb, int K) {
    BandMatrix acc = BandMatrix::identity(amb, K);
    for (int i = 1; i <= amb.m; ++i)
        acc = band_mul(acc, whirl_flow(amb, i, K));
    return acc;
}

BandMatrix curl_product(const Ambient& amb, int K) {
    BandMatrix acc = BandMatrix::identity(amb, K);
    for (int i = amb.m; i >= 1; --i)
        acc = band_mul(acc, curl_flow(amb, i, K));
    return acc;
}

} // namespace loopsym
