#include "loopsym/json_io.hpp"

namespace loopsym {

Json poly_to_json(const Poly& p) {
    Json j;
    j["m"] = p.ambient().m;
    j["n"] = p.ambient().n;
    Json terms = Json::array();
    for (const auto& t : p.terms()) {
        Json term;
        term["coeff"] = rat_to_string(t.coeff);
        Json exps = Json::object();
        for (const auto& [v, e] : t.mono.entries())
            exps[var_to_key(v)] = e;
        term["exps"] = std::move(exps);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

Poly poly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("n") || !j.contains("terms"))
        throw domain_error("polynomial JSON must carry m, n and terms");
    Ambient amb{j.at("m").get<int>(), j.at("n").get<int>()};
    if (amb.m < 1 || amb.n < 1)
        throw domain_error("polynomial JSON with m or n < 1");
    std::vector<Poly::Term> terms;
    for (const auto& term : j.at("terms")) {
        Rat coeff = rat_from_string(term.at("coeff").get<std::string>());
        std::vector<Monomial::Entry> entries;
        for (const auto& [key, value] : term.at("exps").items())
            entries.emplace_back(var_from_key(amb, key), value.get<int>());
        terms.push_back(Poly::Term{Monomial::from_entries(std::move(entries)), std::move(coeff)});
    }
    return Poly::from_terms(amb, std::move(terms));
}

Json ratfn_to_json(const RatFn& f) {
    Json j;
    j["num"] = poly_to_json(f.num());
    j["den"] = poly_to_json(f.den());
    return j;
}

RatFn ratfn_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw domain_error("rational-function JSON must carry num and den");
    return RatFn(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

} // namespace loopsym
