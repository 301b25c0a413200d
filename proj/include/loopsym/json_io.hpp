#pragma once

#include <string>

#include <json.hpp>

#include "loopsym/poly.hpp"
#include "loopsym/ratfn.hpp"

namespace loopsym {

using Json = nlohmann::ordered_json;

/// {"m":M,"n":N,"terms":[{"coeff":"p/q","exps":{"x:i:j":e,...}},...]} with
/// terms in canonical order and exponent keys sorted by (flow, color).
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

/// {"num":Poly,"den":Poly}
Json ratfn_to_json(const RatFn& f);
RatFn ratfn_from_json(const Json& j);

} // namespace loopsym
