#include "loopsym/alternant.hpp"

#include <algorithm>

namespace loopsym {

namespace {

void check_alpha(const Ambient& amb, const std::vector<int>& alpha, const char* what) {
    if (static_cast<int>(alpha.size()) != amb.m)
        throw shape_error(std::string(what) + ": alpha must have exactly m entries");
    for (int a : alpha)
        if (a < 0)
            throw domain_error(std::string(what) + ": alpha entries must be nonnegative");
}

std::vector<SubstitutionMap> column_maps(const Ambient& amb) {
    std::vector<SubstitutionMap> maps;
    maps.reserve(static_cast<std::size_t>(amb.m));
    for (int j = 1; j <= amb.m; ++j)
        maps.push_back(transposition(amb, j, amb.m));
    return maps;
}

} // namespace

RatFn AlternantSpec::entry(int i, int j) const {
    if (i < 1 || i > amb.m || j < 1 || j > amb.m)
        throw shape_error("alternant entry index outside the m x m matrix");
    return matrix[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)].to_ratfn();
}

AlternantSpec alternant_matrix(const Ambient& amb, const std::vector<int>& alpha, int r) {
    check_alpha(amb, alpha, "alternant_matrix");
    const auto maps = column_maps(amb);
    const FlowSet last{amb.m};
    FactoredMatrix mat;
    mat.reserve(alpha.size());
    for (int a : alpha) {
        const Poly mono = loop_h(amb, a, r - a + 1, last);
        std::vector<Factored> row;
        row.reserve(static_cast<std::size_t>(amb.m));
        for (int j = 1; j <= amb.m; ++j)
            row.push_back(maps[static_cast<std::size_t>(j - 1)].apply_factored(mono));
        mat.push_back(std::move(row));
    }
    return AlternantSpec{amb, alpha, r, std::move(mat)};
}

Factored alternant_det(const AlternantSpec& spec) {
    return factored_det(spec.matrix);
}

PolyMatrix h_matrix(const Ambient& amb, const std::vector<int>& alpha, int r) {
    check_alpha(amb, alpha, "h_matrix");
    const FlowSet full = FlowSet::full(amb.m);
    PolyMatrix h;
    h.reserve(alpha.size());
    for (int a : alpha) {
        std::vector<Poly> row;
        row.reserve(static_cast<std::size_t>(amb.m));
        for (int j = 1; j <= amb.m; ++j) {
            const int k = a - amb.m + j;
            row.push_back(k < 0 ? Poly::zero(amb) : loop_h(amb, k, r - a + 1, full));
        }
        h.push_back(std::move(row));
    }
    return h;
}

FactoredMatrix m_matrix(const Ambient& amb, int r) {
    const auto maps = column_maps(amb);
    const FlowSet omit = FlowSet::full(amb.m).without(amb.m);
    FactoredMatrix mat;
    mat.reserve(static_cast<std::size_t>(amb.m));
    for (int i = 1; i <= amb.m; ++i) {
        const Poly e = loop_e(amb, amb.m - i, r + i + 1 - amb.m, omit);
        const Poly signed_e = (amb.m - i) % 2 == 0 ? e : e.neg();
        std::vector<Factored> row;
        row.reserve(static_cast<std::size_t>(amb.m));
        for (int j = 1; j <= amb.m; ++j)
            row.push_back(maps[static_cast<std::size_t>(j - 1)].apply_factored(signed_e));
        mat.push_back(std::move(row));
    }
    return mat;
}

CheckResult verify_hma(const Ambient& amb, const std::vector<int>& alpha, int r) {
    check_alpha(amb, alpha, "verify_hma");
    for (std::size_t i = 1; i < alpha.size(); ++i)
        if (alpha[i - 1] <= alpha[i])
            throw domain_error("verify_hma needs alpha = lambda + delta, strictly decreasing");
    const PolyMatrix h = h_matrix(amb, alpha, r);
    const FactoredMatrix m = m_matrix(amb, r);
    const AlternantSpec a = alternant_matrix(amb, alpha, r);

    for (int i = 1; i <= amb.m; ++i)
        for (int j = 1; j <= amb.m; ++j) {
            std::vector<Factored> parts;
            parts.reserve(static_cast<std::size_t>(amb.m));
            for (int k = 1; k <= amb.m; ++k) {
                const Poly& hik = h[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)];
                if (!hik.is_zero())
                    parts.push_back(
                        m[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)]
                            .mul(Factored::from_poly(hik)));
            }
            const Factored lhs = factored_sum(parts);
            const Factored& rhs =
                a.matrix[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            if (!factored_eq(lhs, rhs)) {
                CheckResult out;
                out.ok = false;
                out.witness = Json{{"entry", Json::array({i, j})},
                                   {"lhs", ratfn_to_json(lhs.to_ratfn())},
                                   {"rhs", ratfn_to_json(rhs.to_ratfn())}};
                return out;
            }
        }
    return CheckResult{};
}

CheckResult verify_roa(const Ambient& amb, const Partition& lambda, int r) {
    if (lambda.length() > amb.m)
        throw domain_error("verify_roa needs l(lambda) <= m");
    const Factored a_num = alternant_det(alternant_matrix(amb, shifted_parts(lambda, amb.m), r));
    const Factored a_den = alternant_det(alternant_matrix(amb, shifted_parts(Partition(), amb.m), r));
    const Poly schur = loop_schur(amb, lambda, r - amb.m + 1);
    const Factored lhs = Factored::from_poly(schur).mul(a_den);
    if (factored_eq(lhs, a_num))
        return CheckResult{};
    CheckResult out;
    out.ok = false;
    out.witness = Json{{"schur_times_a_delta", ratfn_to_json(lhs.to_ratfn())},
                       {"a_lambda_plus_delta", ratfn_to_json(a_num.to_ratfn())}};
    return out;
}

std::vector<BorderStrip> border_strips_geometric(const Partition& shape, int size) {
    if (size < 1)
        throw domain_error("border strips have at least one box");
    std::vector<BorderStrip> out;
    for (int a = 1; a <= shape.length() + 1; ++a) {
        for (int b = a; b <= a + size - 1; ++b) {
            // Rows a..b carry the strip; below row a each row is forced to
            // end one column right of the previous row of the shape.
            int lower = 0;
            for (int i = a + 1; i <= b; ++i)
                lower += shape.part(i - 1) + 1 - shape.part(i);
            const int top = size - lower; // boxes in row a
            if (top < 1)
                continue;
            const int mu_a = shape.part(a) + top;
            if (a > 1 && mu_a > shape.part(a - 1))
                continue;
            if (b > a && mu_a < shape.part(a) + 1)
                continue;
            std::vector<int> mu;
            for (int i = 1; i < a; ++i)
                mu.push_back(shape.part(i));
            mu.push_back(mu_a);
            for (int i = a + 1; i <= b; ++i)
                mu.push_back(shape.part(i - 1) + 1);
            for (int i = b + 1; i <= shape.length(); ++i)
                mu.push_back(shape.part(i));
            out.push_back(BorderStrip{Partition(std::move(mu)), shape, size, b - a});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const BorderStrip& x, const BorderStrip& y) { return x.outer < y.outer; });
    return out;
}

std::vector<BorderStrip> border_strips_rearrange(const Partition& shape, int size) {
    if (size < 1)
        throw domain_error("border strips have at least one box");
    const int rows = shape.length() + size;
    std::vector<BorderStrip> out;
    for (int i = 1; i <= rows; ++i) {
        std::vector<int> v(static_cast<std::size_t>(rows));
        for (int j = 1; j <= rows; ++j)
            v[static_cast<std::size_t>(j - 1)] = shape.part(j) + rows - j + (i == j ? size : 0);
        bool repeated = false;
        int inversions = 0;
        for (std::size_t p = 0; p < v.size() && !repeated; ++p)
            for (std::size_t q = p + 1; q < v.size() && !repeated; ++q) {
                if (v[p] == v[q])
                    repeated = true;
                else if (v[p] < v[q])
                    ++inversions;
            }
        if (repeated)
            continue;
        std::sort(v.begin(), v.end(), std::greater<int>());
        std::vector<int> mu(v.size());
        for (int j = 1; j <= rows; ++j)
            mu[static_cast<std::size_t>(j - 1)] = v[static_cast<std::size_t>(j - 1)] - (rows - j);
        out.push_back(BorderStrip{Partition(std::move(mu)), shape, size, inversions});
    }
    std::sort(out.begin(), out.end(),
              [](const BorderStrip& x, const BorderStrip& y) { return x.outer < y.outer; });
    return out;
}

std::vector<BorderStrip> add_border_strips(const Partition& shape, int size) {
    auto geo = border_strips_geometric(shape, size);
    auto rea = border_strips_rearrange(shape, size);
    if (geo != rea)
        throw error("border strip enumerations disagree for shape " + shape.to_string() +
                    ", size " + std::to_string(size));
    return geo;
}

CheckResult verify_mn(const Ambient& amb, const Partition& lambda, int k, int r, bool force) {
    if (k < 1)
        throw domain_error("verify_mn needs k >= 1");
    if (lambda.length() > amb.m)
        throw domain_error("verify_mn needs l(lambda) <= m");
    if (amb.m < lambda.length() + k * amb.n && !force)
        throw hypothesis_error("loop Murnaghan-Nakayama needs m >= l(lambda) + kn; "
                               "pass force to run the check anyway");
    const Poly lhs = power_sum(amb, k).mul(loop_schur(amb, lambda, r));
    Poly rhs = Poly::zero(amb);
    for (const auto& strip : add_border_strips(lambda, k * amb.n)) {
        const Poly s = loop_schur(amb, strip.outer, r);
        rhs = rhs.add(strip.ht % 2 == 0 ? s : s.neg());
    }
    if (lhs == rhs)
        return CheckResult{};
    CheckResult out;
    out.ok = false;
    out.witness = Json{{"lhs", poly_to_json(lhs)},
                       {"rhs", poly_to_json(rhs)},
                       {"difference", poly_to_json(lhs.sub(rhs))}};
    return out;
}

} // namespace loopsym
