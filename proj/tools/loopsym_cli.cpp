#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "loopsym/alternant.hpp"
#include "loopsym/birational.hpp"
#include "loopsym/json_io.hpp"
#include "loopsym/loop_gen.hpp"
#include "loopsym/partition.hpp"
#include "loopsym/tableaux.hpp"

namespace {

using namespace loopsym;

constexpr std::uint64_t kDefaultSeed = 12345;

std::vector<int> parse_csv_ints(const std::string& text, const char* what) {
    std::vector<int> out;
    if (text.empty())
        return out;
    std::istringstream in(text);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(piece, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != piece.size())
            throw domain_error(std::string(what) + ": cannot parse integer '" + piece + "'");
        out.push_back(v);
    }
    return out;
}

std::string point_key(const VarId& v) {
    return var_to_key(v);
}

Json point_to_json(const Point& p) {
    Json out = Json::object();
    for (const auto& [v, value] : p)
        out[point_key(v)] = rat_to_string(value);
    return out;
}

void emit_poly(const Poly& p, const std::string& format) {
    if (format == "json")
        std::cout << poly_to_json(p).dump(2) << "\n";
    else
        std::cout << p.to_string() << "\n";
}

void emit_ratfn(const RatFn& f, const std::string& format) {
    if (format == "json")
        std::cout << ratfn_to_json(f).dump(2) << "\n";
    else
        std::cout << f.to_string() << "\n";
}

int emit_check(const CheckResult& res, const std::string& what, const std::string& format) {
    if (format == "json") {
        Json out{{"check", what}, {"ok", res.ok}};
        if (!res.ok)
            out["witness"] = res.witness;
        std::cout << out.dump(2) << "\n";
    } else if (res.ok) {
        std::cout << "verified: " << what << "\n";
    } else {
        std::cout << "counterexample: " << what << "\n" << res.witness.dump(2) << "\n";
    }
    return res.ok ? 0 : 1;
}

struct SweepRow {
    int m, n, r;
    Partition lambda;
    bool jt_ok, roa_ok, hma_ok;
};

int run_sweep(int max_weight, int max_m, int max_n, const std::string& format) {
    std::vector<SweepRow> rows;
    const auto shapes = partitions_up_to(max_weight);
    for (int m = 2; m <= max_m; ++m)
        for (int n = 1; n <= max_n; ++n) {
            const Ambient amb{m, n};
            for (const auto& lambda : shapes) {
                if (lambda.length() > m)
                    continue;
                for (int r = 1; r <= n; ++r) {
                    SweepRow row{m, n, r, lambda, false, false, false};
                    row.jt_ok = jacobi_trudi(amb, lambda, r) == loop_schur(amb, lambda, r);
                    row.roa_ok = verify_roa(amb, lambda, r).ok;
                    row.hma_ok = verify_hma(amb, shifted_parts(lambda, m), r).ok;
                    rows.push_back(std::move(row));
                }
            }
        }
    int failures = 0;
    for (const auto& row : rows)
        if (!(row.jt_ok && row.roa_ok && row.hma_ok))
            ++failures;
    if (format == "json") {
        Json out = Json::array();
        for (const auto& row : rows)
            out.push_back(Json{{"m", row.m},
                               {"n", row.n},
                               {"lambda", row.lambda.to_string()},
                               {"r", row.r},
                               {"jt", row.jt_ok},
                               {"roa", row.roa_ok},
                               {"hma", row.hma_ok}});
        std::cout << Json{{"rows", out}, {"checks", rows.size() * 3}, {"failures", failures}}.dump(2)
                  << "\n";
    } else {
        for (const auto& row : rows)
            std::cout << "m=" << row.m << " n=" << row.n << " lambda=" << row.lambda.to_string()
                      << " r=" << row.r << "  jt=" << (row.jt_ok ? "ok" : "FAIL")
                      << " roa=" << (row.roa_ok ? "ok" : "FAIL")
                      << " hma=" << (row.hma_ok ? "ok" : "FAIL") << "\n";
        std::cout << "checks: " << rows.size() * 3 << "  failures: " << failures << "\n";
    }
    return failures == 0 ? 0 : 1;
}

int run_braid(const Ambient& amb, bool symbolic, int samples, std::uint64_t seed,
              const std::string& format) {
    if (amb.m < 3) {
        CheckResult trivial;
        return emit_check(trivial, "braid relation (no adjacent generator pairs)", format);
    }
    CheckResult res;
    std::string what;
    if (symbolic) {
        what = "braid relation, symbolic";
        for (int i = 1; i + 1 <= amb.m - 1 && res.ok; ++i) {
            const auto lhs = compose(amb, PermutationWord{i, i + 1, i});
            const auto rhs = compose(amb, PermutationWord{i + 1, i, i + 1});
            if (!substitution_eq(lhs, rhs)) {
                res.ok = false;
                res.witness = Json{{"i", i}};
            }
        }
    } else {
        what = "braid relation, " + std::to_string(samples) + " random points";
        std::mt19937_64 rng(seed);
        for (int i = 1; i + 1 <= amb.m - 1 && res.ok; ++i) {
            const PermutationWord w1{i, i + 1, i};
            const PermutationWord w2{i + 1, i, i + 1};
            int done = 0;
            while (done < samples && res.ok) {
                const Point p = random_point(amb, rng);
                Point q1, q2;
                try {
                    q1 = apply_word_point(amb, w1, p);
                    q2 = apply_word_point(amb, w2, p);
                } catch (const divide_by_zero&) {
                    continue; // kappa vanished; resample
                }
                ++done;
                if (q1 != q2) {
                    res.ok = false;
                    res.witness = Json{{"i", i}, {"point", point_to_json(p)}};
                }
            }
        }
    }
    return emit_check(res, what, format);
}

int run_invariance(const Ambient& amb, const std::string& family, int kmax,
                   const Partition& shape, const std::string& format) {
    CheckResult res;
    const FlowSet full = FlowSet::full(amb.m);
    std::vector<std::pair<std::string, Poly>> targets;
    if (family == "e" || family == "h") {
        for (int k = 0; k <= kmax; ++k)
            for (int r = 1; r <= amb.n; ++r) {
                Poly g = family == "e" ? loop_e(amb, k, r, full) : loop_h(amb, k, r, full);
                targets.emplace_back(family + "_" + std::to_string(k) + "^(" + std::to_string(r) +
                                         ")",
                                     std::move(g));
            }
    } else if (family == "p") {
        for (int k = 1; k <= kmax; ++k)
            targets.emplace_back("p_" + std::to_string(k), power_sum(amb, k));
    } else if (family == "schur") {
        for (int r = 1; r <= amb.n; ++r)
            targets.emplace_back("s_{" + shape.to_string() + "}^(" + std::to_string(r) + ")",
                                 loop_schur(amb, shape, r));
    } else {
        throw domain_error("unknown invariance family '" + family + "'");
    }
    for (int i = 1; i <= amb.m - 1 && res.ok; ++i) {
        const auto si = build_si(amb, i);
        for (const auto& [name, g] : targets) {
            if (!factored_eq(si.apply_factored(g), Factored::from_poly(g))) {
                res.ok = false;
                res.witness = Json{{"generator", i}, {"target", name}};
                break;
            }
        }
    }
    return emit_check(res, "invariance of family " + family, format);
}

int run_jacobi_trudi(const Ambient& amb, int max_size, const std::string& format) {
    CheckResult res;
    for (const auto& lambda : partitions_up_to(max_size)) {
        if (lambda.length() > amb.m)
            continue;
        for (int r = 1; r <= amb.n && res.ok; ++r)
            if (!(jacobi_trudi(amb, lambda, r) == loop_schur(amb, lambda, r))) {
                res.ok = false;
                res.witness = Json{{"lambda", lambda.to_string()}, {"r", r}};
            }
        if (!res.ok)
            break;
    }
    return emit_check(res, "jacobi-trudi vs tableaux, |lambda| <= " + std::to_string(max_size),
                      format);
}

int run(int argc, char** argv) {
    CLI::App app{"loop symmetric functions: expansion and theorem verification"};
    app.require_subcommand(1);

    std::string format = "text";
    int m = 2, n = 2, k = 1, r = 1;
    std::string shape_text, alpha_text = "", flows_text = "", word_text = "", expr_text = "";
    std::string via = "tableaux", family = "e";
    std::uint64_t seed = kDefaultSeed;
    bool force = false, symbolic = false;
    int samples = 20, max_size = 4, max_weight = 4, max_m = 3, max_n = 3;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--m", m, "number of flows")->check(CLI::PositiveNumber);
        cmd->add_option("--n", n, "number of colors")->check(CLI::PositiveNumber);
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* expand = app.add_subcommand("expand", "expand a loop symmetric function");
    std::string target;
    expand->add_option("target", target, "one of e, h, p, kappa, schur, alternant")
        ->required()
        ->check(CLI::IsMember({"e", "h", "p", "kappa", "schur", "alternant"}));
    add_common(expand);
    expand->add_option("--k", k, "degree index");
    expand->add_option("--r", r, "color");
    expand->add_option("--flows", flows_text, "comma-separated flow subset (default all)");
    expand->add_option("--shape", shape_text, "partition, e.g. 3,2 (0 = empty)");
    expand->add_option("--alpha", alpha_text, "exponent sequence, e.g. 4,2");
    expand->add_option("--via", via, "schur route")->check(CLI::IsMember({"tableaux", "jt"}));

    CLI::App* apply_cmd = app.add_subcommand("apply", "apply a birational word to an expression");
    add_common(apply_cmd);
    apply_cmd->add_option("--word", word_text, "generator indices, e.g. 1,2,1")->required();
    apply_cmd->add_option("--expr", expr_text, "Poly or RatFn JSON")->required();

    CLI::App* verify = app.add_subcommand("verify", "verify an identity, exit 0/1/2");
    std::string theorem;
    verify->add_option("target", theorem, "one of roa, hma, mn, braid, invariance, jacobi-trudi")
        ->required()
        ->check(CLI::IsMember({"roa", "hma", "mn", "braid", "invariance", "jacobi-trudi"}));
    add_common(verify);
    verify->add_option("--k", k, "power sum index");
    verify->add_option("--r", r, "color");
    verify->add_option("--shape", shape_text, "partition, e.g. 3,2 (0 = empty)");
    verify->add_option("--alpha", alpha_text, "strictly decreasing sequence lambda+delta");
    verify->add_option("--family", family, "invariance family")
        ->check(CLI::IsMember({"e", "h", "p", "schur"}));
    verify->add_option("--max-size", max_size, "largest |lambda| for jacobi-trudi");
    verify->add_flag("--force", force, "run mn below its hypothesis");
    verify->add_flag("--symbolic", symbolic, "braid: force the symbolic route");
    verify->add_option("--random", samples, "braid: number of random points");
    verify->add_option("--seed", seed, "random seed");

    CLI::App* sweep = app.add_subcommand("sweep", "run the identity sweep and print a table");
    sweep->add_option("--max-weight", max_weight, "largest |lambda|");
    sweep->add_option("--max-m", max_m, "largest m");
    sweep->add_option("--max-n", max_n, "largest n");
    sweep->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const Ambient amb{m, n};
        if (expand->parsed()) {
            const FlowSet flows = flows_text.empty()
                                      ? FlowSet::full(m)
                                      : FlowSet(parse_csv_ints(flows_text, "--flows"));
            if (target == "e") {
                emit_poly(loop_e(amb, k, r, flows), format);
            } else if (target == "h") {
                emit_poly(loop_h(amb, k, r, flows), format);
            } else if (target == "p") {
                emit_poly(power_sum(amb, k), format);
            } else if (target == "kappa") {
                const auto& f = flows.flows();
                if (f.size() != 2)
                    throw domain_error("expand kappa needs --flows with exactly two flows");
                emit_poly(kappa(amb, r, f[0], f[1]), format);
            } else if (target == "schur") {
                const Partition shape = Partition::parse(shape_text);
                const Poly s = via == "jt" ? jacobi_trudi(amb, shape, r)
                                           : loop_schur(amb, shape, r);
                emit_poly(s, format);
            } else {
                const auto alpha = parse_csv_ints(alpha_text, "--alpha");
                const auto spec = alternant_matrix(amb, alpha, r);
                const Factored det = alternant_det(spec);
                if (format == "json") {
                    Json mat = Json::array();
                    for (int i = 1; i <= m; ++i) {
                        Json row = Json::array();
                        for (int j = 1; j <= m; ++j)
                            row.push_back(ratfn_to_json(spec.entry(i, j)));
                        mat.push_back(std::move(row));
                    }
                    std::cout << Json{{"matrix", mat}, {"det", ratfn_to_json(det.to_ratfn())}}
                                     .dump(2)
                              << "\n";
                } else {
                    for (int i = 1; i <= m; ++i)
                        for (int j = 1; j <= m; ++j)
                            std::cout << "A[" << i << "][" << j
                                      << "] = " << spec.entry(i, j).to_string() << "\n";
                    std::cout << "det = " << det.to_ratfn().to_string() << "\n";
                }
            }
            return 0;
        }
        if (apply_cmd->parsed()) {
            const PermutationWord w(parse_csv_ints(word_text, "--word"));
            const Json expr = Json::parse(expr_text);
            const auto map = compose(amb, w);
            RatFn image = expr.contains("num") ? map.apply(ratfn_from_json(expr))
                                               : map.apply(poly_from_json(expr));
            emit_ratfn(image, format);
            return 0;
        }
        if (verify->parsed()) {
            if (theorem == "roa") {
                const Partition lambda = Partition::parse(shape_text);
                return emit_check(verify_roa(amb, lambda, r),
                                  "ratio of alternants, lambda=" + lambda.to_string() +
                                      ", r=" + std::to_string(r),
                                  format);
            }
            if (theorem == "hma") {
                std::vector<int> alpha;
                if (!alpha_text.empty())
                    alpha = parse_csv_ints(alpha_text, "--alpha");
                else
                    alpha = shifted_parts(Partition::parse(shape_text), m);
                return emit_check(verify_hma(amb, alpha, r), "H*M = A on alpha", format);
            }
            if (theorem == "mn") {
                const Partition lambda = Partition::parse(shape_text);
                return emit_check(verify_mn(amb, lambda, k, r, force),
                                  "Murnaghan-Nakayama, lambda=" + lambda.to_string() +
                                      ", k=" + std::to_string(k) + ", r=" + std::to_string(r),
                                  format);
            }
            if (theorem == "braid") {
                const bool use_symbolic = symbolic || (m <= 3 && n <= 3 && !verify->count("--random"));
                return run_braid(amb, use_symbolic, samples, seed, format);
            }
            if (theorem == "invariance")
                return run_invariance(amb, family, verify->count("--k") ? k : 4,
                                      Partition::parse(shape_text), format);
            return run_jacobi_trudi(amb, max_size, format);
        }
        return run_sweep(max_weight, max_m, max_n, format);
    } catch (const loopsym::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    return run(argc, argv);
}
