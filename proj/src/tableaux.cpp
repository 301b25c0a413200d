#include "loopsym/tableaux.hpp"

#include <sstream>

#include "loopsym/det.hpp"
#include "loopsym/loop_gen.hpp"

namespace loopsym {

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> rows, int m)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.length())
        throw shape_error("tableau row count does not match its shape");
    for (int i = 1; i <= shape_.length(); ++i) {
        const auto& row = rows_[static_cast<std::size_t>(i - 1)];
        if (static_cast<int>(row.size()) != shape_.part(i))
            throw shape_error("tableau row length does not match its shape");
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] < 1 || row[j] > m)
                throw domain_error("tableau entries must lie in 1..m");
            if (j > 0 && row[j - 1] > row[j])
                throw domain_error("tableau rows must weakly increase");
            if (i > 1 && static_cast<int>(j) < shape_.part(i - 1) &&
                rows_[static_cast<std::size_t>(i - 2)][j] >= row[j])
                throw domain_error("tableau columns must strictly increase");
        }
    }
}

int Tableau::entry(int i, int j) const {
    if (i < 1 || i > shape_.length() || j < 1 || j > shape_.part(i))
        throw shape_error("tableau box out of shape");
    return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

std::string Tableau::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i)
            out << " / ";
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (j)
                out << ' ';
            out << rows_[i][j];
        }
    }
    return out.str();
}

namespace {

// Row-major backtracking: filling boxes in reading-word order with values
// tried smallest first yields tableaux in reading-word lexicographic order.
bool fill_from(const Partition& shape, int m, std::vector<std::vector<int>>& grid, int i, int j,
               const std::function<bool(const Tableau&)>& visit) {
    if (i > shape.length()) {
        return visit(Tableau(shape, grid, m));
    }
    if (j > shape.part(i))
        return fill_from(shape, m, grid, i + 1, 1, visit);
    int lo = 1;
    if (j > 1)
        lo = std::max(lo, grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 2)]);
    if (i > 1)
        lo = std::max(lo, grid[static_cast<std::size_t>(i - 2)][static_cast<std::size_t>(j - 1)] + 1);
    for (int v = lo; v <= m; ++v) {
        grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v;
        if (!fill_from(shape, m, grid, i, j + 1, visit))
            return false;
    }
    return true;
}

} // namespace

void enumerate_ssyt(const Partition& shape, int m,
                    const std::function<bool(const Tableau&)>& visit) {
    if (m < 0)
        throw domain_error("enumerate_ssyt needs m >= 0");
    if (shape.length() > m)
        return;
    std::vector<std::vector<int>> grid;
    for (int i = 1; i <= shape.length(); ++i)
        grid.emplace_back(static_cast<std::size_t>(shape.part(i)), 0);
    fill_from(shape, m, grid, 1, 1, visit);
}

std::vector<Tableau> list_ssyt(const Partition& shape, int m) {
    std::vector<Tableau> out;
    enumerate_ssyt(shape, m, [&](const Tableau& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

Monomial colored_weight(const Ambient& amb, const Tableau& t, int r) {
    std::vector<Monomial::Entry> entries;
    for (int i = 1; i <= t.shape().length(); ++i)
        for (int j = 1; j <= t.shape().part(i); ++j)
            entries.push_back({make_var(amb, t.entry(i, j), r + i - j), 1});
    return Monomial::from_entries(std::move(entries));
}

Poly loop_schur(const Ambient& amb, const Partition& shape, int r) {
    std::vector<Poly::Term> terms;
    enumerate_ssyt(shape, amb.m, [&](const Tableau& t) {
        terms.push_back({colored_weight(amb, t, r), Rat(1)});
        return true;
    });
    return Poly::from_terms(amb, std::move(terms));
}

Poly jacobi_trudi(const Ambient& amb, const Partition& shape, int r) {
    const int l = shape.length();
    if (l > amb.m)
        throw domain_error("jacobi_trudi needs l(lambda) <= m");
    if (l == 0)
        return Poly::one(amb);
    const FlowSet flows = FlowSet::full(amb.m);
    PolyMatrix h(static_cast<std::size_t>(l), std::vector<Poly>(static_cast<std::size_t>(l)));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j) {
            const int k = shape.part(i) - i + j;
            h[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                k < 0 ? Poly::zero(amb) : loop_h(amb, k, r - shape.part(i) + i, flows);
        }
    return poly_det(h);
}

} // namespace loopsym
