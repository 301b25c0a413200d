#include "loopsym/band_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "loopsym/errors.hpp"

namespace loopsym {

namespace {

void check_index(int K, int i, int j) {
    if (i < 1 || i > K || j < 1 || j > K)
        throw shape_error("matrix index (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") outside window of size " + std::to_string(K));
}

void debug_check(const BandMatrix& m) {
#ifndef NDEBUG
    m.check_invariants();
#else
    (void)m;
#endif
}

} // namespace

BandMatrix::BandMatrix(Ambient amb, int K)
    : amb_(amb), K_(K), width_hint_(K),
      entries_(K >= 1 ? static_cast<std::size_t>(K) * K : 0, Poly::zero(amb)) {
    if (K < 1)
        throw shape_error("window size must be at least 1");
}

BandMatrix BandMatrix::identity(Ambient amb, int K) {
    BandMatrix m(amb, K);
    for (int i = 1; i <= K; ++i)
        m.set_entry(i, i, Poly::one(amb));
    m.width_hint_ = 1;
    return m;
}

void BandMatrix::set_width_hint(int w) {
    width_hint_ = std::clamp(w, 1, K_);
}

const Poly& BandMatrix::entry(int i, int j) const {
    check_index(K_, i, j);
    return entries_[static_cast<std::size_t>(i - 1) * K_ + (j - 1)];
}

void BandMatrix::set_entry(int i, int j, Poly p) {
    check_index(K_, i, j);
    check_ambient(amb_, p.ambient(), "BandMatrix::set_entry");
    entries_[static_cast<std::size_t>(i - 1) * K_ + (j - 1)] = std::move(p);
}

BandMatrix BandMatrix::restrict_window(int K2) const {
    if (K2 < 1 || K2 > K_)
        throw shape_error("restriction window must satisfy 1 <= K' <= K");
    BandMatrix m(amb_, K2);
    for (int i = 1; i <= K2; ++i)
        for (int j = 1; j <= K2; ++j)
            m.set_entry(i, j, entry(i, j));
    m.width_hint_ = std::min(width_hint_, K2);
    return m;
}

bool BandMatrix::is_unitriangular() const {
    for (int i = 1; i <= K_; ++i) {
        if (!(entry(i, i) == Poly::one(amb_)))
            return false;
        for (int j = 1; j < i; ++j)
            if (!entry(i, j).is_zero())
                return false;
    }
    return true;
}

bool BandMatrix::is_periodic() const {
    const int n = amb_.n;
    for (int i = 1; i + n <= K_; ++i)
        for (int j = 1; j + n <= K_; ++j)
            if (!(entry(i, j) == entry(i + n, j + n)))
                return false;
    return true;
}

void BandMatrix::check_invariants() const {
    if (!is_unitriangular())
        throw shape_error("window is not upper unitriangular");
    if (!is_periodic())
        throw shape_error("window is not n-periodic");
}

std::string BandMatrix::to_text_grid() const {
    std::vector<std::string> cells(entries_.size());
    std::vector<std::size_t> widths(K_, 0);
    for (int i = 0; i < K_; ++i)
        for (int j = 0; j < K_; ++j) {
            auto& c = cells[static_cast<std::size_t>(i) * K_ + j];
            c = entries_[static_cast<std::size_t>(i) * K_ + j].to_string();
            widths[j] = std::max(widths[j], c.size());
        }
    std::ostringstream out;
    for (int i = 0; i < K_; ++i) {
        out << "[ ";
        for (int j = 0; j < K_; ++j) {
            const auto& c = cells[static_cast<std::size_t>(i) * K_ + j];
            out << c << std::string(widths[j] - c.size(), ' ');
            out << (j + 1 < K_ ? "  " : " ");
        }
        out << "]\n";
    }
    return out.str();
}

Json BandMatrix::to_json() const {
    Json rows = Json::array();
    for (int i = 1; i <= K_; ++i) {
        Json row = Json::array();
        for (int j = 1; j <= K_; ++j)
            row.push_back(poly_to_json(entry(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

BandMatrix whirl(Ambient amb, const std::vector<Poly>& vars, int K) {
    if (static_cast<int>(vars.size()) != amb.n)
        throw shape_error("whirl needs exactly n superdiagonal atoms");
    BandMatrix m = BandMatrix::identity(amb, K);
    for (int i = 1; i < K; ++i)
        m.set_entry(i, i + 1, vars[static_cast<std::size_t>((i - 1) % amb.n)]);
    m.set_width_hint(2);
    debug_check(m);
    return m;
}

BandMatrix whirl_flow(Ambient amb, int flow, int K) {
    std::vector<Poly> vars;
    vars.reserve(static_cast<std::size_t>(amb.n));
    for (int j = 1; j <= amb.n; ++j)
        vars.push_back(Poly::variable(amb, make_var(amb, flow, j)));
    return whirl(amb, vars, K);
}

BandMatrix c_transform(const BandMatrix& a) {
    const int K = a.size();
    BandMatrix m(a.ambient(), K);
    for (int i = 1; i <= K; ++i)
        for (int j = 1; j <= K; ++j) {
            const Poly& p = a.entry(i, j);
            if (!p.is_zero())
                m.set_entry(i, j, (i + j) % 2 == 0 ? p : p.neg());
        }
    m.set_width_hint(a.width_hint());
    return m;
}

BandMatrix unitriangular_inverse(const BandMatrix& a) {
    if (!a.is_unitriangular())
        throw shape_error("inverse requires an upper-unitriangular window");
    const int K = a.size();
    const Ambient amb = a.ambient();
    BandMatrix x = BandMatrix::identity(amb, K);
    x.set_width_hint(K);
    for (int i = K - 1; i >= 1; --i)
        for (int j = i + 1; j <= K; ++j) {
            Poly sum = Poly::zero(amb);
            for (int k = i + 1; k <= j; ++k) {
                const Poly& aik = a.entry(i, k);
                if (!aik.is_zero() && !x.entry(k, j).is_zero())
                    sum = sum.add(aik.mul(x.entry(k, j)));
            }
            if (!sum.is_zero())
                x.set_entry(i, j, sum.neg());
        }
    debug_check(x);
    return x;
}

BandMatrix band_mul(const BandMatrix& a, const BandMatrix& b) {
    check_ambient(a.ambient(), b.ambient(), "band_mul");
    if (a.size() != b.size())
        throw shape_error("band_mul window sizes differ");
    const int K = a.size();
    const Ambient amb = a.ambient();
    BandMatrix m(amb, K);
    for (int i = 1; i <= K; ++i) {
        const int kmax = std::min(K, i + a.width_hint() - 1);
        for (int j = i; j <= K; ++j) {
            Poly sum = Poly::zero(amb);
            for (int k = i; k <= std::min(j, kmax); ++k) {
                const Poly& aik = a.entry(i, k);
                if (!aik.is_zero() && !b.entry(k, j).is_zero())
                    sum = sum.add(aik.mul(b.entry(k, j)));
            }
            m.set_entry(i, j, std::move(sum));
        }
    }
    m.set_width_hint(a.width_hint() + b.width_hint() - 1);
    debug_check(m);
    return m;
}

BandMatrix curl(Ambient amb, const std::vector<Poly>& vars, int K) {
    return c_transform(unitriangular_inverse(whirl(amb, vars, K)));
}

BandMatrix curl_flow(Ambient amb, int flow, int K) {
    return c_transform(unitriangular_inverse(whirl_flow(amb, flow, K)));
}

} // namespace loopsym
