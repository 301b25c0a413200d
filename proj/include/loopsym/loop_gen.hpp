#pragma once

#include <initializer_list>
#include <vector>

#include "loopsym/band_matrix.hpp"
#include "loopsym/poly.hpp"

namespace loopsym {

/// An ordered subset of the flows {1..m}.  May be empty, in which case
/// e_0 = h_0 = 1 and e_k = h_k = 0 for k > 0.
class FlowSet {
public:
    FlowSet() = default;
    FlowSet(std::initializer_list<int> flows);
    explicit FlowSet(std::vector<int> flows);

    /// The full set {1..m}.
    static FlowSet full(int m);

    const std::vector<int>& flows() const { return flows_; }
    std::size_t size() const { return flows_.size(); }
    bool empty() const { return flows_.empty(); }
    bool contains(int flow) const;

    /// Copy with one flow removed (the "x_m omitted" construction).
    FlowSet without(int flow) const;

private:
    void validate() const;

    std::vector<int> flows_;
};

void check_flows(const Ambient& amb, const FlowSet& flows, const char* what);

/// The monomial x_{f_1}^(r) x_{f_2}^(r+1) ... x_{f_k}^(r+k-1) for flows
/// listed in color order.  Every colored product in the library goes through
/// here, so the color convention lives in exactly one place.
Monomial colored_chain(const Ambient& amb, const std::vector<int>& flows_in_color_order, int r);

/// e_k^(r) over the given flows: sum over strictly increasing k-tuples, the
/// smallest flow carrying color r.
Poly loop_e(const Ambient& amb, int k, int r, const FlowSet& flows);

/// h_k^(r) over the given flows: sum over weakly decreasing k-tuples, the
/// largest flow carrying color r.
Poly loop_h(const Ambient& amb, int k, int r, const FlowSet& flows);

/// pi_i = x_i^(1) x_i^(2) ... x_i^(n).
Poly pi(const Ambient& amb, int i);

/// p_k = pi_1^k + ... + pi_m^k, homogeneous of degree kn.
Poly power_sum(const Ambient& amb, int k);

/// kappa^(r)(x_a, x_b), the telescoping (n)-term sum running from
/// x_a^(r+1)...x_a^(r+n-1) down to x_b^(r+1)...x_b^(r+n-1).  Built directly
/// from that sum; equals loop_h(n-1, r+1, {a, b}).
Poly kappa(const Ambient& amb, int r, int a, int b);

/// M(x_1) M(x_2) ... M(x_m): entry (i, i+k) is e_k^(i).
BandMatrix whirl_product(const Ambient& amb, int K);

/// N(x_m) N(x_m-1) ... N(x_1): entry (i, i+k) is h_k^(i).
BandMatrix curl_product(const Ambient& amb, int K);

/// Window size sufficient to read e_k^(r) and h_k^(r) for all k <= k_max
/// and every color r.
inline int window_size(const Ambient& amb, int k_max) { return k_max + amb.n + 1; }

} // namespace loopsym
