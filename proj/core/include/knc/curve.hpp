#pragma once

#include <optional>
#include <vector>

#include "knc/cyclo.hpp"
#include "knc/laurent.hpp"

namespace knc {

// Roots c_i * zeta_k^j (j = 1..k) for each parameter c_i, giving 2n = k * params.size() roots.
struct NormalFormSpec {
    long rotation = 1;
    std::vector<CycloElem> params;
};

// p(t) = t (t - r_1) ... (t - r_{2n}) = sum_{j=1}^{2n+1} a_j t^j over a fixed cyclotomic field.
class HyperellipticCurve {
public:
    long genus() const noexcept { return n_; }
    long degree() const noexcept { return 2 * n_ + 1; }
    unsigned field_order() const noexcept { return field_order_; }
    const std::vector<CycloElem>& roots() const noexcept { return roots_; }
    // a(j) for 1 <= j <= 2n+1.
    const CycloElem& coeff(long j) const;
    const std::vector<CycloElem>& coefficients() const noexcept { return coeffs_; }
    const LaurentPoly& poly() const noexcept { return p_; }
    const LaurentPoly& poly_derivative() const noexcept { return dp_; }
    const std::optional<NormalFormSpec>& normal_form() const noexcept { return normal_form_; }

    friend HyperellipticCurve curve_from_roots(unsigned, std::vector<CycloElem>);
    friend HyperellipticCurve curve_normal_form(const NormalFormSpec&);

private:
    HyperellipticCurve() = default;
    long n_ = 0;
    unsigned field_order_ = 1;
    std::vector<CycloElem> roots_;
    std::vector<CycloElem> coeffs_;  // coeffs_[j-1] = a_j
    LaurentPoly p_;
    LaurentPoly dp_;
    std::optional<NormalFormSpec> normal_form_;
};

// Field order becomes lcm(order, orders of the roots). Throws InvalidCurve.
HyperellipticCurve curve_from_roots(unsigned order, std::vector<CycloElem> roots);
// Field order is lcm(orders of the params, 4n). Throws InvalidCurve on colliding roots.
HyperellipticCurve curve_normal_form(const NormalFormSpec& spec);

CycloElem eval_p(const HyperellipticCurve& curve, const CycloElem& x);

// t * prod_i (t^k - c_i^k), expanded independently of the root product.
LaurentPoly normal_form_polynomial(const NormalFormSpec& spec);

// a_j == sign * c^{2n-2j+2} * a_{2n+2-j} for every j.
bool coefficient_symmetry(const HyperellipticCurve& curve, const CycloElem& c, int sign);

}  // namespace knc
