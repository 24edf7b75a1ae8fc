#pragma once

#include "knc/curve.hpp"

namespace knc::bench {

inline CycloElem q(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return CycloElem(r);
}

// Normal form with k = 2 whose parameter pairs share the product 36.
inline HyperellipticCurve dihedral_curve(long pairs) {
    std::vector<CycloElem> params;
    for (long i = 1; i <= pairs; ++i) {
        params.push_back(q(i));
        params.push_back(q(36, i));
    }
    return curve_normal_form({2, params});
}

}  // namespace knc::bench
