#pragma once

#include <map>
#include <string>

#include "knc/cyclo.hpp"

namespace knc {

// Finitely supported sum of c_e t^e, e in Z. Zero coefficients are never stored.
class LaurentPoly {
public:
    using Terms = std::map<long, CycloElem>;

    LaurentPoly() = default;
    static LaurentPoly monomial(long exponent, const CycloElem& coeff = CycloElem(1));

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    CycloElem coeff(long exponent) const;
    long min_exponent() const;  // requires !is_zero()
    long max_exponent() const;

    void add_term(long exponent, const CycloElem& coeff);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const CycloElem& s);
    LaurentPoly operator-() const;

    LaurentPoly derivative() const;
    // f(lambda * t^sigma) for sigma = +1 or -1.
    LaurentPoly substitute(const CycloElem& lambda, int sigma) const;
    // Multiplies by t^shift.
    LaurentPoly shifted(long shift) const;
    CycloElem evaluate(const CycloElem& x) const;

    std::string debug_string() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

private:
    Terms terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(LaurentPoly a, const CycloElem& s);

}  // namespace knc
