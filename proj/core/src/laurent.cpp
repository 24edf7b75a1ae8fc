#include "knc/laurent.hpp"

#include <sstream>

#include "knc/errors.hpp"

namespace knc {

LaurentPoly LaurentPoly::monomial(long exponent, const CycloElem& coeff) {
    LaurentPoly p;
    p.add_term(exponent, coeff);
    return p;
}

CycloElem LaurentPoly::coeff(long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? CycloElem(0) : it->second;
}

long LaurentPoly::min_exponent() const {
    if (terms_.empty()) throw InvalidArgument("zero Laurent polynomial has no exponents");
    return terms_.begin()->first;
}

long LaurentPoly::max_exponent() const {
    if (terms_.empty()) throw InvalidArgument("zero Laurent polynomial has no exponents");
    return terms_.rbegin()->first;
}

void LaurentPoly::add_term(long exponent, const CycloElem& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    *this = std::move(r);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const CycloElem& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::derivative() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_)
        if (e != 0) r.add_term(e - 1, c * CycloElem(e));
    return r;
}

LaurentPoly LaurentPoly::substitute(const CycloElem& lambda, int sigma) const {
    if (sigma != 1 && sigma != -1) throw InvalidArgument("substitution exponent must be +-1");
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.add_term(sigma * e, c * lambda.pow(e));
    return r;
}

LaurentPoly LaurentPoly::shifted(long shift) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + shift, c);
    return r;
}

CycloElem LaurentPoly::evaluate(const CycloElem& x) const {
    CycloElem acc(0);
    for (const auto& [e, c] : terms_) acc += c * x.pow(e);
    return acc;
}

std::string LaurentPoly::debug_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << c.debug_string() << "]t^" << e;
    }
    return os.str();
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
LaurentPoly operator*(LaurentPoly a, const CycloElem& s) { return a *= s; }

}  // namespace knc
