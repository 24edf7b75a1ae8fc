#pragma once

#include <iosfwd>
#include <memory>
#include <mutex>
#include <vector>

#include "knc/curve.hpp"
#include "knc/laurent.hpp"

namespace knc {

// f(t) dt + g(t) u dt.
struct DifferentialForm {
    LaurentPoly dt_part;
    LaurentPoly udt_part;

    static DifferentialForm dt_monomial(long e, const CycloElem& c = CycloElem(1));
    static DifferentialForm udt_monomial(long e, const CycloElem& c = CycloElem(1));
    DifferentialForm& operator+=(const DifferentialForm& o);
    DifferentialForm& operator*=(const CycloElem& s);
    bool is_zero() const { return dt_part.is_zero() && udt_part.is_zero(); }
};

DifferentialForm operator+(DifferentialForm a, const DifferentialForm& b);
DifferentialForm operator*(DifferentialForm a, const CycloElem& s);

// f0 dt + f1 u dt + g0 du + g1 u du, an element of the module of differentials before
// du is eliminated.
struct KahlerForm {
    LaurentPoly f0, f1, g0, g1;
};

// Uses u du = p'/2 dt (exact identity) and t^a du = -a t^{a-1} u dt (modulo d(t^a u)).
DifferentialForm ingest(const HyperellipticCurve& curve, const KahlerForm& form);

// d(t^a) and d(t^a u^{2j+1}) written without du.
DifferentialForm exact_dt_form(long a);
DifferentialForm exact_u_form(const HyperellipticCurve& curve, long a, long j = 1);
// d(t^a u) as an element with a du term.
KahlerForm exact_kahler_form(long a);

// Coordinates over omega_0 = t^{-1} dt and omega_i = t^{-i} u dt, i = 1..2n.
struct DifferentialClass {
    std::vector<CycloElem> coords;

    static DifferentialClass zero(long n);
    static DifferentialClass unit(long n, long i);
    DifferentialClass& operator+=(const DifferentialClass& o);
    DifferentialClass& operator*=(const CycloElem& s);
    bool is_zero() const;
    friend bool operator==(const DifferentialClass& a, const DifferentialClass& b) {
        return a.coords == b.coords;
    }
    friend bool operator!=(const DifferentialClass& a, const DifferentialClass& b) {
        return !(a == b);
    }
};

std::ostream& operator<<(std::ostream& os, const DifferentialClass& c);

// Rows of the P table (t^k u dt, k >= -2n) or Q table (t^{-m} u dt, m >= 1).
// at(row, i) with -2n <= i <= -1 is the coefficient of omega_{-i}.
struct PQTable {
    enum class Kind { P, Q };
    Kind kind = Kind::P;
    long genus = 0;
    long first_row = 0;
    std::vector<std::vector<CycloElem>> rows;

    long last_row() const { return first_row + static_cast<long>(rows.size()) - 1; }
    const CycloElem& at(long row, long i) const;
};

// Memoizes P and Q rows for one curve. Safe to share between threads.
class Reducer {
public:
    explicit Reducer(HyperellipticCurve curve);

    const HyperellipticCurve& curve() const noexcept { return curve_; }
    long genus() const noexcept { return curve_.genus(); }

    // Coefficients of omega_1..omega_{2n} for t^e u dt.
    std::vector<CycloElem> u_monomial(long e) const;
    std::vector<CycloElem> p_row(long k) const;  // k >= -2n
    std::vector<CycloElem> q_row(long m) const;  // m >= 1

    DifferentialClass reduce(const DifferentialForm& form) const;
    PQTable p_table(long m_max) const;
    PQTable q_table(long m_max) const;

private:
    HyperellipticCurve curve_;
    mutable std::mutex mutex_;
    mutable std::vector<std::vector<CycloElem>> p_rows_;  // index k + 2n
    mutable std::vector<std::vector<CycloElem>> q_rows_;  // index m - 1
    void extend_p(long k) const;
    void extend_q(long m) const;
};

PQTable p_table(const HyperellipticCurve& curve, long m_max);
PQTable q_table(const HyperellipticCurve& curve, long m_max);
DifferentialClass reduce_form(const HyperellipticCurve& curve, const DifferentialForm& form);

// Independent path: exact elimination over the relation lattice of the form's window.
DifferentialClass reduce_oracle(const HyperellipticCurve& curve, const DifferentialForm& form);

// Left side minus right side of the defining recurrences; zero vectors when satisfied.
std::vector<CycloElem> p_recursion_residual(const HyperellipticCurve& curve, const PQTable& table,
                                            long k);
std::vector<CycloElem> q_recursion_residual(const HyperellipticCurve& curve, const PQTable& table,
                                            long m);

// Coefficient of t^{b+j-1} u dt in the relation obtained from d(t^b u^3), j = 1..2n+1.
CycloElem relation_coefficient(const HyperellipticCurve& curve, long b, long j);

}  // namespace knc
