#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knc/rational.hpp"

namespace knc {

// Per-order data for Q(zeta_M): the M-th cyclotomic polynomial and a sparse view of it.
// Contexts are created once per order and never mutated afterwards.
class FieldContext {
public:
    static std::shared_ptr<const FieldContext> get(unsigned order);

    unsigned order() const noexcept { return order_; }
    unsigned degree() const noexcept { return degree_; }
    // Coefficients of Phi_M, lowest degree first, monic.
    const std::vector<long>& cyclotomic() const noexcept { return phi_; }

    // Reduces a polynomial in zeta_M (any length) to canonical length degree().
    std::vector<Rational> reduce(std::vector<Rational> raw) const;
    // Integer version, reduced in place and truncated to degree().
    void reduce_in_place(std::vector<Integer>& raw) const;

    explicit FieldContext(unsigned order);

private:
    unsigned order_;
    unsigned degree_;
    std::vector<long> phi_;
    std::vector<std::pair<unsigned, long>> tail_;  // nonzero terms of Phi_M below the top
};

unsigned euler_phi(unsigned m);

// Element of Q(zeta_M) in the power basis 1, zeta, ..., zeta^{phi(M)-1}, stored as integer
// numerators over one positive denominator sharing no common factor with them.
class CycloElem {
public:
    CycloElem();
    CycloElem(long value);  // NOLINT(google-explicit-constructor)
    CycloElem(const Rational& value);  // NOLINT(google-explicit-constructor)

    // Interprets raw[j] as the coefficient of zeta_M^j and reduces modulo Phi_M.
    static CycloElem from_raw(unsigned order, std::vector<Rational> raw);
    static CycloElem from_raw(const std::shared_ptr<const FieldContext>& ctx,
                              std::vector<Rational> raw);
    static CycloElem root_of_unity(unsigned order, long j);
    static CycloElem zero(unsigned order);

    unsigned order() const noexcept { return ctx_->order(); }
    const std::shared_ptr<const FieldContext>& context() const noexcept { return ctx_; }
    std::vector<Rational> coeffs() const;
    Rational coeff(std::size_t j) const;
    const std::vector<Integer>& numerators() const noexcept { return num_; }
    const Integer& denominator() const noexcept { return den_; }
    // raw[j] / den is the coefficient of zeta^j before reduction modulo Phi_M.
    static CycloElem from_integers(const std::shared_ptr<const FieldContext>& ctx,
                                   std::vector<Integer> raw, Integer den);

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rational rational_value() const;  // throws InvalidArgument unless is_rational()

    // Same value seen inside Q(zeta_target); order() must divide target.
    CycloElem promote(unsigned target) const;

    CycloElem operator-() const;
    CycloElem& operator+=(const CycloElem& o);
    CycloElem& operator-=(const CycloElem& o);
    CycloElem& operator*=(const CycloElem& o);
    CycloElem& operator/=(const CycloElem& o);

    CycloElem inverse() const;  // throws DivisionByZero
    CycloElem pow(long e) const;
    // Complex conjugation, zeta -> zeta^{-1}.
    CycloElem conj() const;
    // Galois action zeta -> zeta^a, gcd(a, M) = 1.
    CycloElem galois(long a) const;
    // Multiplication by zeta_M^j, done by index shifting.
    CycloElem times_root(long j) const;

    // Canonical textual key of the value inside Q(zeta_order); order() must divide order.
    std::string key(unsigned order) const;
    std::string debug_string() const;

    friend bool operator==(const CycloElem& a, const CycloElem& b);
    friend bool operator!=(const CycloElem& a, const CycloElem& b) { return !(a == b); }

private:
    CycloElem(std::shared_ptr<const FieldContext> ctx, std::vector<Integer> num, Integer den);
    void normalize();
    std::shared_ptr<const FieldContext> ctx_;
    std::vector<Integer> num_;
    Integer den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const CycloElem& a);

CycloElem operator+(CycloElem a, const CycloElem& b);
CycloElem operator-(CycloElem a, const CycloElem& b);
CycloElem operator*(CycloElem a, const CycloElem& b);
CycloElem operator/(CycloElem a, const CycloElem& b);

enum class FieldOp { Add, Sub, Mul, Div };

CycloElem cyclo_new(unsigned order, const std::vector<Rational>& raw);
CycloElem field_arith(const CycloElem& a, const CycloElem& b, FieldOp op);
CycloElem root_of_unity(unsigned order, long j);

// Square root of a = q * (root of unity) with q a rational square; otherwise nullopt.
std::optional<CycloElem> try_sqrt(const CycloElem& a);

// If a is a root of unity returns (L, j) with a = zeta_L^j, j/L in lowest terms.
std::optional<std::pair<unsigned, unsigned>> as_root_of_unity(const CycloElem& a);
// Multiplicative order of a root of unity, nullopt for anything else.
std::optional<unsigned> multiplicative_order(const CycloElem& a);

// Decimal strings of real and imaginary parts, zeta_M -> exp(2 pi i / M).
std::pair<std::string, std::string> approx_complex(const CycloElem& a, unsigned digits);
std::complex<double> to_complex(const CycloElem& a);

unsigned common_order(const CycloElem& a, const CycloElem& b);

// Rationals, rational multiples of "zeta_N^j" or "2cos(2pi*j/N)", otherwise the power-basis
// expansion. Also used by operator<<.
std::string render_symbolic(const CycloElem& a);

}  // namespace knc
