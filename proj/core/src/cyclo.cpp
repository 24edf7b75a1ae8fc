#include "knc/cyclo.hpp"

#include <mpfr.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "knc/errors.hpp"

namespace knc {

namespace {

int mobius(unsigned n) {
    int result = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

// Phi_M as the product over d | M of (x^d - 1)^{mu(M/d)}.
std::vector<long> cyclotomic_poly(unsigned m) {
    std::vector<long> poly{1};
    std::vector<unsigned> denominators;
    for (unsigned d = 1; d <= m; ++d) {
        if (m % d) continue;
        int mu = mobius(m / d);
        if (mu == 1) {
            std::vector<long> next(poly.size() + d, 0);
            for (std::size_t i = 0; i < poly.size(); ++i) {
                next[i + d] += poly[i];
                next[i] -= poly[i];
            }
            poly = std::move(next);
        } else if (mu == -1) {
            denominators.push_back(d);
        }
    }
    for (unsigned d : denominators) {
        // exact division by x^d - 1, from the top down
        std::size_t qlen = poly.size() - d;
        std::vector<long> q(qlen, 0);
        std::vector<long> r = poly;
        for (std::size_t i = r.size() - 1; i >= d; --i) {
            long c = r[i];
            if (c == 0) continue;
            q[i - d] = c;
            r[i] = 0;
            r[i - d] += c;
        }
        poly = std::move(q);
    }
    return poly;
}

using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (sgn(b[j]) == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    trim(r);
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

// a = q*b + r with deg r < deg b; b nonzero and trimmed.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    trim(a);
    if (a.size() < b.size()) return {Poly{}, a};
    Poly q(a.size() - b.size() + 1);
    Rational lead_inv = 1 / b.back();
    for (std::size_t i = a.size(); i-- >= b.size();) {
        if (sgn(a[i]) == 0) continue;
        Rational f = a[i] * lead_inv;
        std::size_t shift = i - (b.size() - 1);
        q[shift] = f;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (sgn(b[j]) != 0) a[shift + j] -= f * b[j];
    }
    trim(a);
    trim(q);
    return {q, a};
}

}  // namespace

unsigned euler_phi(unsigned m) {
    unsigned result = m;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

FieldContext::FieldContext(unsigned order) : order_(order) {
    if (order == 0) throw InvalidArgument("cyclotomic order must be positive");
    phi_ = cyclotomic_poly(order);
    degree_ = static_cast<unsigned>(phi_.size() - 1);
    for (unsigned j = 0; j < degree_; ++j)
        if (phi_[j] != 0) tail_.emplace_back(j, phi_[j]);
}

std::shared_ptr<const FieldContext> FieldContext::get(unsigned order) {
    static std::mutex mutex;
    static std::map<unsigned, std::shared_ptr<const FieldContext>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    auto ctx = std::make_shared<const FieldContext>(order);
    cache.emplace(order, ctx);
    return ctx;
}

std::vector<Rational> FieldContext::reduce(std::vector<Rational> raw) const {
    Integer den = 1;
    for (auto& q : raw) {
        q.canonicalize();
        if (q.get_den() != 1) den = lcm(den, Integer(q.get_den()));
    }
    std::vector<Integer> ints(raw.size());
    for (std::size_t j = 0; j < raw.size(); ++j) ints[j] = raw[j].get_num() * (den / raw[j].get_den());
    reduce_in_place(ints);
    std::vector<Rational> out(degree_);
    for (std::size_t j = 0; j < degree_; ++j) {
        out[j] = Rational(ints[j], den);
        out[j].canonicalize();
    }
    return out;
}

void FieldContext::reduce_in_place(std::vector<Integer>& raw) const {
    if (raw.size() > order_) {
        for (std::size_t j = order_; j < raw.size(); ++j)
            if (sgn(raw[j]) != 0) raw[j % order_] += raw[j];
        raw.resize(order_);
    }
    for (std::size_t i = raw.size(); i-- > degree_;) {
        if (sgn(raw[i]) == 0) continue;
        mpz_srcptr c = raw[i].get_mpz_t();
        std::size_t base = i - degree_;
        for (auto [j, v] : tail_) {
            mpz_ptr dst = raw[base + j].get_mpz_t();
            if (v > 0)
                mpz_submul_ui(dst, c, static_cast<unsigned long>(v));
            else
                mpz_addmul_ui(dst, c, static_cast<unsigned long>(-v));
        }
    }
    raw.resize(degree_);
}

CycloElem::CycloElem() : CycloElem(Rational(0)) {}

CycloElem::CycloElem(long value) : ctx_(FieldContext::get(1)), num_{Integer(value)}, den_(1) {}

CycloElem::CycloElem(const Rational& value) : ctx_(FieldContext::get(1)), num_(1) {
    Rational q = value;
    q.canonicalize();
    num_[0] = q.get_num();
    den_ = q.get_den();
}

CycloElem::CycloElem(std::shared_ptr<const FieldContext> ctx, std::vector<Integer> num, Integer den)
    : ctx_(std::move(ctx)), num_(std::move(num)), den_(std::move(den)) {}

void CycloElem::normalize() {
    if (den_ == 1) return;
    Integer g = den_;
    bool all_zero = true;
    for (const auto& x : num_) {
        if (sgn(x) == 0) continue;
        all_zero = false;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return;
    }
    if (all_zero) {
        den_ = 1;
        return;
    }
    for (auto& x : num_)
        if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

CycloElem CycloElem::from_integers(const std::shared_ptr<const FieldContext>& ctx,
                                   std::vector<Integer> raw, Integer den) {
    ctx->reduce_in_place(raw);
    if (sgn(den) < 0) {
        den = -den;
        for (auto& x : raw) x = -x;
    }
    CycloElem r(ctx, std::move(raw), std::move(den));
    r.normalize();
    return r;
}

CycloElem CycloElem::from_raw(const std::shared_ptr<const FieldContext>& ctx,
                              std::vector<Rational> raw) {
    Integer den = 1;
    for (auto& q : raw) {
        q.canonicalize();
        if (q.get_den() != 1) den = lcm(den, Integer(q.get_den()));
    }
    std::vector<Integer> ints(raw.size());
    for (std::size_t j = 0; j < raw.size(); ++j) ints[j] = raw[j].get_num() * (den / raw[j].get_den());
    return from_integers(ctx, std::move(ints), std::move(den));
}

CycloElem CycloElem::from_raw(unsigned order, std::vector<Rational> raw) {
    return from_raw(FieldContext::get(order), std::move(raw));
}

CycloElem CycloElem::zero(unsigned order) {
    auto ctx = FieldContext::get(order);
    return CycloElem(ctx, std::vector<Integer>(ctx->degree()), Integer(1));
}

CycloElem CycloElem::root_of_unity(unsigned order, long j) {
    auto ctx = FieldContext::get(order);
    std::vector<Integer> raw(order);
    raw[mod_l(j, order)] = 1;
    return from_integers(ctx, std::move(raw), Integer(1));
}

std::vector<Rational> CycloElem::coeffs() const {
    std::vector<Rational> out(num_.size());
    for (std::size_t j = 0; j < num_.size(); ++j) out[j] = coeff(j);
    return out;
}

Rational CycloElem::coeff(std::size_t j) const {
    Rational q(num_.at(j), den_);
    q.canonicalize();
    return q;
}

bool CycloElem::is_zero() const {
    for (const auto& x : num_)
        if (sgn(x) != 0) return false;
    return true;
}

bool CycloElem::is_rational() const {
    for (std::size_t j = 1; j < num_.size(); ++j)
        if (sgn(num_[j]) != 0) return false;
    return true;
}

bool CycloElem::is_one() const { return is_rational() && den_ == 1 && num_[0] == 1; }

Rational CycloElem::rational_value() const {
    if (!is_rational()) throw InvalidArgument("element is not rational: " + debug_string());
    return coeff(0);
}

CycloElem CycloElem::promote(unsigned target) const {
    unsigned m = order();
    if (m == target) return *this;
    if (target % m != 0)
        throw InvalidArgument("cannot promote order " + std::to_string(m) + " to " +
                              std::to_string(target));
    auto ctx = FieldContext::get(target);
    if (is_rational()) {
        std::vector<Integer> c(ctx->degree());
        c[0] = num_[0];
        return CycloElem(ctx, std::move(c), den_);
    }
    unsigned step = target / m;
    std::vector<Integer> raw(target);
    for (std::size_t j = 0; j < num_.size(); ++j) raw[j * step] = num_[j];
    return from_integers(ctx, std::move(raw), den_);
}

unsigned common_order(const CycloElem& a, const CycloElem& b) {
    return static_cast<unsigned>(lcm_l(a.order(), b.order()));
}

CycloElem CycloElem::operator-() const {
    CycloElem r = *this;
    for (auto& x : r.num_) x = -x;
    return r;
}

CycloElem& CycloElem::operator+=(const CycloElem& o) {
    if (o.is_zero()) return *this;
    if (order() != o.order() && o.order() != 1) {
        unsigned m = common_order(*this, o);
        if (m != order()) *this = promote(m);
        if (o.order() != m) return *this += o.promote(m);
    }
    // o lives in this field, or is a rational stored at order 1
    std::size_t len = o.order() == order() ? num_.size() : 1;
    if (den_ == o.den_) {
        for (std::size_t j = 0; j < len; ++j) num_[j] += o.num_[j];
    } else {
        for (auto& x : num_)
            if (sgn(x) != 0) x *= o.den_;
        for (std::size_t j = 0; j < len; ++j)
            if (sgn(o.num_[j]) != 0) mpz_addmul(num_[j].get_mpz_t(), o.num_[j].get_mpz_t(), den_.get_mpz_t());
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) { return *this += -o; }

CycloElem& CycloElem::operator*=(const CycloElem& o) {
    if (o.is_rational()) {
        if (o.order() != 1 && order() != o.order()) *this = promote(common_order(*this, o));
        if (sgn(o.num_[0]) == 0) {
            for (auto& x : num_) x = 0;
            den_ = 1;
            return *this;
        }
        for (auto& x : num_)
            if (sgn(x) != 0) x *= o.num_[0];
        den_ *= o.den_;
        normalize();
        return *this;
    }
    if (is_rational()) {
        CycloElem r = o;
        if (order() != 1 && order() != o.order()) r = r.promote(common_order(*this, o));
        r *= CycloElem(coeff(0));
        *this = std::move(r);
        return *this;
    }
    unsigned m = common_order(*this, o);
    const CycloElem a = promote(m);
    const CycloElem b = o.promote(m);
    std::vector<Integer> raw(a.num_.size() + b.num_.size() - 1);
    for (std::size_t i = 0; i < a.num_.size(); ++i) {
        if (sgn(a.num_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.num_.size(); ++j) {
            if (sgn(b.num_[j]) == 0) continue;
            mpz_addmul(raw[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
        }
    }
    *this = from_integers(a.ctx_, std::move(raw), a.den_ * b.den_);
    return *this;
}

CycloElem& CycloElem::operator/=(const CycloElem& o) { return *this *= o.inverse(); }

CycloElem CycloElem::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) {
        CycloElem r = *this;
        r.num_[0] = den_;
        r.den_ = num_[0];
        if (sgn(r.den_) < 0) {
            r.den_ = -r.den_;
            r.num_[0] = -r.num_[0];
        }
        return r;
    }
    Poly r0;
    for (long v : ctx_->cyclotomic()) r0.emplace_back(v);
    Poly r1 = coeffs();
    trim(r1);
    Poly s0{}, s1{Rational(1)};
    while (r1.size() > 1) {
        auto [q, rem] = poly_divmod(r0, r1);
        Poly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw ConsistencyError("cyclotomic inverse: non-unit element");
    Rational inv_c = 1 / r1[0];
    for (auto& q : s1) q *= inv_c;
    return from_raw(ctx_, std::move(s1));
}

CycloElem CycloElem::pow(long e) const {
    std::size_t nonzero = 0, index = 0;
    for (std::size_t j = 0; j < num_.size(); ++j)
        if (sgn(num_[j]) != 0) {
            ++nonzero;
            index = j;
        }
    if (nonzero == 1) {
        Rational q(num_[index], den_);
        q.canonicalize();
        if (e < 0) q = 1 / q;
        Integer top, bottom;
        unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
        mpz_pow_ui(top.get_mpz_t(), q.get_num_mpz_t(), k);
        mpz_pow_ui(bottom.get_mpz_t(), q.get_den_mpz_t(), k);
        CycloElem r = root_of_unity(order(), static_cast<long>(index) * (e % static_cast<long>(order())));
        return r * CycloElem(Rational(top, bottom));
    }
    if (e < 0) return inverse().pow(-e);
    CycloElem result = CycloElem(1).promote(order());
    CycloElem base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

CycloElem CycloElem::galois(long a) const {
    unsigned m = order();
    if (m <= 2 || is_rational()) return *this;
    if (gcd_l(a, m) != 1) throw InvalidArgument("galois exponent not coprime to order");
    std::vector<Integer> raw(m);
    for (std::size_t j = 0; j < num_.size(); ++j)
        if (sgn(num_[j]) != 0) raw[mod_l(a * static_cast<long>(j), m)] += num_[j];
    return from_integers(ctx_, std::move(raw), den_);
}

CycloElem CycloElem::conj() const { return galois(-1); }

CycloElem CycloElem::times_root(long j) const {
    unsigned m = order();
    std::vector<Integer> raw(m);
    for (std::size_t i = 0; i < num_.size(); ++i)
        if (sgn(num_[i]) != 0) raw[mod_l(static_cast<long>(i) + j, m)] = num_[i];
    return from_integers(ctx_, std::move(raw), den_);
}

std::string CycloElem::key(unsigned order) const {
    CycloElem p = promote(order);
    std::string out = p.den_.get_str() + ":";
    for (const auto& x : p.num_) {
        out += x.get_str();
        out += ',';
    }
    return out;
}

std::string CycloElem::debug_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < num_.size(); ++j) {
        if (sgn(num_[j]) == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeff(j).get_str() << ")";
        if (j == 1) os << "*z" << order();
        if (j > 1) os << "*z" << order() << "^" << j;
    }
    if (first) os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycloElem& a) { return os << render_symbolic(a); }

std::string render_symbolic(const CycloElem& a) {
    if (a.is_rational()) return to_string(a.rational_value());
    Integer g = 0;
    for (const auto& c : a.numerators()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    Rational scale(g, a.denominator());
    scale.canonicalize();
    CycloElem unit = a / CycloElem(scale);
    std::string prefix = scale == 1 ? "" : to_string(scale) + "*";
    if (auto r = as_root_of_unity(unit)) {
        std::string s = "zeta_" + std::to_string(r->first);
        if (r->second != 1) s += "^" + std::to_string(r->second);
        return prefix + s;
    }
    for (unsigned n : {a.order(), 2 * a.order()})
        for (unsigned j = 1; 2 * j < n; ++j) {
            CycloElem c = root_of_unity(n, static_cast<long>(j)) + root_of_unity(n, -static_cast<long>(j));
            long d = gcd_l(j, n);
            std::string label = prefix + "2cos(2pi*" + std::to_string(j / d) + "/" + std::to_string(n / d) + ")";
            if (unit == c) return label;
            if (unit == -c) return "-" + label;
        }
    return a.debug_string();
}

bool operator==(const CycloElem& a, const CycloElem& b) {
    if (a.order() == b.order()) return a.den_ == b.den_ && a.num_ == b.num_;
    if (a.is_rational() && b.is_rational()) return a.den_ == b.den_ && a.num_[0] == b.num_[0];
    unsigned m = common_order(a, b);
    CycloElem pa = a.promote(m), pb = b.promote(m);
    return pa.den_ == pb.den_ && pa.num_ == pb.num_;
}

CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
CycloElem operator*(CycloElem a, const CycloElem& b) { return a *= b; }
CycloElem operator/(CycloElem a, const CycloElem& b) { return a /= b; }

CycloElem cyclo_new(unsigned order, const std::vector<Rational>& raw) {
    return CycloElem::from_raw(order, raw);
}

CycloElem field_arith(const CycloElem& a, const CycloElem& b, FieldOp op) {
    switch (op) {
        case FieldOp::Add: return a + b;
        case FieldOp::Sub: return a - b;
        case FieldOp::Mul: return a * b;
        case FieldOp::Div: return a / b;
    }
    throw InvalidArgument("unknown field operation");
}

CycloElem root_of_unity(unsigned order, long j) { return CycloElem::root_of_unity(order, j); }

namespace {

CycloElem reduced_root(unsigned order, long j) {
    long jj = mod_l(j, order);
    long g = gcd_l(jj, order);
    if (jj == 0) return CycloElem(1);
    return CycloElem::root_of_unity(static_cast<unsigned>(order / g), jj / g);
}

// Finds j and rational q with a = q * zeta_L^j, L the even order containing a.
std::optional<std::pair<long, Rational>> split_monomial(const CycloElem& a, unsigned& L) {
    unsigned m = a.order();
    L = (m % 2 == 0) ? m : 2 * m;
    CycloElem b = a.promote(L);
    for (long j = 0; j < static_cast<long>(L); ++j) {
        CycloElem s = j == 0 ? b : b.times_root(-j);
        if (s.is_rational()) return std::make_pair(j, s.rational_value());
    }
    return std::nullopt;
}

}  // namespace

std::optional<CycloElem> try_sqrt(const CycloElem& a) {
    if (a.is_zero()) return CycloElem(0);
    unsigned L = 0;
    auto split = split_monomial(a, L);
    if (!split) return std::nullopt;
    auto [j, q] = *split;
    if (sgn(q) < 0) {
        q = -q;
        j += L / 2;
    }
    auto root = rational_sqrt(q);
    if (!root) return std::nullopt;
    CycloElem s = reduced_root(2 * L, j);
    s *= CycloElem(*root);
    return s;
}

std::optional<std::pair<unsigned, unsigned>> as_root_of_unity(const CycloElem& a) {
    if (a.is_zero()) return std::nullopt;
    unsigned L = 0;
    auto split = split_monomial(a, L);
    if (!split) return std::nullopt;
    auto [j, q] = *split;
    if (q == -1) {
        q = 1;
        j += L / 2;
    }
    if (q != 1) return std::nullopt;
    j = mod_l(j, L);
    long g = gcd_l(j, L);
    if (j == 0) return std::make_pair(1u, 0u);
    return std::make_pair(static_cast<unsigned>(L / g), static_cast<unsigned>(j / g));
}

std::optional<unsigned> multiplicative_order(const CycloElem& a) {
    auto r = as_root_of_unity(a);
    if (!r) return std::nullopt;
    return r->first;
}

std::pair<std::string, std::string> approx_complex(const CycloElem& a, unsigned digits) {
    if (digits == 0) digits = 1;
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 3.33) + 96;
    mpfr_t re, im, angle, cs, sn, term, scale;
    mpfr_inits2(prec, re, im, angle, cs, sn, term, scale, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(re, 1);
    mpfr_set_zero(im, 1);
    mpfr_set_zero(scale, 1);
    const auto& c = a.coeffs();
    unsigned m = a.order();
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (sgn(c[j]) == 0) continue;
        mpfr_const_pi(angle, MPFR_RNDN);
        mpfr_mul_ui(angle, angle, 2 * static_cast<unsigned long>(j), MPFR_RNDN);
        mpfr_div_ui(angle, angle, m, MPFR_RNDN);
        mpfr_sin_cos(sn, cs, angle, MPFR_RNDN);
        mpfr_set_q(term, c[j].get_mpq_t(), MPFR_RNDN);
        mpfr_mul(cs, cs, term, MPFR_RNDN);
        mpfr_mul(sn, sn, term, MPFR_RNDN);
        mpfr_add(re, re, cs, MPFR_RNDN);
        mpfr_add(im, im, sn, MPFR_RNDN);
        mpfr_abs(term, term, MPFR_RNDN);
        mpfr_add(scale, scale, term, MPFR_RNDN);
    }
    // cancellation leaves noise far below the requested precision; snap it to zero
    mpfr_mul_2si(scale, scale, -static_cast<long>(prec - 48), MPFR_RNDN);
    auto render = [&](mpfr_t x) {
        mpfr_abs(term, x, MPFR_RNDN);
        if (mpfr_cmp(term, scale) <= 0) mpfr_set_zero(x, 1);
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Rg", static_cast<int>(digits), x);
        std::string s(buf);
        mpfr_free_str(buf);
        return s;
    };
    std::pair<std::string, std::string> out{render(re), render(im)};
    mpfr_clears(re, im, angle, cs, sn, term, scale, static_cast<mpfr_ptr>(nullptr));
    return out;
}

std::complex<double> to_complex(const CycloElem& a) {
    long double re = 0, im = 0;
    const long double two_pi = 6.283185307179586476925286766559L;
    const auto& c = a.coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (sgn(c[j]) == 0) continue;
        long double q = c[j].get_d();
        long double t = two_pi * static_cast<long double>(j) / a.order();
        re += q * std::cos(t);
        im += q * std::sin(t);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

}  // namespace knc
