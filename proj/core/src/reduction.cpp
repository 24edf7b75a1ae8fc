#include "knc/reduction.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "knc/errors.hpp"

namespace knc {

DifferentialForm DifferentialForm::dt_monomial(long e, const CycloElem& c) {
    return {LaurentPoly::monomial(e, c), {}};
}

DifferentialForm DifferentialForm::udt_monomial(long e, const CycloElem& c) {
    return {{}, LaurentPoly::monomial(e, c)};
}

DifferentialForm& DifferentialForm::operator+=(const DifferentialForm& o) {
    dt_part += o.dt_part;
    udt_part += o.udt_part;
    return *this;
}

DifferentialForm& DifferentialForm::operator*=(const CycloElem& s) {
    dt_part *= s;
    udt_part *= s;
    return *this;
}

DifferentialForm operator+(DifferentialForm a, const DifferentialForm& b) { return a += b; }
DifferentialForm operator*(DifferentialForm a, const CycloElem& s) { return a *= s; }

DifferentialForm ingest(const HyperellipticCurve& curve, const KahlerForm& form) {
    DifferentialForm out;
    out.dt_part = form.f0 + form.g1 * curve.poly_derivative() * CycloElem(Rational(1, 2));
    out.udt_part = form.f1 - form.g0.derivative();
    return out;
}

DifferentialForm exact_dt_form(long a) {
    return DifferentialForm::dt_monomial(a - 1, CycloElem(a));
}

DifferentialForm exact_u_form(const HyperellipticCurve& curve, long a, long j) {
    if (j < 1) throw InvalidArgument("exact_u_form needs an odd power u^{2j+1} with j >= 1");
    LaurentPoly pj = LaurentPoly::monomial(0);
    for (long i = 0; i < j - 1; ++i) pj *= curve.poly();
    LaurentPoly pj_full = pj * curve.poly();
    LaurentPoly g = LaurentPoly::monomial(a - 1, CycloElem(a)) * pj_full;
    g += LaurentPoly::monomial(a, CycloElem(Rational(2 * j + 1, 2))) * pj * curve.poly_derivative();
    return {{}, g};
}

KahlerForm exact_kahler_form(long a) {
    KahlerForm k;
    k.f1 = LaurentPoly::monomial(a - 1, CycloElem(a));
    k.g0 = LaurentPoly::monomial(a);
    return k;
}

DifferentialClass DifferentialClass::zero(long n) {
    return {std::vector<CycloElem>(2 * n + 1, CycloElem(0))};
}

DifferentialClass DifferentialClass::unit(long n, long i) {
    DifferentialClass c = zero(n);
    c.coords.at(i) = CycloElem(1);
    return c;
}

DifferentialClass& DifferentialClass::operator+=(const DifferentialClass& o) {
    if (o.coords.size() != coords.size()) throw InvalidArgument("class dimension mismatch");
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (!o.coords[i].is_zero()) coords[i] += o.coords[i];
    return *this;
}

DifferentialClass& DifferentialClass::operator*=(const CycloElem& s) {
    for (auto& c : coords) c *= s;
    return *this;
}

bool DifferentialClass::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const CycloElem& c) { return c.is_zero(); });
}

std::ostream& operator<<(std::ostream& os, const DifferentialClass& c) {
    os << "(";
    for (std::size_t i = 0; i < c.coords.size(); ++i) os << (i ? ", " : "") << c.coords[i];
    return os << ")";
}

const CycloElem& PQTable::at(long row, long i) const {
    if (row < first_row || row > last_row() || i < -2 * genus || i > -1)
        throw InvalidArgument("table index out of range");
    return rows[row - first_row][-i - 1];
}

CycloElem relation_coefficient(const HyperellipticCurve& curve, long b, long j) {
    return curve.coeff(j) * CycloElem(2 * b + 3 * j);
}

Reducer::Reducer(HyperellipticCurve curve) : curve_(std::move(curve)) {
    long r = 2 * genus();
    for (long k = -r; k <= -1; ++k) {
        std::vector<CycloElem> row(r, CycloElem(0));
        row[-k - 1] = CycloElem(1);
        p_rows_.push_back(row);
    }
    for (long m = 1; m <= r; ++m) {
        std::vector<CycloElem> row(r, CycloElem(0));
        row[m - 1] = CycloElem(1);
        q_rows_.push_back(row);
    }
}

void Reducer::extend_p(long k) const {
    long r = 2 * genus();
    while (static_cast<long>(p_rows_.size()) - r <= k) {
        long kk = static_cast<long>(p_rows_.size()) - r;
        std::vector<CycloElem> row(r, CycloElem(0));
        for (long j = 1; j <= r; ++j) {
            CycloElem f = curve_.coeff(j) * CycloElem(3 * j + 2 * kk - 2 * r);
            if (f.is_zero()) continue;
            const auto& src = p_rows_[kk - r + j - 1 + r];
            for (long i = 0; i < r; ++i)
                if (!src[i].is_zero()) row[i] -= f * src[i];
        }
        CycloElem inv(Rational(1, 2 * kk + r + 3));
        for (auto& x : row) x *= inv;
        p_rows_.push_back(std::move(row));
    }
}

void Reducer::extend_q(long m) const {
    long r = 2 * genus();
    while (static_cast<long>(q_rows_.size()) < m) {
        long mm = static_cast<long>(q_rows_.size()) + 1;
        std::vector<CycloElem> row(r, CycloElem(0));
        for (long j = 2; j <= r + 1; ++j) {
            CycloElem f = curve_.coeff(j) * CycloElem(3 * j - 2 * mm);
            if (f.is_zero()) continue;
            const auto& src = q_rows_[mm - j];
            for (long i = 0; i < r; ++i)
                if (!src[i].is_zero()) row[i] += f * src[i];
        }
        CycloElem inv = (curve_.coeff(1) * CycloElem(2 * mm - 3)).inverse();
        for (auto& x : row) x *= inv;
        q_rows_.push_back(std::move(row));
    }
}

std::vector<CycloElem> Reducer::p_row(long k) const {
    long r = 2 * genus();
    if (k < -r) throw InvalidArgument("P rows start at -2n");
    std::lock_guard<std::mutex> lock(mutex_);
    extend_p(k);
    return p_rows_[k + r];
}

std::vector<CycloElem> Reducer::q_row(long m) const {
    if (m < 1) throw InvalidArgument("Q rows start at 1");
    std::lock_guard<std::mutex> lock(mutex_);
    extend_q(m);
    return q_rows_[m - 1];
}

std::vector<CycloElem> Reducer::u_monomial(long e) const {
    return e >= -2 * genus() ? p_row(e) : q_row(-e);
}

DifferentialClass Reducer::reduce(const DifferentialForm& form) const {
    long r = 2 * genus();
    DifferentialClass out = DifferentialClass::zero(genus());
    out.coords[0] = form.dt_part.coeff(-1);
    for (const auto& [e, c] : form.udt_part.terms()) {
        auto row = u_monomial(e);
        for (long i = 0; i < r; ++i)
            if (!row[i].is_zero()) out.coords[i + 1] += c * row[i];
    }
    return out;
}

PQTable Reducer::p_table(long m_max) const {
    if (m_max < 0) throw InvalidArgument("p_table needs m_max >= 0");
    PQTable t;
    t.kind = PQTable::Kind::P;
    t.genus = genus();
    t.first_row = -2 * genus();
    for (long k = t.first_row; k <= m_max; ++k) t.rows.push_back(p_row(k));
    return t;
}

PQTable Reducer::q_table(long m_max) const {
    if (m_max < 1) throw InvalidArgument("q_table needs m_max >= 1");
    PQTable t;
    t.kind = PQTable::Kind::Q;
    t.genus = genus();
    t.first_row = 1;
    for (long m = 1; m <= m_max; ++m) t.rows.push_back(q_row(m));
    return t;
}

PQTable p_table(const HyperellipticCurve& curve, long m_max) { return Reducer(curve).p_table(m_max); }
PQTable q_table(const HyperellipticCurve& curve, long m_max) { return Reducer(curve).q_table(m_max); }

DifferentialClass reduce_form(const HyperellipticCurve& curve, const DifferentialForm& form) {
    return Reducer(curve).reduce(form);
}

namespace {

using SparseRow = std::map<std::size_t, CycloElem>;

// Solves A x = rhs for square nonsingular sparse A given by rows.
std::vector<CycloElem> sparse_solve(std::vector<SparseRow> rows, std::vector<CycloElem> rhs,
                                    std::size_t ncols) {
    std::size_t nrows = rows.size();
    std::vector<bool> used(nrows, false);
    std::vector<std::size_t> pivot_row(ncols);
    for (std::size_t col = 0; col < ncols; ++col) {
        std::size_t best = nrows;
        for (std::size_t r = 0; r < nrows; ++r) {
            if (used[r] || !rows[r].count(col)) continue;
            if (best == nrows || rows[r].size() < rows[best].size()) best = r;
        }
        if (best == nrows) throw ConsistencyError("relation system is singular at column " +
                                                  std::to_string(col));
        used[best] = true;
        pivot_row[col] = best;
        CycloElem inv = rows[best].at(col).inverse();
        for (std::size_t r = 0; r < nrows; ++r) {
            if (used[r]) continue;
            auto it = rows[r].find(col);
            if (it == rows[r].end()) continue;
            CycloElem f = it->second * inv;
            for (const auto& [c, v] : rows[best]) {
                auto [jt, inserted] = rows[r].try_emplace(c, CycloElem(0));
                jt->second -= f * v;
                if (jt->second.is_zero()) rows[r].erase(jt);
            }
            if (!rhs[best].is_zero()) rhs[r] -= f * rhs[best];
        }
    }
    std::vector<CycloElem> x(ncols, CycloElem(0));
    for (std::size_t col = ncols; col-- > 0;) {
        const auto& row = rows[pivot_row[col]];
        CycloElem acc = rhs[pivot_row[col]];
        for (const auto& [c, v] : row)
            if (c != col && !x[c].is_zero()) acc -= v * x[c];
        x[col] = acc / row.at(col);
    }
    return x;
}

}  // namespace

DifferentialClass reduce_oracle(const HyperellipticCurve& curve, const DifferentialForm& form) {
    long n = curve.genus();
    long r = 2 * n;
    DifferentialClass out = DifferentialClass::zero(n);
    // relation (i): t^a dt is exact unless a = -1
    out.coords[0] = form.dt_part.coeff(-1);
    if (form.udt_part.is_zero()) return out;

    long lo = std::min(form.udt_part.min_exponent(), -r);
    long hi = std::max(form.udt_part.max_exponent(), -1L);
    std::size_t size = static_cast<std::size_t>(hi - lo + 1);
    std::vector<SparseRow> rows(size);
    std::size_t col = 0;
    for (long b = lo; b <= hi - r; ++b, ++col)
        for (long j = 1; j <= r + 1; ++j) {
            CycloElem v = relation_coefficient(curve, b, j);
            if (!v.is_zero()) rows[b + j - 1 - lo].emplace(col, v);
        }
    std::size_t omega_start = col;
    for (long i = 1; i <= r; ++i, ++col) rows[-i - lo].emplace(col, CycloElem(1));
    if (col != size) throw ConsistencyError("relation window is not square");

    std::vector<CycloElem> rhs(size, CycloElem(0));
    for (const auto& [e, c] : form.udt_part.terms()) rhs[e - lo] = c;
    auto x = sparse_solve(std::move(rows), std::move(rhs), size);
    for (long i = 1; i <= r; ++i) out.coords[i] = x[omega_start + i - 1];
    return out;
}

std::vector<CycloElem> p_recursion_residual(const HyperellipticCurve& curve, const PQTable& table,
                                            long k) {
    long r = 2 * curve.genus();
    std::vector<CycloElem> res(r, CycloElem(0));
    for (long i = -r; i <= -1; ++i) {
        CycloElem acc = CycloElem(2 * k + r + 3) * table.at(k, i);
        for (long j = 1; j <= r; ++j)
            acc += CycloElem(3 * j + 2 * k - 2 * r) * curve.coeff(j) * table.at(k - r + j - 1, i);
        res[-i - 1] = acc;
    }
    return res;
}

std::vector<CycloElem> q_recursion_residual(const HyperellipticCurve& curve, const PQTable& table,
                                            long m) {
    long r = 2 * curve.genus();
    std::vector<CycloElem> res(r, CycloElem(0));
    for (long i = -r; i <= -1; ++i) {
        CycloElem acc = CycloElem(2 * m - 3) * curve.coeff(1) * table.at(m, i);
        for (long j = 2; j <= r + 1; ++j)
            acc -= CycloElem(3 * j - 2 * m) * curve.coeff(j) * table.at(m - j + 1, i);
        res[-i - 1] = acc;
    }
    return res;
}

}  // namespace knc
