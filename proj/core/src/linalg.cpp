#include "knc/linalg.hpp"

#include <optional>
#include <sstream>

#include "knc/errors.hpp"

namespace knc {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, CycloElem(0)) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = CycloElem(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<CycloElem>>& rows) {
    std::size_t nr = rows.size();
    std::size_t nc = nr ? rows[0].size() : 0;
    Matrix m(nr, nc);
    for (std::size_t r = 0; r < nr; ++r) {
        if (rows[r].size() != nc) throw InvalidArgument("ragged matrix rows");
        for (std::size_t c = 0; c < nc; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

std::vector<CycloElem> Matrix::column(std::size_t c) const {
    std::vector<CycloElem> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

void Matrix::set_column(std::size_t c, const std::vector<CycloElem>& v) {
    if (v.size() != rows_) throw InvalidArgument("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix m(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::conj_transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c).conj();
    return t;
}

CycloElem Matrix::trace() const {
    CycloElem acc(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) acc += (*this)(i, i);
    return acc;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const auto& x = (*this)(r, c);
            if (r == c ? !x.is_one() : !x.is_zero()) return false;
        }
    return true;
}

bool Matrix::is_diagonal() const {
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (r != c && !(*this)(r, c).is_zero()) return false;
    return true;
}

namespace {

__extension__ using Wide = __int128;
__extension__ using UWide = unsigned __int128;

struct SparseEntry {
    std::vector<std::pair<unsigned, long>> terms;
};

// Entries of m at a common order over one denominator, as machine-size numerators.
struct IntegralView {
    Integer den = 1;
    std::vector<SparseEntry> entries;
};

std::optional<IntegralView> integral_view(const Matrix& m, unsigned order) {
    IntegralView v;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero()) v.den = lcm(v.den, m(r, c).denominator());
    v.entries.resize(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const CycloElem& x = m(r, c);
            if (x.is_zero()) continue;
            CycloElem p = x.promote(order);
            Integer scale = v.den / p.denominator();
            auto& terms = v.entries[r * m.cols() + c].terms;
            const auto& num = p.numerators();
            for (std::size_t j = 0; j < num.size(); ++j) {
                if (sgn(num[j]) == 0) continue;
                Integer t = num[j] * scale;
                if (!t.fits_slong_p() || abs(t) > (1L << 40)) return std::nullopt;
                terms.emplace_back(static_cast<unsigned>(j), t.get_si());
            }
        }
    return v;
}

std::optional<Matrix> integral_product(const Matrix& a, const Matrix& b) {
    unsigned order = 1;
    for (const Matrix* m : {&a, &b})
        for (std::size_t r = 0; r < m->rows(); ++r)
            for (std::size_t c = 0; c < m->cols(); ++c)
                order = static_cast<unsigned>(lcm_l(order, (*m)(r, c).order()));
    auto va = integral_view(a, order);
    if (!va) return std::nullopt;
    auto vb = integral_view(b, order);
    if (!vb) return std::nullopt;
    auto ctx = FieldContext::get(order);
    std::size_t width = 2 * ctx->degree();
    Matrix out(a.rows(), b.cols());
    Integer den = va->den * vb->den;
    std::vector<Wide> acc(width);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            std::fill(acc.begin(), acc.end(), 0);
            bool any = false;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                const auto& x = va->entries[i * a.cols() + k].terms;
                const auto& y = vb->entries[k * b.cols() + j].terms;
                if (x.empty() || y.empty()) continue;
                any = true;
                for (auto [ex, cx] : x)
                    for (auto [ey, cy] : y) acc[ex + ey] += static_cast<Wide>(cx) * cy;
            }
            if (!any) continue;
            std::vector<Integer> raw(width);
            for (std::size_t e = 0; e < width; ++e) {
                Wide v = acc[e];
                if (v == 0) continue;
                bool neg = v < 0;
                UWide mag = neg ? -static_cast<UWide>(v) : static_cast<UWide>(v);
                Integer hi(static_cast<unsigned long>(mag >> 64));
                Integer lo(static_cast<unsigned long>(mag));
                raw[e] = (hi << 64) + lo;
                if (neg) raw[e] = -raw[e];
            }
            out(i, j) = CycloElem::from_integers(ctx, std::move(raw), den);
        }
    return out;
}

}  // namespace

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix product shape mismatch");
    if (a.rows_ * a.cols_ * b.cols_ >= 512)
        if (auto fast = integral_product(a, b)) return std::move(*fast);
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const auto& y = b(k, j);
                if (y.is_zero()) continue;
                r(i, j) += x * y;
            }
        }
    return r;
}

std::vector<CycloElem> operator*(const Matrix& a, const std::vector<CycloElem>& v) {
    if (a.cols() != v.size()) throw InvalidArgument("matrix-vector shape mismatch");
    std::vector<CycloElem> r(a.rows(), CycloElem(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (!a(i, k).is_zero() && !v[k].is_zero()) r[i] += a(i, k) * v[k];
    return r;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix sum shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix sum shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(const CycloElem& s) {
    for (auto& x : data_)
        if (!x.is_zero()) x *= s;
    return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(Matrix a, const CycloElem& s) { return a *= s; }

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<std::size_t> row_reduce(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
        CycloElem inv = m(row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c)
            if (!m(row, c).is_zero()) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            CycloElem f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t Matrix::rank() const {
    Matrix m = *this;
    return row_reduce(m).size();
}

CycloElem Matrix::determinant() const {
    if (rows_ != cols_) throw InvalidArgument("determinant of non-square matrix");
    Matrix m = *this;
    CycloElem det(1);
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t p = col;
        while (p < rows_ && m(p, col).is_zero()) ++p;
        if (p == rows_) return CycloElem(0);
        if (p != col) {
            for (std::size_t c = 0; c < cols_; ++c) std::swap(m(p, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        CycloElem inv = m(col, col).inverse();
        for (std::size_t r = col + 1; r < rows_; ++r) {
            if (m(r, col).is_zero()) continue;
            CycloElem f = m(r, col) * inv;
            for (std::size_t c = col; c < cols_; ++c)
                if (!m(col, c).is_zero()) m(r, c) -= f * m(col, c);
        }
    }
    return det;
}

std::vector<std::vector<CycloElem>> Matrix::nullspace() const {
    Matrix m = *this;
    auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<CycloElem>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<CycloElem> v(cols_, CycloElem(0));
        v[free] = CycloElem(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix Matrix::solve(const Matrix& b) const {
    if (rows_ != cols_ || b.rows_ != rows_) throw InvalidArgument("solve shape mismatch");
    if (cols_ == 0) return Matrix(0, b.cols_);
    Matrix aug(rows_, cols_ + b.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
        for (std::size_t c = 0; c < b.cols_; ++c) aug(r, cols_ + c) = b(r, c);
    }
    auto pivots = row_reduce(aug);
    if (pivots.size() < cols_ || pivots[cols_ - 1] != cols_ - 1)
        throw DivisionByZero("singular matrix");
    return aug.block(0, cols_, rows_, b.cols_);
}

Matrix Matrix::inverse() const { return solve(identity(rows_)); }

Matrix Matrix::pow(long e) const {
    if (rows_ != cols_) throw InvalidArgument("power of non-square matrix");
    if (is_diagonal()) {
        Matrix d(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i) d(i, i) = (*this)(i, i).pow(e);
        return d;
    }
    if (e < 0) return inverse().pow(-e);
    Matrix result = identity(rows_);
    Matrix base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

std::string Matrix::debug_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << "[";
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).debug_string();
        os << "]\n";
    }
    return os.str();
}

}  // namespace knc
