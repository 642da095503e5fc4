#include "shv/matrix.hpp"

namespace shv {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DomainError("ragged matrix literal");
        for (long v : r) data_.emplace_back(v);
    }
}

RationalMatrix::RationalMatrix(const std::vector<std::vector<Rational>>& rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows[0].size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DomainError("ragged matrix");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::vector<Rational> RationalMatrix::row(std::size_t i) const {
    return {data_.begin() + static_cast<long>(i * cols_),
            data_.begin() + static_cast<long>((i + 1) * cols_)};
}

RationalMatrix RationalMatrix::submatrix(const std::vector<std::size_t>& rows,
                                         const std::vector<std::size_t>& cols) const {
    RationalMatrix s(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (rows[i] >= rows_ || cols[j] >= cols_) throw DomainError("submatrix index out of range");
            s(i, j) = (*this)(rows[i], cols[j]);
        }
    return s;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
    if (cols_ != other.rows_) throw DomainError("matrix product shape mismatch");
    RationalMatrix p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t l = 0; l < cols_; ++l) {
            const Rational& a = (*this)(i, l);
            if (is_zero(a)) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) p(i, j) += a * other(l, j);
        }
    return p;
}

bool RationalMatrix::operator==(const RationalMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

Rational RationalMatrix::det() const {
    if (rows_ != cols_) throw DomainError("determinant of a non-square matrix");
    return bareiss_det(to_rows());
}

std::size_t RationalMatrix::rank() const {
    // Fraction-free forward elimination with column scanning.
    auto a = to_rows();
    std::size_t r = 0;
    Rational prev(1);
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t p = r;
        while (p < rows_ && is_zero(a[p][c])) ++p;
        if (p == rows_) continue;
        std::swap(a[r], a[p]);
        for (std::size_t i = r + 1; i < rows_; ++i) {
            for (std::size_t j = c + 1; j < cols_; ++j)
                a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

std::pair<RationalMatrix, std::vector<std::size_t>> RationalMatrix::rref() const {
    RationalMatrix m = *this;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t p = r;
        while (p < rows_ && is_zero(m(p, c))) ++p;
        if (p == rows_) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(r, j));
        Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < cols_; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {m, pivots};
}

RationalMatrix RationalMatrix::nullspace() const {
    auto [r, pivots] = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols_);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return RationalMatrix(0, cols_);
    return RationalMatrix(basis);
}

std::vector<std::vector<Rational>> RationalMatrix::to_rows() const {
    std::vector<std::vector<Rational>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = row(i);
    return out;
}

Rational minor(const RationalMatrix& m, const std::vector<std::size_t>& rows,
               const std::vector<std::size_t>& cols) {
    if (rows.size() != cols.size()) throw DomainError("minor needs equally many rows and columns");
    if (rows.size() > m.rows() || cols.size() > m.cols()) throw DomainError("minor larger than matrix");
    return m.submatrix(rows, cols).det();
}

std::size_t rank(const RationalMatrix& m) {
    return m.rank();
}

RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols()) throw DomainError("vstack column mismatch");
    auto rows = a.to_rows();
    auto more = b.to_rows();
    rows.insert(rows.end(), more.begin(), more.end());
    return RationalMatrix(rows);
}

bool same_row_space(const RationalMatrix& a, const RationalMatrix& b) {
    std::size_t ra = a.rank();
    return ra == b.rank() && vstack(a, b).rank() == ra;
}

}  // namespace shv
