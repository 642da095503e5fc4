#ifndef SHV_MATRIX_HPP
#define SHV_MATRIX_HPP

#include "shv/rational.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace shv {

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/*
 * Fraction-free elimination on a square array. Every division is exact,
 * so T only needs ring operations plus an exact quotient.
 */
template <typename T>
T bareiss_det(std::vector<std::vector<T>> a) {
    const std::size_t n = a.size();
    if (n == 0) return T(1);
    T prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(a[k][k])) {
            std::size_t p = k + 1;
            while (p < n && is_zero(a[p][k])) ++p;
            if (p == n) return T(0);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = v / prev;
            }
        }
        prev = a[k][k];
    }
    T d = a[n - 1][n - 1];
    if (sign < 0) d = T(0) - d;
    return d;
}

// Row-major dense matrix of exact rationals. Indices are 0-based.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);
    explicit RationalMatrix(const std::vector<std::vector<Rational>>& rows);

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Rational> row(std::size_t i) const;
    RationalMatrix submatrix(const std::vector<std::size_t>& rows,
                             const std::vector<std::size_t>& cols) const;
    RationalMatrix transpose() const;
    RationalMatrix operator*(const RationalMatrix& other) const;
    bool operator==(const RationalMatrix& other) const;
    bool operator!=(const RationalMatrix& other) const { return !(*this == other); }

    Rational det() const;
    std::size_t rank() const;

    // Reduced row echelon form; pivot columns ascending.
    std::pair<RationalMatrix, std::vector<std::size_t>> rref() const;

    // Rows form a basis of {v : M v = 0}; one row per free column, with a 1 there.
    RationalMatrix nullspace() const;

    std::vector<std::vector<Rational>> to_rows() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

// Exact determinant of the selected square submatrix.
Rational minor(const RationalMatrix& m, const std::vector<std::size_t>& rows,
               const std::vector<std::size_t>& cols);

std::size_t rank(const RationalMatrix& m);

// Row spaces agree iff both ranks equal the rank of the stacked matrix.
bool same_row_space(const RationalMatrix& a, const RationalMatrix& b);

RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace shv

#endif
