#include "nilcent/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include <omp.h>

namespace nilcent {

Vec zero_vec(Field f, std::size_t n) { return Vec(n, Scalar(f, 0)); }

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar(f, 0)) {}

Matrix Matrix::from_rows(Field f, const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(f, 0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

Vec Matrix::row(std::size_t r) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::append_row(const Vec& v) {
    if (v.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
}

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = Scalar(f, 1);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix m(a.field_, a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(r, k);
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c)
                if (!b(k, c).is_zero()) m(r, c) += x * b(k, c);
        }
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    Matrix m = a;
    for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] += b.data_[k];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + Scalar(b.field_, -1) * b; }

Matrix operator*(const Scalar& c, const Matrix& a) {
    Matrix m = a;
    for (auto& x : m.data_) x *= c;
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix inverse(const Matrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("inverse of a non-square matrix");
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = Scalar(m.field(), 1);
    }
    Echelon e = row_reduce(std::move(aug));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw DivisionByZero("singular matrix");
    Matrix inv(m.field(), n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
    return inv;
}

Echelon row_reduce(Matrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && m(pr, c).is_zero()) ++pr;
        if (pr == rows) continue;
        if (pr != r)
            for (std::size_t k = 0; k < cols; ++k) std::swap(m(pr, k), m(r, k));
        Scalar inv = m(r, c).inverse();
        for (std::size_t k = c; k < cols; ++k) m(r, k) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Scalar factor = m(i, c);
            for (std::size_t k = c; k < cols; ++k) m(i, k) -= factor * m(r, k);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank_mod_p(std::vector<std::uint64_t> a, std::size_t rows, std::size_t cols,
                       std::uint64_t p, Exec exec) {
    if (a.size() != rows * cols) throw std::invalid_argument("rank_mod_p: size mismatch");
    auto mulmod = [p](std::uint64_t x, std::uint64_t y) {
        return static_cast<std::uint64_t>((unsigned __int128)x * y % p);
    };
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && a[pr * cols + c] == 0) ++pr;
        if (pr == rows) continue;
        if (pr != r)
            std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pr * cols),
                             a.begin() + static_cast<std::ptrdiff_t>((pr + 1) * cols),
                             a.begin() + static_cast<std::ptrdiff_t>(r * cols));
        const std::uint64_t inv = mod_inverse(a[r * cols + c], p);
        for (std::size_t k = c; k < cols; ++k) a[r * cols + k] = mulmod(a[r * cols + k], inv);
        const std::uint64_t* pivot_row = a.data() + r * cols;
        auto eliminate = [&](std::size_t i) {
            std::uint64_t* row = a.data() + i * cols;
            const std::uint64_t f = row[c];
            if (f == 0) return;
            for (std::size_t k = c; k < cols; ++k) {
                std::uint64_t sub = mulmod(f, pivot_row[k]);
                row[k] = row[k] >= sub ? row[k] - sub : row[k] + p - sub;
            }
        };
        const auto first = static_cast<std::int64_t>(r + 1), last = static_cast<std::int64_t>(rows);
        if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
            for (std::int64_t i = first; i < last; ++i) eliminate(static_cast<std::size_t>(i));
        } else {
            for (std::int64_t i = first; i < last; ++i) eliminate(static_cast<std::size_t>(i));
        }
        ++r;
    }
    return r;
}

std::size_t rank_rational_bareiss(const Matrix& m) {
    if (!m.field().is_rational()) throw FieldMismatch("rank_rational_bareiss needs Q");
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<mpz_class> a(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (std::size_t k = 0; k < cols; ++k) {
            const mpz_class& d = m(i, k).rational().get_den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        for (std::size_t k = 0; k < cols; ++k) {
            mpq_class v = m(i, k).rational() * l;
            a[i * cols + k] = v.get_num();
        }
    }
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && a[pr * cols + c] == 0) ++pr;
        if (pr == rows) continue;
        if (pr != r)
            for (std::size_t k = 0; k < cols; ++k) std::swap(a[pr * cols + k], a[r * cols + k]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t k = c + 1; k < cols; ++k) {
                mpz_class v = a[r * cols + c] * a[i * cols + k] - a[i * cols + c] * a[r * cols + k];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i * cols + k] = v;
            }
            a[i * cols + c] = 0;
        }
        prev = a[r * cols + c];
        ++r;
    }
    return r;
}

std::size_t rank(const Matrix& m, Exec exec) {
    if (m.field().is_rational()) return rank_rational_bareiss(m);
    std::vector<std::uint64_t> a(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < m.cols(); ++k) a[i * m.cols() + k] = m(i, k).residue();
    return rank_mod_p(std::move(a), m.rows(), m.cols(), m.field().characteristic(), exec);
}

std::vector<Vec> nullspace(const Matrix& m) {
    Echelon e = row_reduce(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v = zero_vec(m.field(), cols);
        v[free] = Scalar(m.field(), 1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t k = 0; k < m.cols(); ++k) aug(i, k) = m(i, k);
        aug(i, m.cols()) = b[i];
    }
    Echelon e = row_reduce(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
    Vec x = zero_vec(m.field(), m.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
    return x;
}

}  // namespace nilcent
