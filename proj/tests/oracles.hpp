#pragma once

// Reference computations written directly from the definitions, sharing no
// code with the library beyond Partition, Scalar and Poly.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "nilcent/combinatorics.hpp"
#include "nilcent/polyring.hpp"

namespace oracle {

using nilcent::Partition;
using IMat = std::vector<std::vector<std::int64_t>>;
using Label = std::array<int, 3>;  // i, j, s

// V has basis e^k w_i, 0 <= k < lambda_i, blocks in order.
inline int vpos(const Partition& lam, int i, int k) {
    int off = 0;
    for (int b = 1; b < i; ++b) off += lam[static_cast<std::size_t>(b)];
    return off + k;
}

inline IMat zero(int n) { return IMat(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)); }

inline IMat mul(const IMat& a, const IMat& b) {
    const std::size_t n = a.size();
    IMat c(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k)
            if (a[r][k])
                for (std::size_t q = 0; q < n; ++q) c[r][q] += a[r][k] * b[k][q];
    return c;
}

inline IMat sub(IMat a, const IMat& b) {
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < a.size(); ++c) a[r][c] -= b[r][c];
    return a;
}

inline IMat e_matrix(const Partition& lam) {
    IMat e = zero(lam.N());
    for (int i = 1; i <= static_cast<int>(lam.n()); ++i)
        for (int k = 0; k + 1 < lam[static_cast<std::size_t>(i)]; ++k)
            e[static_cast<std::size_t>(vpos(lam, i, k + 1))][static_cast<std::size_t>(vpos(lam, i, k))] = 1;
    return e;
}

// The linear map e^k w_i -> e^{k+s} w_j (zero past the end of block j),
// other blocks -> 0.
inline IMat shift_map(const Partition& lam, int i, int j, int s) {
    IMat m = zero(lam.N());
    for (int k = 0; k < lam[static_cast<std::size_t>(i)]; ++k)
        if (k + s < lam[static_cast<std::size_t>(j)])
            m[static_cast<std::size_t>(vpos(lam, j, k + s))][static_cast<std::size_t>(vpos(lam, i, k))] = 1;
    return m;
}

// All shift maps that commute with e, found by trying every (i, j, s) with
// 0 <= s < lambda_j; ordered by (i, j, s).
inline std::vector<Label> basis(const Partition& lam) {
    std::vector<Label> out;
    IMat e = e_matrix(lam);
    const int n = static_cast<int>(lam.n());
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int s = 0; s < lam[static_cast<std::size_t>(j)]; ++s) {
                IMat m = shift_map(lam, i, j, s);
                if (mul(m, e) == mul(e, m) && m != zero(lam.N())) out.push_back({i, j, s});
            }
    return out;
}

inline IMat combo_matrix(const Partition& lam, const std::vector<Label>& b, const std::vector<std::int64_t>& x) {
    IMat m = zero(lam.N());
    for (std::size_t a = 0; a < b.size(); ++a)
        if (x[a]) {
            IMat t = shift_map(lam, b[a][0], b[a][1], b[a][2]);
            for (std::size_t r = 0; r < m.size(); ++r)
                for (std::size_t c = 0; c < m.size(); ++c) m[r][c] += x[a] * t[r][c];
        }
    return m;
}

// Coordinates of a centralising matrix: the coefficient of xi_i^{j,s} is the
// e^s w_j component of M w_i.
inline std::vector<std::int64_t> coords(const Partition& lam, const std::vector<Label>& b, const IMat& m) {
    std::vector<std::int64_t> x(b.size(), 0);
    for (std::size_t a = 0; a < b.size(); ++a)
        x[a] = m[static_cast<std::size_t>(vpos(lam, b[a][1], b[a][2]))][static_cast<std::size_t>(vpos(lam, b[a][0], 0))];
    return x;
}

// d_r: the unique i with lambda_1 + ... + lambda_{i-1} < r <= lambda_1 + ... + lambda_i.
inline int degree(const Partition& lam, int r) {
    int below = 0;
    for (int i = 1; i <= static_cast<int>(lam.n()); ++i) {
        int upto = below + lam[static_cast<std::size_t>(i)];
        if (below < r && r <= upto) return i;
        below = upto;
    }
    return -1;
}

// Every mu with 0 <= mu_i <= lambda_i by counting through all vectors, then
// filtering on |mu| = r and d nonzero entries. Lexicographic order.
inline std::vector<std::vector<int>> compositions(const Partition& lam, int r, int d) {
    const std::size_t n = lam.n();
    std::vector<int> mu(n, 0);
    std::vector<std::vector<int>> out;
    while (true) {
        int sum = 0, nz = 0;
        for (int v : mu) {
            sum += v;
            nz += v > 0;
        }
        if (sum == r && nz == d) out.push_back(mu);
        std::size_t k = n;
        while (k > 0) {
            --k;
            if (mu[k] < lam[k + 1]) {
                ++mu[k];
                for (std::size_t q = k + 1; q < n; ++q) mu[q] = 0;
                break;
            }
            if (k == 0) return out;
        }
        if (n == 0) return out;
    }
}

// Elementary symmetric functions of the eigenvalues of the generic N x N
// matrix X, via Newton's identities r e_r = sum_k (-1)^{k-1} e_{r-k} tr(X^k).
// var(row, col) names the variable in entry (row, col).
template <class VarOf>
std::vector<nilcent::Poly> char_coefficients(int n, VarOf var) {
    using nilcent::Poly;
    const nilcent::Field q = nilcent::Field::rationals();
    using PMat = std::vector<std::vector<Poly>>;
    PMat x(static_cast<std::size_t>(n), std::vector<Poly>(static_cast<std::size_t>(n), Poly(q)));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) x[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = Poly::variable(q, var(r, c));
    std::vector<Poly> traces;  // tr(X^k), k = 1..n
    PMat power = x;
    for (int k = 1; k <= n; ++k) {
        Poly t(q);
        for (int d = 0; d < n; ++d) t += power[static_cast<std::size_t>(d)][static_cast<std::size_t>(d)];
        traces.push_back(t);
        PMat next(static_cast<std::size_t>(n), std::vector<Poly>(static_cast<std::size_t>(n), Poly(q)));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                for (int m = 0; m < n; ++m)
                    next[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] +=
                        power[static_cast<std::size_t>(r)][static_cast<std::size_t>(m)] * x[static_cast<std::size_t>(m)][static_cast<std::size_t>(c)];
        power = next;
    }
    std::vector<Poly> e{Poly::constant(q, 1)};
    for (int r = 1; r <= n; ++r) {
        Poly acc(q);
        for (int k = 1; k <= r; ++k) {
            Poly term = e[static_cast<std::size_t>(r - k)] * traces[static_cast<std::size_t>(k - 1)];
            acc += k % 2 == 1 ? term : -term;
        }
        e.push_back(acc * nilcent::Scalar(q, 1, r));
    }
    e.erase(e.begin());
    return e;
}

}  // namespace oracle
