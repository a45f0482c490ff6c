#include "gorhom/fp_matrix.h"

#include <cassert>
#include <stdexcept>

namespace gorhom {

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

uint32_t fp_inv(uint32_t x, uint32_t p) {
    // extended Euclid; x must be nonzero mod p
    int64_t a = x % p, m = p, u = 1, v = 0;
    while (a != 0) {
        int64_t q = m / a;
        m -= q * a; std::swap(a, m);
        v -= q * u; std::swap(u, v);
    }
    assert(m == 1 && "fp_inv of non-unit");
    int64_t r = v % (int64_t)p;
    if (r < 0) r += p;
    return (uint32_t)r;
}

Mat Mat::identity(int n, uint32_t p) {
    Mat m(n, n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1 % p;
    return m;
}

Mat Mat::from_rows(std::vector<std::vector<uint32_t>> rows_in, uint32_t p) {
    int r = (int)rows_in.size();
    int c = r ? (int)rows_in[0].size() : 0;
    Mat m(r, c, p);
    for (int i = 0; i < r; ++i) {
        assert((int)rows_in[i].size() == c);
        for (int j = 0; j < c; ++j) m.at(i, j) = rows_in[i][j] % p;
    }
    return m;
}

Mat Mat::operator*(const Mat& rhs) const {
    assert(cols == rhs.rows && mod == rhs.mod);
    Mat out(rows, rhs.cols, mod);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            uint64_t lik = at(i, k);
            if (!lik) continue;
            for (int j = 0; j < rhs.cols; ++j) {
                uint64_t v = out.at(i, j) + lik * rhs.at(k, j);
                out.at(i, j) = (uint32_t)(v % mod);
            }
        }
    return out;
}

Mat Mat::operator+(const Mat& rhs) const {
    assert(rows == rhs.rows && cols == rhs.cols && mod == rhs.mod);
    Mat out = *this;
    for (size_t i = 0; i < a.size(); ++i) out.a[i] = (out.a[i] + rhs.a[i]) % mod;
    return out;
}

Mat Mat::operator-(const Mat& rhs) const {
    assert(rows == rhs.rows && cols == rhs.cols && mod == rhs.mod);
    Mat out = *this;
    for (size_t i = 0; i < a.size(); ++i) out.a[i] = (out.a[i] + mod - rhs.a[i]) % mod;
    return out;
}

Mat Mat::scaled(uint32_t c) const {
    Mat out = *this;
    c %= mod;
    for (auto& v : out.a) v = (uint32_t)((uint64_t)v * c % mod);
    return out;
}

Mat& Mat::add_in_place(const Mat& rhs, uint32_t coeff) {
    assert(rows == rhs.rows && cols == rhs.cols && mod == rhs.mod);
    coeff %= mod;
    for (size_t i = 0; i < a.size(); ++i)
        a[i] = (uint32_t)((a[i] + (uint64_t)coeff * rhs.a[i]) % mod);
    return *this;
}

Mat Mat::transposed() const {
    Mat out(cols, rows, mod);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out.at(j, i) = at(i, j);
    return out;
}

Mat Mat::col(int j) const {
    Mat out(rows, 1, mod);
    for (int i = 0; i < rows; ++i) out.at(i, 0) = at(i, j);
    return out;
}

bool Mat::is_zero() const {
    for (auto v : a)
        if (v) return false;
    return true;
}

Mat hstack(const Mat& lhs, const Mat& rhs) {
    assert(lhs.rows == rhs.rows && lhs.mod == rhs.mod);
    Mat out(lhs.rows, lhs.cols + rhs.cols, lhs.mod);
    for (int i = 0; i < lhs.rows; ++i) {
        for (int j = 0; j < lhs.cols; ++j) out.at(i, j) = lhs.at(i, j);
        for (int j = 0; j < rhs.cols; ++j) out.at(i, lhs.cols + j) = rhs.at(i, j);
    }
    return out;
}

Mat vstack(const Mat& top, const Mat& bot) {
    assert(top.cols == bot.cols && top.mod == bot.mod);
    Mat out(top.rows + bot.rows, top.cols, top.mod);
    for (int i = 0; i < top.rows; ++i)
        for (int j = 0; j < top.cols; ++j) out.at(i, j) = top.at(i, j);
    for (int i = 0; i < bot.rows; ++i)
        for (int j = 0; j < bot.cols; ++j) out.at(top.rows + i, j) = bot.at(i, j);
    return out;
}

Mat block_diag(const Mat& lhs, const Mat& rhs) {
    assert(lhs.mod == rhs.mod);
    Mat out(lhs.rows + rhs.rows, lhs.cols + rhs.cols, lhs.mod);
    for (int i = 0; i < lhs.rows; ++i)
        for (int j = 0; j < lhs.cols; ++j) out.at(i, j) = lhs.at(i, j);
    for (int i = 0; i < rhs.rows; ++i)
        for (int j = 0; j < rhs.cols; ++j) out.at(lhs.rows + i, lhs.cols + j) = rhs.at(i, j);
    return out;
}

namespace {

// forward elimination; returns pivot (row, col) pairs, matrix left in echelon form
std::vector<std::pair<int, int>> eliminate(Mat& m) {
    std::vector<std::pair<int, int>> pivots;
    const uint32_t p = m.mod;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int piv = -1;
        for (int i = row; i < m.rows; ++i)
            if (m.at(i, col)) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
        uint32_t inv = fp_inv(m.at(row, col), p);
        for (int j = col; j < m.cols; ++j)
            m.at(row, j) = (uint32_t)((uint64_t)m.at(row, j) * inv % p);
        for (int i = row + 1; i < m.rows; ++i) {
            uint32_t f = m.at(i, col);
            if (!f) continue;
            for (int j = col; j < m.cols; ++j)
                m.at(i, j) = (uint32_t)((m.at(i, j) + (uint64_t)(p - f) * m.at(row, j)) % p);
        }
        pivots.emplace_back(row, col);
        ++row;
    }
    return pivots;
}

}  // namespace

int rank(Mat m) {
    return (int)eliminate(m).size();
}

Rref rref(Mat m) {
    auto pivots = eliminate(m);
    const uint32_t p = m.mod;
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        auto [r, c] = *it;
        for (int i = 0; i < r; ++i) {
            uint32_t f = m.at(i, c);
            if (!f) continue;
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) = (uint32_t)((m.at(i, j) + (uint64_t)(p - f) * m.at(r, j)) % p);
        }
    }
    Rref out;
    out.pivot_cols.reserve(pivots.size());
    for (auto& [r, c] : pivots) out.pivot_cols.push_back(c);
    out.r = std::move(m);
    return out;
}

Mat nullspace(const Mat& m) {
    Rref e = rref(m);
    const uint32_t p = m.mod;
    std::vector<int> pivot_of_col(m.cols, -1);
    for (int k = 0; k < (int)e.pivot_cols.size(); ++k) pivot_of_col[e.pivot_cols[k]] = k;
    std::vector<int> free_cols;
    for (int j = 0; j < m.cols; ++j)
        if (pivot_of_col[j] < 0) free_cols.push_back(j);
    Mat basis(m.cols, (int)free_cols.size(), p);
    for (int k = 0; k < (int)free_cols.size(); ++k) {
        int fc = free_cols[k];
        basis.at(fc, k) = 1 % p;
        for (int t = 0; t < (int)e.pivot_cols.size(); ++t) {
            uint32_t v = e.r.at(t, fc);
            if (v) basis.at(e.pivot_cols[t], k) = p - v;
        }
    }
    return basis;
}

Mat column_basis(const Mat& m) {
    Rref e = rref(m);
    Mat out(m.rows, (int)e.pivot_cols.size(), m.mod);
    for (int k = 0; k < (int)e.pivot_cols.size(); ++k)
        for (int i = 0; i < m.rows; ++i) out.at(i, k) = m.at(i, e.pivot_cols[k]);
    return out;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
    assert(a.rows == b.rows && a.mod == b.mod);
    Mat aug = hstack(a, b);
    Rref e = rref(std::move(aug));
    // any pivot in the b-part means inconsistency
    for (int c : e.pivot_cols)
        if (c >= a.cols) return std::nullopt;
    Mat x(a.cols, b.cols, a.mod);
    for (int k = 0; k < (int)e.pivot_cols.size(); ++k)
        for (int j = 0; j < b.cols; ++j) x.at(e.pivot_cols[k], j) = e.r.at(k, a.cols + j);
    return x;
}

QuotientMap quotient_map(const Mat& span_cols) {
    const uint32_t p = span_cols.mod;
    const int n = span_cols.rows;
    // echelonize the subspace as rows; pivot coordinates get eliminated,
    // the rest index the quotient
    Rref e = rref(span_cols.transposed());
    std::vector<bool> is_pivot(n, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;
    QuotientMap q;
    for (int j = 0; j < n; ++j)
        if (!is_pivot[j]) q.kept.push_back(j);
    q.projection = Mat((int)q.kept.size(), n, p);
    for (int k = 0; k < (int)q.kept.size(); ++k) q.projection.at(k, q.kept[k]) = 1 % p;
    // subtracting the echelon rows clears pivot coordinates:
    // e_pivot(t) maps to -(row t restricted to kept coordinates)
    for (int t = 0; t < (int)e.pivot_cols.size(); ++t) {
        int pc = e.pivot_cols[t];
        for (int k = 0; k < (int)q.kept.size(); ++k) {
            uint32_t v = e.r.at(t, q.kept[k]);
            if (v) q.projection.at(k, pc) = p - v;
        }
    }
    return q;
}

}  // namespace gorhom
