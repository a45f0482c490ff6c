#pragma once

/* Dense exact linear algebra over a prime field F_p. Everything downstream
 * (Hom spaces, ranks of differentials, kernels, quotients) reduces to the
 * handful of eliminations in here, so this file is deliberately small and
 * boring. Zero-sized matrices (0 x n, n x 0) are valid everywhere. */

#include <cstdint>
#include <optional>
#include <vector>

namespace gorhom {

uint32_t fp_inv(uint32_t x, uint32_t p);
bool is_prime(uint32_t p);

struct Mat {
    int rows = 0, cols = 0;
    uint32_t mod = 2;
    std::vector<uint32_t> a;  // row-major, entries reduced mod `mod`

    Mat() = default;
    Mat(int r, int c, uint32_t p) : rows(r), cols(c), mod(p), a((size_t)r * c, 0) {}

    static Mat identity(int n, uint32_t p);
    static Mat from_rows(std::vector<std::vector<uint32_t>> rows_in, uint32_t p);

    uint32_t& at(int r, int c) { return a[(size_t)r * cols + c]; }
    uint32_t at(int r, int c) const { return a[(size_t)r * cols + c]; }

    Mat operator*(const Mat& rhs) const;
    Mat operator+(const Mat& rhs) const;
    Mat operator-(const Mat& rhs) const;
    Mat scaled(uint32_t c) const;
    Mat transposed() const;
    Mat col(int j) const;
    bool is_zero() const;
    bool operator==(const Mat& rhs) const = default;

    Mat& add_in_place(const Mat& rhs, uint32_t coeff);
};

/* Column-wise concatenation [A | B]; rows must match. */
Mat hstack(const Mat& lhs, const Mat& rhs);
/* Row-wise concatenation; cols must match. */
Mat vstack(const Mat& top, const Mat& bot);
/* Block diagonal. */
Mat block_diag(const Mat& lhs, const Mat& rhs);

int rank(Mat m);

struct Rref {
    Mat r;
    std::vector<int> pivot_cols;
};
Rref rref(Mat m);

/* Columns form a basis of the right nullspace {x : m x = 0}. */
Mat nullspace(const Mat& m);

/* Independent subset of the columns spanning the column space. */
Mat column_basis(const Mat& m);

/* Solve a X = b columnwise; nullopt if any column is inconsistent. */
std::optional<Mat> solve(const Mat& a, const Mat& b);

/* Quotient of F^n by the column space of `span_cols`: `projection` maps
 * ambient coordinates onto coordinates along the kept standard basis
 * vectors (the non-pivot positions of the subspace). */
struct QuotientMap {
    Mat projection;         // (n - dim span) x n
    std::vector<int> kept;  // ambient indices of the chosen complement
};
QuotientMap quotient_map(const Mat& span_cols);

}  // namespace gorhom
