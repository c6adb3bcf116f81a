#ifndef FRCODES_LINALG_HPP
#define FRCODES_LINALG_HPP

#include <cstddef>
#include <vector>

#include "frcodes/gf.hpp"

namespace frcodes {

using Vec = std::vector<Elem>;
using Mat = std::vector<Vec>;

// Dense exact linear algebra over GF(q).  Pivoting is always on the first
// nonzero entry in column order, so every result is deterministic.

struct RrefResult {
    Mat mat;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

// Unique reduced row-echelon form.
RrefResult rref(const Field& f, Mat m);

std::size_t rank_of(const Field& f, Mat m);

Mat identity_matrix(std::size_t n);

// Inverse of a square matrix; Singular if rank deficient.
Mat invert(const Field& f, const Mat& m);

// Solve M x = b for square full-rank M (Singular / Inconsistent otherwise).
Vec solve(const Field& f, const Mat& m, const Vec& b);

// Given M with j columns and a prefix of j-1 values, return the unique s'
// such that (prefix, s') lies in the row space of M.  NotUnique when the
// last column is free, NotInRowSpace when the prefix is not reachable.
Elem row_space_extension(const Field& f, const Mat& m, const Vec& prefix);

Elem dot(const Field& f, const Vec& a, const Vec& b);

// Componentwise (star) product.
Vec star(const Field& f, const Vec& a, const Vec& b);

Vec vec_add(const Field& f, const Vec& a, const Vec& b);
Vec vec_sub(const Field& f, const Vec& a, const Vec& b);
Vec vec_scale(const Field& f, Elem c, const Vec& a);
bool is_zero_vec(const Vec& a);
std::size_t hamming_weight(const Vec& a);

Mat mat_mul(const Field& f, const Mat& a, const Mat& b);

}  // namespace frcodes

#endif
