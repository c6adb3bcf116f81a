#include "frcodes/linalg.hpp"

#include <algorithm>

namespace frcodes {

namespace {

void check_rect(const Mat& m) {
    for (const Vec& row : m)
        if (row.size() != m.front().size())
            fail(Err::DimensionMismatch, "matrix is not rectangular");
}

}  // namespace

RrefResult rref(const Field& f, Mat m) {
    RrefResult out;
    if (m.empty()) return out;
    check_rect(m);
    const std::size_t rows = m.size(), cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (m[i][c] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        const Elem s = f.inv(m[r][c]);
        for (std::size_t k = c; k < cols; ++k) m[r][k] = f.mul(m[r][k], s);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Elem t = m[i][c];
            for (std::size_t k = c; k < cols; ++k)
                m[i][k] = f.sub(m[i][k], f.mul(t, m[r][k]));
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    out.mat = std::move(m);
    return out;
}

std::size_t rank_of(const Field& f, Mat m) { return rref(f, std::move(m)).rank; }

Mat identity_matrix(std::size_t n) {
    Mat id(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
}

Mat invert(const Field& f, const Mat& m) {
    const std::size_t n = m.size();
    if (n == 0) return {};
    check_rect(m);
    if (m.front().size() != n) fail(Err::DimensionMismatch, "inverse of non-square matrix");
    Mat aug(n, Vec(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        std::copy(m[i].begin(), m[i].end(), aug[i].begin());
        aug[i][n + i] = 1;
    }
    RrefResult r = rref(f, std::move(aug));
    std::size_t left_rank = 0;
    for (std::size_t c : r.pivots)
        if (c < n) ++left_rank;
    if (left_rank < n) fail(Err::Singular, "matrix is singular");
    Mat out(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        std::copy(r.mat[i].begin() + n, r.mat[i].end(), out[i].begin());
    return out;
}

Vec solve(const Field& f, const Mat& m, const Vec& b) {
    const std::size_t n = m.size();
    if (n == 0 || b.size() != n) fail(Err::DimensionMismatch, "solve dimensions");
    check_rect(m);
    if (m.front().size() != n) fail(Err::DimensionMismatch, "solve expects a square system");
    Mat aug(n, Vec(n + 1, 0));
    for (std::size_t i = 0; i < n; ++i) {
        std::copy(m[i].begin(), m[i].end(), aug[i].begin());
        aug[i][n] = b[i];
    }
    RrefResult r = rref(f, std::move(aug));
    bool rhs_pivot = !r.pivots.empty() && r.pivots.back() == n;
    const std::size_t rank_m = r.rank - (rhs_pivot ? 1 : 0);
    if (rhs_pivot) fail(Err::Inconsistent, "system has no solution");
    if (rank_m < n) fail(Err::Singular, "system is rank deficient");
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = r.mat[i][n];
    return x;
}

Elem row_space_extension(const Field& f, const Mat& m, const Vec& prefix) {
    if (m.empty()) {
        // Row space of an empty matrix is {0}; the zero prefix extends by 0.
        if (!is_zero_vec(prefix)) fail(Err::NotInRowSpace, "prefix outside trivial row space");
        return 0;
    }
    check_rect(m);
    const std::size_t cols = m.front().size();
    if (cols == 0 || prefix.size() + 1 != cols)
        fail(Err::DimensionMismatch, "prefix must have one entry fewer than columns");
    RrefResult r = rref(f, m);
    // A pivot in the last column means the extension is a free choice.
    if (!r.pivots.empty() && r.pivots.back() == cols - 1)
        fail(Err::NotUnique, "extension is not determined by the prefix");
    // Pivots all lie in the first cols-1 columns, so coefficients can be read
    // off the prefix directly and verified.
    Vec rem = prefix;
    Elem ext = 0;
    for (std::size_t k = 0; k < r.rank; ++k) {
        const Elem c = rem[r.pivots[k]];
        if (c == 0) continue;
        for (std::size_t w = 0; w + 1 < cols; ++w)
            rem[w] = f.sub(rem[w], f.mul(c, r.mat[k][w]));
        ext = f.add(ext, f.mul(c, r.mat[k][cols - 1]));
    }
    if (!is_zero_vec(rem)) fail(Err::NotInRowSpace, "prefix not in row space");
    return ext;
}

Elem dot(const Field& f, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) fail(Err::DimensionMismatch, "dot product lengths");
    Elem s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s = f.add(s, f.mul(a[k], b[k]));
    return s;
}

Vec star(const Field& f, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) fail(Err::DimensionMismatch, "star product lengths");
    Vec out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = f.mul(a[k], b[k]);
    return out;
}

Vec vec_add(const Field& f, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) fail(Err::DimensionMismatch, "vector lengths");
    Vec out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = f.add(a[k], b[k]);
    return out;
}

Vec vec_sub(const Field& f, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) fail(Err::DimensionMismatch, "vector lengths");
    Vec out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = f.sub(a[k], b[k]);
    return out;
}

Vec vec_scale(const Field& f, Elem c, const Vec& a) {
    Vec out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = f.mul(c, a[k]);
    return out;
}

bool is_zero_vec(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](Elem x) { return x == 0; });
}

std::size_t hamming_weight(const Vec& a) {
    std::size_t w = 0;
    for (Elem x : a) w += (x != 0);
    return w;
}

Mat mat_mul(const Field& f, const Mat& a, const Mat& b) {
    if (a.empty() || b.empty()) return {};
    check_rect(a);
    check_rect(b);
    const std::size_t n = a.size(), k = a.front().size(), m = b.front().size();
    if (b.size() != k) fail(Err::DimensionMismatch, "matrix product shapes");
    Mat out(n, Vec(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j)
                out[i][j] = f.add(out[i][j], f.mul(a[i][t], b[t][j]));
        }
    return out;
}

}  // namespace frcodes
