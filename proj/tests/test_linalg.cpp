#include "doctest.h"

#include <random>
#include <set>

#include "frcodes/linalg.hpp"

using namespace frcodes;

namespace {

Mat random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    std::uniform_int_distribution<Elem> el(0, f.q() - 1);
    Mat m(rows, Vec(cols));
    for (auto& r : m)
        for (auto& x : r) x = el(rng);
    return m;
}

Mat random_full_rank(const Field& f, std::size_t n, std::mt19937_64& rng) {
    while (true) {
        Mat m = random_matrix(f, n, n, rng);
        if (rank_of(f, m) == n) return m;
    }
}

// Enumerates the full row space; usable only for tiny matrices.
std::vector<Vec> enumerate_row_space(const Field& f, const Mat& m) {
    std::vector<Vec> out;
    const std::size_t rows = m.size(), cols = m.front().size();
    std::vector<Elem> coef(rows, 0);
    while (true) {
        Vec v(cols, 0);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                v[c] = f.add(v[c], f.mul(coef[r], m[r][c]));
        out.push_back(std::move(v));
        std::size_t k = 0;
        while (k < rows && ++coef[k] == f.q()) coef[k++] = 0;
        if (k == rows) break;
    }
    return out;
}

}  // namespace

TEST_CASE("rref ranks") {
    auto f5 = Field::create(5, 1);
    // det = 4*4 - 2*3 = 10 = 0 mod 5, so rank drops to 1
    const Mat m = {{4, 2}, {3, 4}};
    CHECK(f5->sub(f5->mul(4, 4), f5->mul(2, 3)) == 0);
    auto r = rref(*f5, m);
    CHECK(r.rank == 1);
    CHECK(rref(*f5, identity_matrix(3)).rank == 3);
    CHECK(rref(*f5, Mat(3, Vec(3, 0))).rank == 0);
}

TEST_CASE("rref is idempotent") {
    std::mt19937_64 rng(1);
    auto f3 = Field::create(3, 1);
    for (int k = 0; k < 50; ++k) {
        Mat m = random_matrix(*f3, 4, 6, rng);
        auto r1 = rref(*f3, m);
        auto r2 = rref(*f3, r1.mat);
        CHECK(r1.mat == r2.mat);
        CHECK(r1.rank == r2.rank);
    }
}

TEST_CASE("invert") {
    auto f5 = Field::create(5, 1);
    CHECK(invert(*f5, identity_matrix(4)) == identity_matrix(4));
    CHECK(invert(*f5, Mat{{2}}) == Mat{{3}});
    CHECK_THROWS_AS(static_cast<void>(invert(*f5, Mat{{1, 2}, {2, 4}})), Error);

    std::mt19937_64 rng(2);
    for (std::uint32_t q : {2u, 3u, 5u}) {
        auto f = Field::create(q, 1);
        for (std::size_t n : {1u, 4u, 9u, 12u}) {
            Mat m = random_full_rank(*f, n, rng);
            CHECK(mat_mul(*f, invert(*f, m), m) == identity_matrix(n));
        }
    }
}

TEST_CASE("solve") {
    auto f5 = Field::create(5, 1);
    const Vec b = {1, 4, 2};
    CHECK(solve(*f5, identity_matrix(3), b) == b);

    std::mt19937_64 rng(3);
    for (int k = 0; k < 30; ++k) {
        Mat m = random_full_rank(*f5, 6, rng);
        Mat xcol = random_matrix(*f5, 6, 1, rng);
        Vec x(6);
        for (std::size_t i = 0; i < 6; ++i) x[i] = xcol[i][0];
        Vec rhs(6, 0);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j) rhs[i] = f5->add(rhs[i], f5->mul(m[i][j], x[j]));
        CHECK(solve(*f5, m, rhs) == x);
    }

    CHECK_THROWS_AS(static_cast<void>(solve(*f5, Mat{{1, 1}, {2, 2}}, Vec{1, 2})), Error);
    try {
        static_cast<void>(solve(*f5, Mat{{1, 1}, {2, 2}}, Vec{1, 3}));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Err::Inconsistent);
    }
    try {
        static_cast<void>(solve(*f5, Mat{{1, 1}, {2, 2}}, Vec{1, 2}));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Err::Singular);
    }
}

TEST_CASE("row space extension on the worked example") {
    auto f5 = Field::create(5, 1);
    // row space of {(4,2)}; prefix 3 = 2*4, so the extension is 2*2 = 4
    CHECK(row_space_extension(*f5, Mat{{4, 2}, {3, 4}}, Vec{3}) == 4);
    // both columns pivot: extension unconstrained
    try {
        static_cast<void>(row_space_extension(*f5, Mat{{1, 0}, {0, 1}}, Vec{1}));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Err::NotUnique);
    }
    // first two columns of a 2x3 identity-like system force the value
    CHECK(row_space_extension(*f5, Mat{{1, 0, 2}, {0, 1, 3}}, Vec{2, 1}) == f5->add(4, 3));
    try {
        static_cast<void>(row_space_extension(*f5, Mat{{1, 0, 2}}, Vec{0, 1}));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Err::NotInRowSpace);
    }
    // empty matrix: only the zero prefix extends, by zero
    CHECK(row_space_extension(*f5, Mat{}, Vec{}) == 0);
}

TEST_CASE("row space extension agrees with enumeration") {
    std::mt19937_64 rng(4);
    auto f3 = Field::create(3, 1);
    int checked = 0;
    for (int k = 0; k < 200; ++k) {
        Mat m = random_matrix(*f3, 3, 3, rng);
        const auto space = enumerate_row_space(*f3, m);
        // pick a row-space member as the target, drop its last entry
        const Vec& target = space[k % space.size()];
        Vec prefix(target.begin(), target.end() - 1);
        std::set<Elem> extensions;
        for (const Vec& v : space)
            if (Vec(v.begin(), v.end() - 1) == prefix) extensions.insert(v.back());
        if (extensions.size() == 1) {
            CHECK(row_space_extension(*f3, m, prefix) == target.back());
            ++checked;
        } else {
            CHECK_THROWS_AS(static_cast<void>(row_space_extension(*f3, m, prefix)), Error);
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("star product") {
    auto f5 = Field::create(5, 1);
    const Vec v = {1, 2, 3, 4};
    CHECK(star(*f5, Vec{1, 1, 1, 1}, v) == v);
    CHECK(star(*f5, v, Vec{0, 0, 0, 0}) == Vec{0, 0, 0, 0});
    CHECK(star(*f5, Vec{2, 3}, Vec{3, 4}) == Vec{1, 2});
    CHECK_THROWS_AS(static_cast<void>(star(*f5, Vec{1}, Vec{1, 2})), Error);
}
