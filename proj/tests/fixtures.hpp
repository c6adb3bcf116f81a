// Shared test fixtures: the two small grid codes used throughout the suite
// and their independently known data (certified pair tables, dual basis
// polynomials).  The dual polynomials are cross-checked in the tests against
// the Kronecker-delta relation, so they certify themselves.
#ifndef FRCODES_TESTS_FIXTURES_HPP
#define FRCODES_TESTS_FIXTURES_HPP

#include <array>
#include <random>

#include "frcodes/algebra.hpp"
#include "frcodes/semigroup.hpp"

namespace fixtures {

using namespace frcodes;

// [9,*] codes: F_5, points {1,2,3} x {1,2,3}, graded-lex with X < Y.
inline AlgebraPtr f5_grid() {
    static AlgebraPtr a = MonomialAlgebra::build(Field::create(5, 1), 2,
                                                 MonomialOrder::graded_lex(2),
                                                 {{1, 2, 3}, {1, 2, 3}});
    return a;
}

// [6,*] codes: F_4 = F_2[T]/(T^2+T+1) with alpha = T (code 2), points
// {0,1,alpha} x {1,alpha}.
inline AlgebraPtr f4_grid() {
    static AlgebraPtr a = MonomialAlgebra::build(Field::create(2, 2, {1, 1, 1}), 2,
                                                 MonomialOrder::graded_lex(2),
                                                 {{0, 1, 2}, {1, 2}});
    return a;
}

// All 36 certified WB pairs of the 9-point code: {i, j, rho}.
inline const std::vector<std::array<std::size_t, 3>>& f5_grid_pairs() {
    static const std::vector<std::array<std::size_t, 3>> t = {
        {1, 1, 1}, {1, 2, 2}, {1, 3, 3}, {1, 4, 4}, {1, 5, 5}, {1, 6, 6}, {1, 7, 7}, {1, 8, 8},
        {1, 9, 9}, {2, 1, 2}, {2, 2, 4}, {2, 3, 5}, {2, 5, 7}, {2, 6, 8}, {2, 8, 9}, {3, 1, 3},
        {3, 2, 5}, {3, 3, 6}, {3, 4, 7}, {3, 5, 8}, {3, 7, 9}, {4, 1, 4}, {4, 3, 7}, {4, 6, 9},
        {5, 1, 5}, {5, 2, 7}, {5, 3, 8}, {5, 5, 9}, {6, 1, 6}, {6, 2, 8}, {6, 4, 9}, {7, 1, 7},
        {7, 3, 9}, {8, 1, 8}, {8, 2, 9}, {9, 1, 9},
    };
    return t;
}

using Terms = std::vector<std::pair<Expo, Elem>>;

// Dual basis polynomials of the 9-point code, h_1..h_9.
inline const std::vector<Terms>& f5_grid_dual_polys() {
    static const std::vector<Terms> h = {
        {{{2, 2}, 1}, {{1, 2}, 1}, {{2, 1}, 1}, {{1, 1}, 1}},
        {{{2, 2}, 1}, {{1, 2}, 3}, {{2, 1}, 1}, {{0, 2}, 1}, {{1, 1}, 3}, {{0, 1}, 1}},
        {{{2, 2}, 1}, {{1, 2}, 1}, {{2, 1}, 3}, {{1, 1}, 3}, {{2, 0}, 1}, {{1, 0}, 1}},
        {{{1, 2}, 1}, {{0, 2}, 1}, {{1, 1}, 1}, {{0, 1}, 1}},
        {{{2, 2}, 1},
         {{1, 2}, 3},
         {{2, 1}, 3},
         {{0, 2}, 1},
         {{1, 1}, 4},
         {{2, 0}, 1},
         {{0, 1}, 3},
         {{1, 0}, 3},
         {{0, 0}, 1}},
        {{{2, 1}, 1}, {{1, 1}, 1}, {{2, 0}, 1}, {{1, 0}, 1}},
        {{{1, 2}, 1}, {{0, 2}, 1}, {{1, 1}, 3}, {{0, 1}, 3}, {{1, 0}, 1}, {{0, 0}, 1}},
        {{{2, 1}, 1}, {{1, 1}, 3}, {{2, 0}, 1}, {{0, 1}, 1}, {{1, 0}, 3}, {{0, 0}, 1}},
        {{{1, 1}, 1}, {{0, 1}, 1}, {{1, 0}, 1}, {{0, 0}, 1}},
    };
    return h;
}

// Dual basis polynomials of the 6-point code, h_1..h_6 (alpha = 2).
inline const std::vector<Terms>& f4_grid_dual_polys() {
    static const std::vector<Terms> h = {
        {{{1, 0}, 2}, {{0, 0}, 1}},
        {{{2, 0}, 2}, {{0, 0}, 3}},
        {{{1, 1}, 2}, {{0, 1}, 1}, {{1, 0}, 1}, {{0, 0}, 3}},
        {{{2, 0}, 1}, {{1, 0}, 3}, {{0, 0}, 2}},
        {{{2, 1}, 2}, {{2, 0}, 1}, {{0, 1}, 3}, {{0, 0}, 2}},
        {{{2, 1}, 1}, {{1, 1}, 3}, {{2, 0}, 3}, {{0, 1}, 2}, {{1, 0}, 2}, {{0, 0}, 1}},
    };
    return h;
}

// Random full-rank basis over the given field.
inline BasisPtr random_basis(FieldPtr f, std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> elem(0, f->q() - 1);
    while (true) {
        Mat rows(n, Vec(n));
        for (auto& r : rows)
            for (auto& x : r) x = elem(rng);
        if (rank_of(*f, rows) == n) return IndexedBasis::create(f, std::move(rows));
    }
}

}  // namespace fixtures

#endif
