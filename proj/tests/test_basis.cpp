#include "doctest.h"

#include "fixtures.hpp"

using namespace frcodes;

TEST_CASE("rho walks the filtration") {
    auto alg = fixtures::f5_grid();
    const auto& b = *alg->eval_basis();
    for (std::size_t i = 1; i <= b.n(); ++i) CHECK(b.rho(b.row(i)) == i);
    CHECK(b.rho(Vec(9, 0)) == 0);
    // X^3 = X^2 + 4X + 1 on the point set {1,2,3}, so rho lands on index 4
    Vec x3 = alg->eval_monomial({3, 0});
    CHECK(b.rho(x3) == 4);
    CHECK(b.coordinates(x3) == Vec{1, 4, 0, 1, 0, 0, 0, 0, 0});
}

TEST_CASE("coordinates recombine to the input") {
    auto alg = fixtures::f5_grid();
    const auto& b = *alg->eval_basis();
    const Field& f = b.field();
    CHECK(b.coordinates(b.row(3)) == Vec{0, 0, 1, 0, 0, 0, 0, 0, 0});
    CHECK(b.coordinates(Vec(9, 0)) == Vec(9, 0));

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<Elem> el(0, f.q() - 1);
    for (int k = 0; k < 1000; ++k) {
        Vec v(9);
        for (auto& x : v) x = el(rng);
        const Vec c = b.coordinates(v);
        Vec back(9, 0);
        for (std::size_t i = 1; i <= 9; ++i)
            for (std::size_t w = 0; w < 9; ++w)
                back[w] = f.add(back[w], f.mul(c[i - 1], b.row(i)[w]));
        CHECK(back == v);
        // rho equals the largest index carrying a coefficient
        std::size_t maxi = 0;
        for (std::size_t i = 0; i < 9; ++i)
            if (c[i] != 0) maxi = i + 1;
        CHECK(b.rho(v) == maxi);
    }
}

TEST_CASE("dependent rows are rejected") {
    auto f5 = Field::create(5, 1);
    CHECK_THROWS_AS(
        static_cast<void>(IndexedBasis::create(f5, Mat{{1, 2}, {2, 4}})), Error);
    CHECK_THROWS_AS(
        static_cast<void>(IndexedBasis::create(f5, Mat{{1, 2, 3}, {0, 1, 1}})), Error);
}

TEST_CASE("index set complement") {
    CHECK(IndexSet::of(4, {3, 4}).complement().members() == std::vector<std::size_t>{3, 4});
    CHECK(IndexSet::of(9, {1, 2, 3, 5}).complement().members() ==
          std::vector<std::size_t>{1, 2, 3, 4, 6});
    CHECK(IndexSet::full(5).complement().empty());

    std::mt19937_64 rng(6);
    for (int k = 0; k < 100; ++k) {
        const std::size_t n = 1 + rng() % 12;
        std::vector<std::size_t> members;
        for (std::size_t i = 1; i <= n; ++i)
            if (rng() & 1) members.push_back(i);
        auto s = IndexSet::of(n, members);
        CHECK(s.complement().complement() == s);
        CHECK(s.size() + s.complement().complement().absent().size() == n);
    }
}

TEST_CASE("codes reject empty index sets") {
    auto alg = fixtures::f5_grid();
    auto empty = IndexSet::full(9).complement();
    REQUIRE(empty.empty());
    CHECK_THROWS_AS(static_cast<void>(make_code(alg->eval_basis(), empty, Side::Primary)), Error);
    try {
        static_cast<void>(make_code(alg->eval_basis(), empty, Side::Primary));
    } catch (const Error& e) {
        CHECK(e.code() == Err::EmptyIndexSet);
    }
}
