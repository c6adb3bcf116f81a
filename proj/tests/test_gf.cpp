#include "doctest.h"

#include <random>

#include "frcodes/gf.hpp"

using namespace frcodes;

namespace {

// Test-local polynomial arithmetic over GF(p), independent of the library's
// irreducibility machinery.
using Poly = std::vector<std::uint32_t>;

std::size_t deg(const Poly& f) {
    std::size_t d = f.size();
    while (d > 0 && f[d - 1] == 0) --d;
    return d == 0 ? 0 : d - 1;
}

bool zero(const Poly& f) {
    for (auto c : f)
        if (c) return false;
    return true;
}

Poly rem(Poly f, const Poly& g, std::uint32_t p) {
    while (!zero(f) && deg(f) >= deg(g)) {
        const std::size_t shift = deg(f) - deg(g);
        const std::uint32_t lead = f[deg(f)];
        // g is monic in all uses below
        for (std::size_t k = 0; k <= deg(g); ++k)
            f[shift + k] = (f[shift + k] + p - (lead * g[k]) % p) % p;
    }
    return f;
}

bool brute_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t d = deg(f);
    for (std::size_t dd = 1; dd < d; ++dd) {
        std::uint64_t count = 1;
        for (std::size_t k = 0; k < dd; ++k) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly g(dd + 1, 0);
            g[dd] = 1;
            std::uint64_t c = code;
            for (std::size_t k = 0; k < dd; ++k) {
                g[k] = c % p;
                c /= p;
            }
            if (zero(rem(f, g, p))) return false;
        }
    }
    return true;
}

// Search for an irreducible polynomial; the validator itself is checked
// against brute_irreducible elsewhere in this file.
FieldPtr make_field(std::uint32_t p, std::uint32_t m) {
    if (m == 1) return Field::create(p, 1);
    std::vector<std::uint32_t> poly(m + 1, 0);
    poly[m] = 1;
    while (true) {
        try {
            return Field::create(p, m, poly);
        } catch (const Error& e) {
            if (e.code() != Err::Reducible) throw;
        }
        std::size_t k = 0;
        while (k < m && ++poly[k] == p) poly[k++] = 0;
        REQUIRE(k < m);
    }
}

}  // namespace

TEST_CASE("field creation accepts the reference fields") {
    auto f5 = Field::create(5, 1);
    CHECK(f5->q() == 5);
    auto f4 = Field::create(2, 2, {1, 1, 1});
    CHECK(f4->q() == 4);
    // alpha^2 = alpha + 1 forced by T^2+T+1
    CHECK(f4->mul(2, 2) == 3);
}

TEST_CASE("field creation rejects bad specs") {
    CHECK_THROWS_WITH_AS(static_cast<void>(Field::create(4, 1)), doctest::Contains("NonPrime"),
                         Error);
    // T^2+1 = (T+1)^2 over GF(2)
    CHECK_THROWS_AS(static_cast<void>(Field::create(2, 2, {1, 0, 1})), Error);
    try {
        static_cast<void>(Field::create(2, 2, {1, 0, 1}));
    } catch (const Error& e) {
        CHECK(e.code() == Err::Reducible);
    }
    CHECK_THROWS_AS(static_cast<void>(Field::create(2, 17, std::vector<std::uint32_t>(18, 1))),
                    Error);  // 2^17 > 2^16
}

TEST_CASE("arithmetic matches the worked examples") {
    auto f5 = Field::create(5, 1);
    CHECK(f5->mul(3, 4) == 2);  // 12 mod 5
    CHECK(f5->inv(2) == 3);
    auto f4 = Field::create(2, 2, {1, 1, 1});
    CHECK(f4->mul(2, 2) == 3);  // alpha * alpha = alpha + 1
    CHECK(f4->inv(2) == 3);     // alpha (alpha+1) = 1
    CHECK(f4->add(2, 3) == 1);
    CHECK_THROWS_AS(static_cast<void>(f4->inv(0)), Error);
    CHECK_THROWS_AS(static_cast<void>(f4->div(1, 0)), Error);
}

TEST_CASE("canonical codec") {
    auto f4 = Field::create(2, 2, {1, 1, 1});
    CHECK(f4->decode(3) == 3);  // digits (1,1) = 1 + alpha
    CHECK(f4->encode(2) == 2);  // alpha = digits (0,1)
    auto f5 = Field::create(5, 1);
    CHECK(f5->decode(4) == 4);
    CHECK_THROWS_AS(static_cast<void>(f5->decode(5)), Error);
    for (Elem x = 0; x < f4->q(); ++x) CHECK(f4->decode(f4->encode(x)) == x);
}

TEST_CASE("irreducibility test agrees with brute-force factoring") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (std::size_t d : {2u, 3u, 4u}) {
            if (p == 5 && d == 4) continue;  // keep the sweep quick
            std::uint64_t count = 1;
            for (std::size_t k = 0; k < d; ++k) count *= p;
            for (std::uint64_t code = 0; code < count; ++code) {
                Poly poly(d + 1, 0);
                poly[d] = 1;
                std::uint64_t c = code;
                for (std::size_t k = 0; k < d; ++k) {
                    poly[k] = static_cast<std::uint32_t>(c % p);
                    c /= p;
                }
                bool accepted = true;
                try {
                    static_cast<void>(Field::create(p, static_cast<std::uint32_t>(d), poly));
                } catch (const Error& e) {
                    REQUIRE(e.code() == Err::Reducible);
                    accepted = false;
                }
                CHECK(accepted == brute_irreducible(poly, p));
            }
        }
    }
}

TEST_CASE("field axioms hold exhaustively up to q = 64") {
    // every prime power between 2 and 64
    const std::vector<std::pair<std::uint32_t, std::uint32_t>> specs = {
        {2, 1},  {3, 1},  {2, 2},  {5, 1},  {7, 1},  {2, 3},  {3, 2},  {11, 1}, {13, 1},
        {2, 4},  {17, 1}, {19, 1}, {23, 1}, {5, 2},  {3, 3},  {29, 1}, {31, 1}, {2, 5},
        {37, 1}, {41, 1}, {43, 1}, {47, 1}, {7, 2},  {53, 1}, {59, 1}, {61, 1}, {2, 6},
    };
    for (auto [p, m] : specs) {
        auto f = make_field(p, m);
        const Elem q = f->q();
        REQUIRE(q <= 64);
        for (Elem a = 0; a < q; ++a) {
            CHECK(f->add(a, f->neg(a)) == 0);
            if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
            CHECK(f->mul(a, 1) == a);
            CHECK(f->add(a, 0) == a);
            for (Elem b = 0; b < q; ++b) {
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == f->mul(b, a));
                for (Elem c = 0; c < q; ++c) {
                    CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
                    CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
                    CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("multiplicative order divides q-1 up to q = 256") {
    const std::vector<std::pair<std::uint32_t, std::uint32_t>> specs = {
        {2, 7}, {2, 8}, {3, 4}, {3, 5}, {5, 3}, {7, 2}, {11, 2}, {13, 2}, {251, 1},
    };
    for (auto [p, m] : specs) {
        auto f = make_field(p, m);
        REQUIRE(f->q() <= 256);
        for (Elem x = 1; x < f->q(); ++x) CHECK(f->pow(x, f->q() - 1) == 1);
        for (Elem x = 0; x < f->q(); ++x) CHECK(f->decode(f->encode(x)) == x);
    }
}

TEST_CASE("subtraction and power behave across random samples") {
    std::mt19937_64 rng(11);
    auto f = make_field(3, 3);
    std::uniform_int_distribution<Elem> el(0, f->q() - 1);
    for (int k = 0; k < 500; ++k) {
        const Elem a = el(rng), b = el(rng);
        CHECK(f->add(f->sub(a, b), b) == a);
        CHECK(f->pow(a, 3) == f->mul(a, f->mul(a, a)));
    }
}
