#include "frcodes/gf.hpp"

#include <algorithm>

namespace frcodes {
namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Dense little-endian coefficient vectors over GF(p).
using Poly = std::vector<std::uint32_t>;

std::size_t degree(const Poly& f) {
    std::size_t d = f.size();
    while (d > 0 && f[d - 1] == 0) --d;
    return d == 0 ? 0 : d - 1;  // deg(0) treated as 0 by callers that care
}

bool is_zero(const Poly& f) {
    return std::all_of(f.begin(), f.end(), [](std::uint32_t c) { return c == 0; });
}

// Remainder of f modulo monic g.
Poly poly_rem(Poly f, const Poly& g, std::uint32_t p) {
    const std::size_t dg = degree(g);
    while (!is_zero(f) && degree(f) >= dg) {
        const std::size_t df = degree(f);
        const std::uint32_t lead = f[df];
        for (std::size_t k = 0; k <= dg; ++k) {
            const std::size_t pos = df - dg + k;
            f[pos] = (f[pos] + p - (lead * g[k]) % p) % p;
        }
    }
    return f;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t df = degree(f);
    for (std::size_t d = 1; 2 * d <= df; ++d) {
        std::uint64_t count = 1;
        for (std::size_t k = 0; k < d; ++k) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            g[d] = 1;
            std::uint64_t c = code;
            for (std::size_t k = 0; k < d; ++k) {
                g[k] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            if (is_zero(poly_rem(f, g, p))) return false;
        }
    }
    return true;
}

Poly to_digits(Elem x, std::uint32_t p, std::uint32_t m) {
    Poly d(m, 0);
    for (std::uint32_t k = 0; k < m; ++k) {
        d[k] = x % p;
        x /= p;
    }
    return d;
}

Elem from_digits(const Poly& d, std::uint32_t p) {
    Elem x = 0;
    for (std::size_t k = d.size(); k-- > 0;) x = x * p + d[k];
    return x;
}

// Product of two residues modulo the defining polynomial.
Elem residue_mul(Elem a, Elem b, const Poly& mod, std::uint32_t p, std::uint32_t m) {
    Poly da = to_digits(a, p, m), db = to_digits(b, p, m);
    Poly prod(2 * m, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < m; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
    prod = poly_rem(std::move(prod), mod, p);
    prod.resize(m, 0);
    return from_digits(prod, p);
}

}  // namespace

std::shared_ptr<const Field> Field::create(std::uint32_t p, std::uint32_t m,
                                           const std::vector<std::uint32_t>& poly) {
    if (!is_prime(p)) fail(Err::NonPrime, "p = " + std::to_string(p));
    if (m < 1) fail(Err::Invalid, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t k = 0; k < m; ++k) {
        q *= p;
        if (q > (1u << 16)) fail(Err::SizeExceeded, "p^m exceeds 2^16");
    }
    if (q < 2) fail(Err::SizeExceeded, "p^m must be at least 2");

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->m_ = m;
    f->q_ = static_cast<std::uint32_t>(q);

    if (m == 1) return f;

    if (poly.size() != m + 1)
        fail(Err::Invalid, "defining polynomial must have m+1 coefficients");
    for (std::uint32_t c : poly)
        if (c >= p) fail(Err::OutOfRange, "polynomial coefficient not reduced mod p");
    if (poly[m] != 1) fail(Err::Invalid, "defining polynomial must be monic");
    if (!is_irreducible(poly, p)) fail(Err::Reducible, "defining polynomial factors over GF(p)");
    f->poly_ = poly;

    // Find a generator of the multiplicative group, then tabulate its powers.
    const std::uint32_t order = f->q_ - 1;
    std::vector<std::uint32_t> prime_factors;
    {
        std::uint32_t n = order;
        for (std::uint32_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) {
                prime_factors.push_back(d);
                while (n % d == 0) n /= d;
            }
        }
        if (n > 1) prime_factors.push_back(n);
    }
    auto residue_pow = [&](Elem a, std::uint32_t e) {
        Elem r = 1;
        while (e) {
            if (e & 1) r = residue_mul(r, a, poly, p, m);
            a = residue_mul(a, a, poly, p, m);
            e >>= 1;
        }
        return r;
    };
    Elem gen = 0;
    for (Elem g = 2; g < f->q_; ++g) {
        bool ok = true;
        for (std::uint32_t pf : prime_factors) {
            if (residue_pow(g, order / pf) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            gen = g;
            break;
        }
    }
    if (gen == 0) fail(Err::Invalid, "no multiplicative generator found");

    f->alog_.assign(order, 0);
    f->log_.assign(f->q_, 0);
    Elem x = 1;
    for (std::uint32_t k = 0; k < order; ++k) {
        f->alog_[k] = x;
        f->log_[x] = k;
        x = residue_mul(x, gen, poly, p, m);
    }
    if (x != 1) fail(Err::Invalid, "generator order mismatch");
    return f;
}

Elem Field::add(Elem a, Elem b) const {
    if (m_ == 1) return (a + b) % p_;
    if (p_ == 2) return a ^ b;
    Elem r = 0, pw = 1;
    while (a || b) {
        r += ((a % p_ + b % p_) % p_) * pw;
        a /= p_;
        b /= p_;
        pw *= p_;
    }
    return r;
}

Elem Field::neg(Elem a) const {
    if (m_ == 1) return a == 0 ? 0 : p_ - a;
    if (p_ == 2) return a;
    Elem r = 0, pw = 1;
    while (a) {
        const Elem d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * pw;
        a /= p_;
        pw *= p_;
    }
    return r;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (m_ == 1) return (static_cast<std::uint64_t>(a) * b) % p_;
    const std::uint32_t order = q_ - 1;
    return alog_[(log_[a] + log_[b]) % order];
}

Elem Field::inv(Elem a) const {
    if (a == 0) fail(Err::DivisionByZero, "inverse of zero");
    if (m_ == 1) return pow(a, p_ - 2);
    const std::uint32_t order = q_ - 1;
    return alog_[(order - log_[a]) % order];
}

Elem Field::div(Elem a, Elem b) const {
    if (b == 0) fail(Err::DivisionByZero, "division by zero");
    return mul(a, inv(b));
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elem Field::decode(std::uint64_t raw) const {
    if (raw >= q_) fail(Err::OutOfRange, "element code " + std::to_string(raw));
    return static_cast<Elem>(raw);
}

}  // namespace frcodes
