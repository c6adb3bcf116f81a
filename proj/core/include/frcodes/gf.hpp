#ifndef FRCODES_GF_HPP
#define FRCODES_GF_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "frcodes/errors.hpp"

namespace frcodes {

// Element of GF(p^m) in the canonical integer encoding: the residue
// sum c_k * alpha^k is stored as sum c_k * p^k (little-endian base-p digits).
using Elem = std::uint32_t;

// GF(p^m) for 2 <= p^m <= 2^16, exact arithmetic throughout.
//
// Prime fields compute modularly; extension fields use log/antilog tables
// over a primitive element, built once at creation.  Immutable after
// creation, safe to share between threads.
class Field {
  public:
    // poly: m+1 coefficients of a monic irreducible degree-m polynomial over
    // GF(p), little-endian (poly[k] multiplies T^k).  Ignored when m == 1.
    static std::shared_ptr<const Field> create(std::uint32_t p, std::uint32_t m,
                                               const std::vector<std::uint32_t>& poly = {});

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return poly_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;   // DivisionByZero on 0
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem a, std::uint64_t e) const;  // a^0 == 1, also for a == 0

    // Canonical integer codec.  encode is the identity on valid elements;
    // decode validates the range.
    Elem decode(std::uint64_t raw) const;
    std::uint64_t encode(Elem x) const { return x; }

    bool same_as(const Field& other) const {
        return p_ == other.p_ && m_ == other.m_ && poly_ == other.poly_;
    }

  private:
    Field() = default;

    std::uint32_t p_ = 0, m_ = 0, q_ = 0;
    std::vector<std::uint32_t> poly_;
    // m > 1: log_[x] for x in [1,q), alog_[k] for k in [0, q-1).
    std::vector<std::uint32_t> log_, alog_;
};

using FieldPtr = std::shared_ptr<const Field>;

}  // namespace frcodes

#endif
