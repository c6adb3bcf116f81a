#ifndef FRCODES_SEMIGROUP_HPP
#define FRCODES_SEMIGROUP_HPP

#include <vector>

#include "frcodes/algebra.hpp"

namespace frcodes {

// Semigroup Gamma in N_0^r together with a finite footprint delta, enough to
// evaluate the order bounds without any supporting basis.  r = 1 with a
// generated numerical semigroup covers one-point algebraic-geometry data
// supplied numerically.
class SemigroupData {
  public:
    // Gamma = N_0^r, delta = the full box {0..dims[k]-1}^r.
    static SemigroupData box(std::vector<std::uint32_t> dims);

    // Gamma = N_0^m, delta = the algebra footprint.
    static SemigroupData from_algebra(const MonomialAlgebra& a);

    // Gamma generated by the given positive integers; delta values must lie
    // in Gamma and are kept in increasing order.
    static SemigroupData numerical(std::vector<std::uint32_t> generators,
                                   std::vector<std::uint32_t> delta);

    std::size_t r() const { return r_; }
    std::size_t size() const { return delta_.size(); }
    const std::vector<Expo>& delta() const { return delta_; }
    const Expo& alpha(std::size_t i) const;  // 1-based
    std::optional<std::size_t> index_of(const Expo& e) const;
    bool in_gamma(const Expo& e) const;

    // Number of eta in delta with eta = lambda + gamma for some gamma in
    // Gamma.  NotInDelta when lambda is outside delta.
    std::size_t sigma(const Expo& lambda) const;
    std::size_t sigma_at(std::size_t i) const { return sigma(alpha(i)); }

    // Number of lambda in Gamma with eta - lambda in Gamma.
    std::size_t mu(const Expo& eta) const;
    std::size_t mu_at(std::size_t l) const { return mu(alpha(l)); }

    // Order bound on the minimum distance: min sigma(alpha(i)) over i in I
    // for primary codes, min mu(alpha(l)) over l outside I for dual codes.
    std::size_t order_bound(const IndexSet& I, Side side) const;

  private:
    SemigroupData() = default;

    std::size_t r_ = 0;
    std::vector<Expo> delta_;
    std::map<Expo, std::size_t> delta_pos_;
    // r == 1 generated semigroup: membership table up to the largest query.
    bool generated_ = false;
    std::vector<bool> member_;
};

}  // namespace frcodes

#endif
