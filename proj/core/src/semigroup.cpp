#include "frcodes/semigroup.hpp"

#include <algorithm>

namespace frcodes {

SemigroupData SemigroupData::box(std::vector<std::uint32_t> dims) {
    if (dims.empty()) fail(Err::Invalid, "box needs at least one dimension");
    std::uint64_t n = 1;
    for (std::uint32_t d : dims) {
        if (d == 0) fail(Err::Invalid, "box dimensions must be positive");
        n *= d;
        if (n > 4096) fail(Err::SizeExceeded, "box exceeds 4096 elements");
    }
    SemigroupData s;
    s.r_ = dims.size();
    Expo e(dims.size(), 0);
    bool more = true;
    while (more) {
        s.delta_.push_back(e);
        more = false;
        for (std::size_t k = dims.size(); k-- > 0;) {
            if (++e[k] < dims[k]) {
                more = true;
                break;
            }
            e[k] = 0;
        }
    }
    // Keep the footprint sorted under graded-lex, the library default.
    const MonomialOrder ord = MonomialOrder::graded_lex(s.r_);
    std::sort(s.delta_.begin(), s.delta_.end(),
              [&](const Expo& a, const Expo& b) { return ord.less(a, b); });
    for (std::size_t i = 0; i < s.delta_.size(); ++i) s.delta_pos_[s.delta_[i]] = i + 1;
    return s;
}

SemigroupData SemigroupData::from_algebra(const MonomialAlgebra& a) {
    SemigroupData s;
    s.r_ = a.vars();
    s.delta_ = a.delta();
    for (std::size_t i = 0; i < s.delta_.size(); ++i) s.delta_pos_[s.delta_[i]] = i + 1;
    return s;
}

SemigroupData SemigroupData::numerical(std::vector<std::uint32_t> generators,
                                       std::vector<std::uint32_t> delta) {
    if (generators.empty()) fail(Err::Invalid, "numerical semigroup needs generators");
    for (std::uint32_t g : generators)
        if (g == 0) fail(Err::Invalid, "generators must be positive");
    if (delta.empty()) fail(Err::Invalid, "delta must be non-empty");
    std::sort(delta.begin(), delta.end());
    if (std::adjacent_find(delta.begin(), delta.end()) != delta.end())
        fail(Err::Invalid, "delta values must be distinct");

    SemigroupData s;
    s.r_ = 1;
    s.generated_ = true;
    const std::uint32_t top = delta.back();
    s.member_.assign(static_cast<std::size_t>(top) + 1, false);
    s.member_[0] = true;
    for (std::uint32_t v = 1; v <= top; ++v)
        for (std::uint32_t g : generators)
            if (g <= v && s.member_[v - g]) {
                s.member_[v] = true;
                break;
            }
    for (std::uint32_t v : delta) {
        if (!s.member_[v]) fail(Err::Invalid, "delta value outside the semigroup");
        s.delta_.push_back(Expo{v});
    }
    for (std::size_t i = 0; i < s.delta_.size(); ++i) s.delta_pos_[s.delta_[i]] = i + 1;
    return s;
}

const Expo& SemigroupData::alpha(std::size_t i) const {
    if (i < 1 || i > delta_.size()) fail(Err::IndexOutOfRange, "alpha(" + std::to_string(i) + ")");
    return delta_[i - 1];
}

std::optional<std::size_t> SemigroupData::index_of(const Expo& e) const {
    auto it = delta_pos_.find(e);
    if (it == delta_pos_.end()) return std::nullopt;
    return it->second;
}

bool SemigroupData::in_gamma(const Expo& e) const {
    if (e.size() != r_) fail(Err::DimensionMismatch, "exponent length");
    if (!generated_) return true;  // Gamma = N_0^r
    return e[0] < member_.size() && member_[e[0]];
}

std::size_t SemigroupData::sigma(const Expo& lambda) const {
    if (!index_of(lambda)) fail(Err::NotInDelta, "sigma argument outside delta");
    std::size_t cnt = 0;
    for (const Expo& eta : delta_) {
        const auto diff = expo_sub(eta, lambda);
        if (diff && in_gamma(*diff)) ++cnt;
    }
    return cnt;
}

std::size_t SemigroupData::mu(const Expo& eta) const {
    if (!index_of(eta)) fail(Err::NotInDelta, "mu argument outside delta");
    // Walk the box of componentwise-smaller lambda values.
    std::size_t cnt = 0;
    Expo lambda(r_, 0);
    bool more = true;
    while (more) {
        if (in_gamma(lambda)) {
            const auto diff = expo_sub(eta, lambda);
            if (diff && in_gamma(*diff)) ++cnt;
        }
        more = false;
        for (std::size_t k = r_; k-- > 0;) {
            if (++lambda[k] <= eta[k]) {
                more = true;
                break;
            }
            lambda[k] = 0;
        }
    }
    return cnt;
}

std::size_t SemigroupData::order_bound(const IndexSet& I, Side side) const {
    if (I.n() != delta_.size()) fail(Err::DimensionMismatch, "index range vs delta size");
    if (I.empty()) fail(Err::EmptyIndexSet, "order bound over empty index set");
    std::size_t best = 0;
    bool first = true;
    if (side == Side::Primary) {
        for (std::size_t i : I.members()) {
            const std::size_t s = sigma_at(i);
            if (first || s < best) best = s, first = false;
        }
    } else {
        const auto outside = I.absent();
        if (outside.empty()) fail(Err::FullIndexSet, "dual bound needs indices outside I");
        for (std::size_t l : outside) {
            const std::size_t m = mu_at(l);
            if (first || m < best) best = m, first = false;
        }
    }
    return best;
}

}  // namespace frcodes
