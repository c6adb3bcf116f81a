#ifndef FRCODES_WB_HPP
#define FRCODES_WB_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "frcodes/basis.hpp"

namespace frcodes {

// Ordered so that a stronger property compares greater; WB implies WWB
// implies OWB.
enum class WBStatus : std::uint8_t { NotOWB = 0, OWB = 1, WWB = 2, WB = 3 };

enum class WBVariant { WB, OWB };

const char* to_string(WBStatus s);
std::optional<WBStatus> wb_status_from_string(const std::string& s);

struct WBEntry {
    WBStatus status = WBStatus::NotOWB;
    std::size_t rho = 0;  // rho_B(b_i * u_j); 0 iff the product is zero
    bool operator==(const WBEntry&) const = default;
};

// Partial map (i,j) -> (status, rho) over a basis pair (B,U).  Exhaustive
// tables classify every pair; partial ones only what some construction
// certified (counts computed from them are the tilde variants and remain
// valid lower bounds).
class WBTable {
  public:
    WBTable(BasisPtr b, BasisPtr u, bool exhaustive);

    std::size_t n() const { return n_; }
    bool exhaustive() const { return exhaustive_; }
    void mark_partial() { exhaustive_ = false; }

    const IndexedBasis& basis() const { return *b_; }
    const IndexedBasis& ubasis() const { return *u_; }
    const BasisPtr& basis_ptr() const { return b_; }
    const BasisPtr& ubasis_ptr() const { return u_; }

    std::optional<WBEntry> at(std::size_t i, std::size_t j) const;  // 1-based
    void set(std::size_t i, std::size_t j, WBEntry e);

    std::size_t entry_count() const { return count_; }
    void for_each(const std::function<void(std::size_t, std::size_t, const WBEntry&)>& fn) const;

  private:
    std::size_t index(std::size_t i, std::size_t j) const;
    BasisPtr b_, u_;
    std::size_t n_ = 0;
    bool exhaustive_ = false;
    std::size_t count_ = 0;
    std::vector<std::optional<WBEntry>> grid_;
};

// Strongest of WB/WWB/OWB satisfied by (i,j) per the rectangle/edge rules,
// together with rho_B(b_i * u_j).
WBEntry classify_pair(const IndexedBasis& b, const IndexedBasis& u, std::size_t i, std::size_t j);

// seed == nullptr: exhaustive classification of all n^2 pairs (O(n^4)).
// Otherwise a copy of the seed marked partial; BasisMismatch if the seed was
// built over a different pair.
WBTable build_wb_table(BasisPtr b, BasisPtr u, const WBTable* seed = nullptr);

// Number of distinct filtration values l reached from row i by pairs of at
// least the requested strength.
std::size_t sigma_count(const WBTable& t, WBVariant variant, std::size_t i);

// Number of distinct rows i reaching filtration value l.
std::size_t mu_count(const WBTable& t, WBVariant variant, std::size_t l);

// Feng-Rao lower bound on the minimum distance: min sigma over I for primary
// codes, min mu over the plain complement of I for dual codes.
std::size_t min_distance_bound(const CodeHandle& code, const WBTable& t, WBVariant variant);

// The unique H with g_i . h_j = delta_{i,n-j+1}; h_k is column n-k+1 of the
// inverse of the matrix with rows g_i.
BasisPtr dualize(const IndexedBasis& g);

enum class DualityKind { Full, Triangular, Neither };

// Full: the Kronecker-delta relation holds for all pairs.  Triangular: only
// g_i . h_{n-i+1} != 0 with zeros below, which preserves the bound
// translation but not the code identity.
DualityKind check_duality(const IndexedBasis& g, const IndexedBasis& h);

// Map a table over (G,U) to one over (H,U), H = dualize(G): entry (i,j)
// with value k becomes entry (n-k+1, j) with value n-i+1.  WWB entries are
// downgraded to OWB first; NotOWB and zero-product entries are dropped.
WBTable translate_wb_table(const WBTable& t, BasisPtr h);

// Distinct rho values reached from row i (the Lambda set), respectively rows
// reaching value l (the V set).
std::vector<std::size_t> lambda_set(const WBTable& t, WBVariant variant, std::size_t i);
std::vector<std::size_t> v_set(const WBTable& t, WBVariant variant, std::size_t l);

// Feng-Rao lower bound on the t-th generalized Hamming weight: minimal size
// of a union of t Lambda sets (primary) or V sets (dual).
std::size_t ghw_bound(const CodeHandle& code, const WBTable& t, WBVariant variant, std::size_t tt);

}  // namespace frcodes

#endif
