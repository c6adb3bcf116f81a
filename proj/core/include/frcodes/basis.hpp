#ifndef FRCODES_BASIS_HPP
#define FRCODES_BASIS_HPP

#include <memory>
#include <optional>
#include <vector>

#include "frcodes/linalg.hpp"

namespace frcodes {

// Ordered basis b_1..b_n of F_q^n together with cached echelon data for the
// filtration L_0 c L_1 c ... c L_n, L_l = span{b_1..b_l}.  All indices into
// the basis are 1-based, matching the usual coding-theory convention.
class IndexedBasis {
  public:
    // Throws Singular if the rows are linearly dependent.
    static std::shared_ptr<const IndexedBasis> create(FieldPtr field, Mat rows);

    std::size_t n() const { return rows_.size(); }
    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    const Mat& rows() const { return rows_; }
    const Vec& row(std::size_t i) const;  // 1-based

    // Filtration position: 0 for the zero vector, otherwise the minimal l
    // with v in span{b_1..b_l}.
    std::size_t rho(const Vec& v) const;

    // Coefficients c with v = sum c_i b_i, length n (trailing zeros kept).
    Vec coordinates(const Vec& v) const;

    bool same_rows(const IndexedBasis& other) const {
        return field_->same_as(*other.field_) && rows_ == other.rows_;
    }

  private:
    IndexedBasis() = default;
    void build();

    FieldPtr field_;
    Mat rows_;
    // ech_[l] spans the same prefix space as rows_[0..l]; its first nonzero
    // entry sits at pivot_col_[l], and every column owns exactly one pivot.
    Mat ech_;
    std::vector<std::size_t> pivot_col_;
    std::vector<std::size_t> row_of_col_;
    // ech_[l] = sum_k basis_coef_[l][k] * rows_[k], lower triangular.
    Mat basis_coef_;
};

using BasisPtr = std::shared_ptr<const IndexedBasis>;

// Non-empty-by-convention subset of {1..n}.  The empty value is
// representable (it arises as the complement of the full set) and triggers
// EmptyIndexSet when used to build codes or bounds.
class IndexSet {
  public:
    static IndexSet of(std::size_t n, std::vector<std::size_t> members);
    static IndexSet full(std::size_t n);

    std::size_t n() const { return n_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(std::size_t i) const;
    const std::vector<std::size_t>& members() const { return members_; }

    // The reversing complement {1..n} \ {n-i+1 : i in I}; an involution.
    IndexSet complement() const;

    // Plain set complement {1..n} \ I.
    std::vector<std::size_t> absent() const;

    bool operator==(const IndexSet& other) const {
        return n_ == other.n_ && members_ == other.members_;
    }

  private:
    IndexSet(std::size_t n, std::vector<std::size_t> members)
        : n_(n), members_(std::move(members)) {}
    std::size_t n_ = 0;
    std::vector<std::size_t> members_;
};

enum class Side { Primary, Dual };

// A code selected from an indexed basis: span{b_i : i in I} on the primary
// side, its orthogonal complement on the dual side.
struct CodeHandle {
    BasisPtr basis;
    IndexSet I;
    Side side = Side::Primary;
    std::optional<std::size_t> designed_distance;

    std::size_t n() const { return basis->n(); }
    std::size_t dim() const { return side == Side::Primary ? I.size() : n() - I.size(); }
};

CodeHandle make_code(BasisPtr basis, IndexSet I, Side side);

// Coefficient vector of v over b_1..b_n.
inline Vec express_in_basis(const Vec& v, const IndexedBasis& b) { return b.coordinates(v); }

}  // namespace frcodes

#endif
