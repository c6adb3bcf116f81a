#ifndef FRCODES_ALGEBRA_HPP
#define FRCODES_ALGEBRA_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "frcodes/wb.hpp"

namespace frcodes {

// Exponent vector of a monomial in m variables.
using Expo = std::vector<std::uint32_t>;

Expo expo_add(const Expo& a, const Expo& b);
std::optional<Expo> expo_sub(const Expo& a, const Expo& b);  // nullopt unless a >= b

// Total degree order with the listed tie-breaks.  priority lists variable
// indices most-significant first; the default [m-1, ..., 0] makes the last
// variable dominate, e.g. X < Y in two variables.
struct MonomialOrder {
    enum class Kind { GradedLex, Lex, GradedReverseLex };

    Kind kind = Kind::GradedLex;
    std::vector<std::size_t> priority;

    static MonomialOrder graded_lex(std::size_t m);
    static MonomialOrder lex(std::size_t m);
    static MonomialOrder graded_reverse_lex(std::size_t m);
    static std::vector<std::size_t> default_priority(std::size_t m);

    bool less(const Expo& a, const Expo& b) const;
};

// F_q[X_1..X_m] evaluated on a Cartesian point set S_1 x ... x S_m, with the
// monomial weight rho(X^e) = e.  Holds the computed footprint delta (the n
// exponents whose evaluations grow the span) and the evaluation basis
// b_i = ev(X^alpha(i)).
class MonomialAlgebra {
  public:
    static std::shared_ptr<const MonomialAlgebra> build(FieldPtr field, std::size_t vars,
                                                        MonomialOrder order,
                                                        std::vector<Vec> point_sets);

    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    std::size_t vars() const { return vars_; }
    std::size_t n() const { return points_.size(); }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Vec>& point_sets() const { return point_sets_; }
    const Mat& points() const { return points_; }

    const std::vector<Expo>& delta() const { return delta_; }
    const Expo& alpha(std::size_t i) const;                 // 1-based
    std::optional<std::size_t> delta_index(const Expo& e) const;

    const BasisPtr& eval_basis() const { return basis_; }

    Vec eval_monomial(const Expo& e) const;
    // terms: list of (exponent, coefficient)
    Vec eval_poly(const std::vector<std::pair<Expo, Elem>>& terms) const;

  private:
    MonomialAlgebra() = default;
    Vec eval_monomial_points(const Expo& e, const Mat& pts) const;

    FieldPtr field_;
    std::size_t vars_ = 0;
    MonomialOrder order_;
    std::vector<Vec> point_sets_;
    Mat points_;  // row-major enumeration, first coordinate slowest
    std::vector<Expo> delta_;
    std::map<Expo, std::size_t> delta_pos_;  // exponent -> 1-based index
    BasisPtr basis_;
};

using AlgebraPtr = std::shared_ptr<const MonomialAlgebra>;

// Partial table over (evalBasis, evalBasis) holding exactly the pairs
// certified well-behaving by the semigroup rule alpha(i)+alpha(j) = alpha(l).
WBTable semigroup_wb_table(const MonomialAlgebra& a);

CodeHandle construct_code(const MonomialAlgebra& a, IndexSet I, Side side);

// Index set of the requested dimension greedily maximizing the designed
// distance (largest sigma values for primary codes, largest mu values kept
// outside I for dual codes; ties prefer the smaller index).
IndexSet design_improved_code(const MonomialAlgebra& a, std::size_t target_dim, Side side);

// Codeword sum a_t b_{i_t} over the members of I in ascending order.
Vec encode(const CodeHandle& code, const Vec& message);

}  // namespace frcodes

#endif
