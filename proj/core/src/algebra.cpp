#include "frcodes/algebra.hpp"

#include <algorithm>
#include <numeric>

#include "frcodes/semigroup.hpp"

namespace frcodes {

Expo expo_add(const Expo& a, const Expo& b) {
    if (a.size() != b.size()) fail(Err::DimensionMismatch, "exponent lengths");
    Expo out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
    return out;
}

std::optional<Expo> expo_sub(const Expo& a, const Expo& b) {
    if (a.size() != b.size()) fail(Err::DimensionMismatch, "exponent lengths");
    Expo out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] < b[k]) return std::nullopt;
        out[k] = a[k] - b[k];
    }
    return out;
}

std::vector<std::size_t> MonomialOrder::default_priority(std::size_t m) {
    std::vector<std::size_t> p(m);
    for (std::size_t k = 0; k < m; ++k) p[k] = m - 1 - k;
    return p;
}

MonomialOrder MonomialOrder::graded_lex(std::size_t m) {
    return MonomialOrder{Kind::GradedLex, default_priority(m)};
}
MonomialOrder MonomialOrder::lex(std::size_t m) {
    return MonomialOrder{Kind::Lex, default_priority(m)};
}
MonomialOrder MonomialOrder::graded_reverse_lex(std::size_t m) {
    return MonomialOrder{Kind::GradedReverseLex, default_priority(m)};
}

bool MonomialOrder::less(const Expo& a, const Expo& b) const {
    if (a.size() != b.size() || a.size() != priority.size())
        fail(Err::DimensionMismatch, "exponent lengths vs order");
    const auto deg = [](const Expo& e) {
        return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
    };
    if (kind != Kind::Lex) {
        const auto da = deg(a), db = deg(b);
        if (da != db) return da < db;
    }
    if (kind == Kind::GradedReverseLex) {
        // Among equal degrees the larger exponent in the least significant
        // position makes the monomial smaller.
        for (std::size_t k = priority.size(); k-- > 0;) {
            const std::size_t v = priority[k];
            if (a[v] != b[v]) return a[v] > b[v];
        }
        return false;
    }
    for (std::size_t v : priority) {
        if (a[v] != b[v]) return a[v] < b[v];
    }
    return false;
}

std::shared_ptr<const MonomialAlgebra> MonomialAlgebra::build(FieldPtr field, std::size_t vars,
                                                              MonomialOrder order,
                                                              std::vector<Vec> point_sets) {
    if (!field) fail(Err::Invalid, "missing field");
    if (vars < 1 || point_sets.size() != vars)
        fail(Err::DimensionMismatch, "one point set per variable");
    if (order.priority.empty()) order.priority = MonomialOrder::default_priority(vars);
    if (order.priority.size() != vars) fail(Err::DimensionMismatch, "priority length");
    {
        auto perm = order.priority;
        std::sort(perm.begin(), perm.end());
        for (std::size_t k = 0; k < vars; ++k)
            if (perm[k] != k) fail(Err::Invalid, "priority must be a permutation of 0..m-1");
    }

    std::uint64_t n = 1;
    for (const Vec& s : point_sets) {
        if (s.empty()) fail(Err::EmptyPointSet, "empty coordinate set");
        for (Elem x : s)
            if (x >= field->q()) fail(Err::OutOfRange, "point coordinate not a field element");
        Vec sorted = s;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            fail(Err::DuplicatePoint, "coordinate set has duplicates");
        n *= s.size();
        if (n > 4096) fail(Err::SizeExceeded, "point count exceeds 4096");
    }

    auto a = std::shared_ptr<MonomialAlgebra>(new MonomialAlgebra());
    a->field_ = std::move(field);
    a->vars_ = vars;
    a->order_ = std::move(order);
    a->point_sets_ = std::move(point_sets);

    // Row-major point enumeration: the first coordinate varies slowest.
    a->points_.assign(n, Vec(vars));
    for (std::uint64_t t = 0; t < n; ++t) {
        std::uint64_t rest = t;
        for (std::size_t k = vars; k-- > 0;) {
            const std::size_t sz = a->point_sets_[k].size();
            a->points_[t][k] = a->point_sets_[k][rest % sz];
            rest /= sz;
        }
    }

    // Candidate exponents: powers of X_k at least |S_k| evaluate inside the
    // span of lower powers on the point set, so only box exponents can grow
    // the span.  Scan them in increasing monomial order and keep the rank
    // increasers; the result must exhaust all n dimensions.
    std::vector<Expo> box;
    box.reserve(n);
    {
        Expo e(vars, 0);
        bool more = true;
        while (more) {
            box.push_back(e);
            more = false;
            for (std::size_t k = vars; k-- > 0;) {
                if (++e[k] < a->point_sets_[k].size()) {
                    more = true;
                    break;
                }
                e[k] = 0;
            }
        }
    }
    std::sort(box.begin(), box.end(),
              [&](const Expo& x, const Expo& y) { return a->order_.less(x, y); });

    const Field& f = *a->field_;
    Mat basis_rows;
    Mat ech;  // growing echelon of the kept evaluations
    std::vector<std::size_t> pivot_of(n, n);
    for (const Expo& e : box) {
        Vec v = a->eval_monomial_points(e, a->points_);
        Vec red = v;
        std::size_t c = 0;
        while (c < n) {
            if (red[c] == 0) {
                ++c;
                continue;
            }
            const std::size_t k = pivot_of[c];
            if (k == n) break;
            const Elem t = red[c];
            for (std::size_t w = c; w < n; ++w) red[w] = f.sub(red[w], f.mul(t, ech[k][w]));
        }
        if (c == n) continue;  // dependent, does not enlarge the span
        const Elem s = f.inv(red[c]);
        for (Elem& x : red) x = f.mul(x, s);
        pivot_of[c] = ech.size();
        ech.push_back(std::move(red));
        a->delta_.push_back(e);
        a->delta_pos_[e] = a->delta_.size();
        basis_rows.push_back(std::move(v));
        if (a->delta_.size() == n) break;
    }
    if (a->delta_.size() != n)
        fail(Err::Invalid, "footprint does not reach the point count");

    a->basis_ = IndexedBasis::create(a->field_, std::move(basis_rows));
    return a;
}

const Expo& MonomialAlgebra::alpha(std::size_t i) const {
    if (i < 1 || i > delta_.size()) fail(Err::IndexOutOfRange, "alpha(" + std::to_string(i) + ")");
    return delta_[i - 1];
}

std::optional<std::size_t> MonomialAlgebra::delta_index(const Expo& e) const {
    auto it = delta_pos_.find(e);
    if (it == delta_pos_.end()) return std::nullopt;
    return it->second;
}

Vec MonomialAlgebra::eval_monomial(const Expo& e) const {
    if (e.size() != vars_) fail(Err::DimensionMismatch, "exponent length");
    return eval_monomial_points(e, points_);
}

Vec MonomialAlgebra::eval_monomial_points(const Expo& e, const Mat& pts) const {
    Vec out(pts.size(), 1);
    for (std::size_t t = 0; t < pts.size(); ++t)
        for (std::size_t k = 0; k < e.size(); ++k)
            out[t] = field_->mul(out[t], field_->pow(pts[t][k], e[k]));
    return out;
}

Vec MonomialAlgebra::eval_poly(const std::vector<std::pair<Expo, Elem>>& terms) const {
    Vec out(n(), 0);
    for (const auto& [e, c] : terms) {
        Vec mono = eval_monomial(e);
        for (std::size_t t = 0; t < out.size(); ++t)
            out[t] = field_->add(out[t], field_->mul(c, mono[t]));
    }
    return out;
}

WBTable semigroup_wb_table(const MonomialAlgebra& a) {
    WBTable out(a.eval_basis(), a.eval_basis(), /*exhaustive=*/false);
    const std::size_t n = a.n();
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            const auto l = a.delta_index(expo_add(a.alpha(i), a.alpha(j)));
            if (l) out.set(i, j, WBEntry{WBStatus::WB, *l});
        }
    return out;
}

CodeHandle construct_code(const MonomialAlgebra& a, IndexSet I, Side side) {
    CodeHandle code = make_code(a.eval_basis(), std::move(I), side);
    code.designed_distance = SemigroupData::from_algebra(a).order_bound(code.I, side);
    return code;
}

IndexSet design_improved_code(const MonomialAlgebra& a, std::size_t target_dim, Side side) {
    const std::size_t n = a.n();
    if (target_dim < 1 || target_dim > n)
        fail(Err::DimOutOfRange, "dimension " + std::to_string(target_dim));
    const SemigroupData sg = SemigroupData::from_algebra(a);
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i + 1;
    if (side == Side::Primary) {
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
            const auto sx = sg.sigma_at(x), sy = sg.sigma_at(y);
            return sx != sy ? sx > sy : x < y;
        });
        idx.resize(target_dim);
        return IndexSet::of(n, std::move(idx));
    }
    // Dual side: keep the target_dim largest mu values outside I.
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
        const auto mx = sg.mu_at(x), my = sg.mu_at(y);
        return mx != my ? mx > my : x < y;
    });
    std::vector<bool> keep_out(n + 1, false);
    for (std::size_t k = 0; k < target_dim; ++k) keep_out[idx[k]] = true;
    std::vector<std::size_t> members;
    for (std::size_t i = 1; i <= n; ++i)
        if (!keep_out[i]) members.push_back(i);
    return IndexSet::of(n, std::move(members));
}

Vec encode(const CodeHandle& code, const Vec& message) {
    if (code.side != Side::Primary)
        fail(Err::SideMismatch, "dual code handles carry no message encoder");
    if (message.size() != code.I.size())
        fail(Err::LengthMismatch, "message length vs code dimension");
    const Field& f = code.basis->field();
    Vec out(code.n(), 0);
    std::size_t t = 0;
    for (std::size_t i : code.I.members()) {
        const Vec& row = code.basis->row(i);
        for (std::size_t k = 0; k < out.size(); ++k)
            out[k] = f.add(out[k], f.mul(message[t], row[k]));
        ++t;
    }
    return out;
}

}  // namespace frcodes
