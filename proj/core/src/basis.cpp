#include "frcodes/basis.hpp"

#include <algorithm>

namespace frcodes {

std::shared_ptr<const IndexedBasis> IndexedBasis::create(FieldPtr field, Mat rows) {
    if (!field) fail(Err::Invalid, "missing field");
    if (rows.empty()) fail(Err::Invalid, "basis needs at least one vector");
    const std::size_t n = rows.size();
    for (const Vec& r : rows) {
        if (r.size() != n) fail(Err::DimensionMismatch, "basis of F_q^n needs n vectors of length n");
        for (Elem x : r)
            if (x >= field->q()) fail(Err::OutOfRange, "entry not a field element");
    }
    auto b = std::shared_ptr<IndexedBasis>(new IndexedBasis());
    b->field_ = std::move(field);
    b->rows_ = std::move(rows);
    b->build();
    return b;
}

void IndexedBasis::build() {
    const Field& f = *field_;
    const std::size_t n = rows_.size();
    ech_.assign(n, Vec());
    pivot_col_.assign(n, 0);
    row_of_col_.assign(n, n);  // n marks "no owner yet"
    basis_coef_.assign(n, Vec());

    for (std::size_t l = 0; l < n; ++l) {
        Vec cur = rows_[l];
        Vec coef(n, 0);
        coef[l] = 1;
        std::size_t c = 0;
        bool placed = false;
        while (c < n) {
            if (cur[c] == 0) {
                ++c;
                continue;
            }
            const std::size_t k = row_of_col_[c];
            if (k == n) {
                const Elem s = f.inv(cur[c]);
                for (Elem& x : cur) x = f.mul(x, s);
                for (Elem& x : coef) x = f.mul(x, s);
                ech_[l] = std::move(cur);
                basis_coef_[l] = std::move(coef);
                pivot_col_[l] = c;
                row_of_col_[c] = l;
                placed = true;
                break;
            }
            const Elem t = cur[c];
            for (std::size_t w = c; w < n; ++w) cur[w] = f.sub(cur[w], f.mul(t, ech_[k][w]));
            for (std::size_t w = 0; w < n; ++w)
                coef[w] = f.sub(coef[w], f.mul(t, basis_coef_[k][w]));
        }
        if (!placed) fail(Err::Singular, "basis vectors are linearly dependent");
    }
}

const Vec& IndexedBasis::row(std::size_t i) const {
    if (i < 1 || i > rows_.size()) fail(Err::IndexOutOfRange, "basis index " + std::to_string(i));
    return rows_[i - 1];
}

std::size_t IndexedBasis::rho(const Vec& v) const {
    const Field& f = *field_;
    const std::size_t n = rows_.size();
    if (v.size() != n) fail(Err::DimensionMismatch, "vector length");
    Vec cur = v;
    std::size_t max_used = 0;  // 1-based, 0 = none
    std::size_t c = 0;
    while (c < n) {
        if (cur[c] == 0) {
            ++c;
            continue;
        }
        const std::size_t k = row_of_col_[c];
        const Elem t = cur[c];
        for (std::size_t w = c; w < n; ++w) cur[w] = f.sub(cur[w], f.mul(t, ech_[k][w]));
        max_used = std::max(max_used, k + 1);
    }
    return max_used;
}

Vec IndexedBasis::coordinates(const Vec& v) const {
    const Field& f = *field_;
    const std::size_t n = rows_.size();
    if (v.size() != n) fail(Err::DimensionMismatch, "vector length");
    Vec cur = v;
    Vec out(n, 0);
    std::size_t c = 0;
    while (c < n) {
        if (cur[c] == 0) {
            ++c;
            continue;
        }
        const std::size_t k = row_of_col_[c];
        const Elem t = cur[c];
        for (std::size_t w = c; w < n; ++w) cur[w] = f.sub(cur[w], f.mul(t, ech_[k][w]));
        for (std::size_t w = 0; w < n; ++w)
            out[w] = f.add(out[w], f.mul(t, basis_coef_[k][w]));
    }
    return out;
}

IndexSet IndexSet::of(std::size_t n, std::vector<std::size_t> members) {
    if (n == 0) fail(Err::Invalid, "index set over empty range");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (std::size_t i : members)
        if (i < 1 || i > n) fail(Err::IndexOutOfRange, "index " + std::to_string(i));
    return IndexSet(n, std::move(members));
}

IndexSet IndexSet::full(std::size_t n) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i + 1;
    return IndexSet::of(n, std::move(all));
}

bool IndexSet::contains(std::size_t i) const {
    return std::binary_search(members_.begin(), members_.end(), i);
}

IndexSet IndexSet::complement() const {
    std::vector<bool> removed(n_ + 1, false);
    for (std::size_t i : members_) removed[n_ - i + 1] = true;
    std::vector<std::size_t> out;
    for (std::size_t l = 1; l <= n_; ++l)
        if (!removed[l]) out.push_back(l);
    return IndexSet(n_, std::move(out));
}

std::vector<std::size_t> IndexSet::absent() const {
    std::vector<std::size_t> out;
    for (std::size_t l = 1; l <= n_; ++l)
        if (!contains(l)) out.push_back(l);
    return out;
}

CodeHandle make_code(BasisPtr basis, IndexSet I, Side side) {
    if (!basis) fail(Err::Invalid, "missing basis");
    if (I.n() != basis->n()) fail(Err::DimensionMismatch, "index set range vs basis length");
    if (I.empty()) fail(Err::EmptyIndexSet, "code needs a non-empty index set");
    return CodeHandle{std::move(basis), std::move(I), side, std::nullopt};
}

}  // namespace frcodes
