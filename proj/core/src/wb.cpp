#include "frcodes/wb.hpp"

#include <algorithm>
#include <string>

namespace frcodes {

const char* to_string(WBStatus s) {
    switch (s) {
        case WBStatus::NotOWB: return "NotOWB";
        case WBStatus::OWB: return "OWB";
        case WBStatus::WWB: return "WWB";
        case WBStatus::WB: return "WB";
    }
    return "NotOWB";
}

std::optional<WBStatus> wb_status_from_string(const std::string& s) {
    if (s == "WB") return WBStatus::WB;
    if (s == "WWB") return WBStatus::WWB;
    if (s == "OWB") return WBStatus::OWB;
    if (s == "NotOWB") return WBStatus::NotOWB;
    return std::nullopt;
}

WBTable::WBTable(BasisPtr b, BasisPtr u, bool exhaustive)
    : b_(std::move(b)), u_(std::move(u)), exhaustive_(exhaustive) {
    if (!b_ || !u_) fail(Err::Invalid, "table needs a basis pair");
    if (b_->n() != u_->n()) fail(Err::DimensionMismatch, "basis pair lengths differ");
    if (!b_->field().same_as(u_->field())) fail(Err::BasisMismatch, "basis pair over different fields");
    n_ = b_->n();
    grid_.assign(n_ * n_, std::nullopt);
}

std::size_t WBTable::index(std::size_t i, std::size_t j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
        fail(Err::IndexOutOfRange, "pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    return (i - 1) * n_ + (j - 1);
}

std::optional<WBEntry> WBTable::at(std::size_t i, std::size_t j) const { return grid_[index(i, j)]; }

void WBTable::set(std::size_t i, std::size_t j, WBEntry e) {
    auto& slot = grid_[index(i, j)];
    if (!slot) ++count_;
    slot = e;
}

void WBTable::for_each(
    const std::function<void(std::size_t, std::size_t, const WBEntry&)>& fn) const {
    for (std::size_t i = 1; i <= n_; ++i)
        for (std::size_t j = 1; j <= n_; ++j) {
            const auto& slot = grid_[(i - 1) * n_ + (j - 1)];
            if (slot) fn(i, j, *slot);
        }
}

namespace {

// rho_B(b_i * u_j) for i in [1,imax], j in [1,jmax]; grid[i-1][j-1].
std::vector<std::vector<std::size_t>> rho_grid(const IndexedBasis& b, const IndexedBasis& u,
                                               std::size_t imax, std::size_t jmax) {
    const Field& f = b.field();
    std::vector<std::vector<std::size_t>> grid(imax, std::vector<std::size_t>(jmax));
    for (std::size_t i = 1; i <= imax; ++i)
        for (std::size_t j = 1; j <= jmax; ++j)
            grid[i - 1][j - 1] = b.rho(star(f, b.row(i), u.row(j)));
    return grid;
}

WBStatus status_from_grid(const std::vector<std::vector<std::size_t>>& g, std::size_t i,
                          std::size_t j) {
    const std::size_t val = g[i - 1][j - 1];
    bool owb = true;
    for (std::size_t x = 1; x < i && owb; ++x) owb = g[x - 1][j - 1] < val;
    if (!owb) return WBStatus::NotOWB;
    bool row_edge = true;
    for (std::size_t y = 1; y < j && row_edge; ++y) row_edge = g[i - 1][y - 1] < val;
    if (!row_edge) return WBStatus::OWB;
    for (std::size_t x = 1; x < i; ++x)
        for (std::size_t y = 1; y < j; ++y)
            if (g[x - 1][y - 1] >= val) return WBStatus::WWB;
    return WBStatus::WB;
}

}  // namespace

WBEntry classify_pair(const IndexedBasis& b, const IndexedBasis& u, std::size_t i, std::size_t j) {
    if (b.n() != u.n()) fail(Err::DimensionMismatch, "basis pair lengths differ");
    if (i < 1 || i > b.n() || j < 1 || j > b.n())
        fail(Err::IndexOutOfRange, "pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    auto grid = rho_grid(b, u, i, j);
    return WBEntry{status_from_grid(grid, i, j), grid[i - 1][j - 1]};
}

WBTable build_wb_table(BasisPtr b, BasisPtr u, const WBTable* seed) {
    if (seed) {
        if (!seed->basis().same_rows(*b) || !seed->ubasis().same_rows(*u))
            fail(Err::BasisMismatch, "seed table built over a different basis pair");
        WBTable out = *seed;
        out.mark_partial();
        return out;
    }
    WBTable out(b, u, /*exhaustive=*/true);
    const std::size_t n = b->n();
    auto grid = rho_grid(*b, *u, n, n);
    // Prefix maxima turn the rectangle/edge comparisons of the three
    // definitions into O(1) lookups per pair.
    std::vector<std::vector<std::size_t>> colmax(n + 1, std::vector<std::size_t>(n + 1, 0));
    std::vector<std::vector<std::size_t>> rowmax(n + 1, std::vector<std::size_t>(n + 1, 0));
    std::vector<std::vector<std::size_t>> rectmax(n + 1, std::vector<std::size_t>(n + 1, 0));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            const std::size_t v = grid[i - 1][j - 1];
            colmax[i][j] = std::max(colmax[i - 1][j], v);
            rowmax[i][j] = std::max(rowmax[i][j - 1], v);
            rectmax[i][j] = std::max({rectmax[i - 1][j], rectmax[i][j - 1], v});
        }
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            const std::size_t v = grid[i - 1][j - 1];
            WBStatus st = WBStatus::NotOWB;
            if (colmax[i - 1][j] < v || i == 1) {
                st = WBStatus::OWB;
                const bool row_ok = (j == 1) || rowmax[i][j - 1] < v;
                if (row_ok) {
                    const bool rect_ok =
                        (i == 1 || j == 1) || std::max(rectmax[i - 1][j], rectmax[i][j - 1]) < v;
                    st = rect_ok ? WBStatus::WB : WBStatus::WWB;
                }
            }
            out.set(i, j, WBEntry{st, v});
        }
    return out;
}

namespace {

template <typename Fn>
void for_variant(const WBTable& t, WBVariant variant, Fn&& fn) {
    const WBStatus need = variant == WBVariant::WB ? WBStatus::WB : WBStatus::OWB;
    t.for_each([&](std::size_t i, std::size_t j, const WBEntry& e) {
        if (e.status >= need && e.rho >= 1) fn(i, j, e);
    });
}

}  // namespace

std::size_t sigma_count(const WBTable& t, WBVariant variant, std::size_t i) {
    if (i < 1 || i > t.n()) fail(Err::IndexOutOfRange, "row " + std::to_string(i));
    std::vector<bool> seen(t.n() + 1, false);
    std::size_t cnt = 0;
    for_variant(t, variant, [&](std::size_t ii, std::size_t, const WBEntry& e) {
        if (ii == i && !seen[e.rho]) {
            seen[e.rho] = true;
            ++cnt;
        }
    });
    return cnt;
}

std::size_t mu_count(const WBTable& t, WBVariant variant, std::size_t l) {
    if (l < 1 || l > t.n()) fail(Err::IndexOutOfRange, "value " + std::to_string(l));
    std::vector<bool> seen(t.n() + 1, false);
    std::size_t cnt = 0;
    for_variant(t, variant, [&](std::size_t i, std::size_t, const WBEntry& e) {
        if (e.rho == l && !seen[i]) {
            seen[i] = true;
            ++cnt;
        }
    });
    return cnt;
}

std::size_t min_distance_bound(const CodeHandle& code, const WBTable& t, WBVariant variant) {
    if (!code.basis->same_rows(t.basis()))
        fail(Err::BasisMismatch, "table not built over the code basis");
    if (code.I.empty()) fail(Err::EmptyIndexSet, "bound over empty index set");
    std::size_t best = 0;
    bool first = true;
    if (code.side == Side::Primary) {
        for (std::size_t i : code.I.members()) {
            const std::size_t s = sigma_count(t, variant, i);
            if (first || s < best) best = s, first = false;
        }
    } else {
        const auto outside = code.I.absent();
        if (outside.empty()) fail(Err::EmptyIndexSet, "dual bound needs indices outside I");
        for (std::size_t l : outside) {
            const std::size_t m = mu_count(t, variant, l);
            if (first || m < best) best = m, first = false;
        }
    }
    return best;
}

BasisPtr dualize(const IndexedBasis& g) {
    const std::size_t n = g.n();
    const Mat inv = invert(g.field(), g.rows());
    Mat h(n, Vec(n));
    for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t r = 0; r < n; ++r) h[k - 1][r] = inv[r][n - k];
    return IndexedBasis::create(g.field_ptr(), std::move(h));
}

DualityKind check_duality(const IndexedBasis& g, const IndexedBasis& h) {
    if (g.n() != h.n()) fail(Err::DimensionMismatch, "basis lengths differ");
    const Field& f = g.field();
    const std::size_t n = g.n();
    bool full = true;
    for (std::size_t i = 1; i <= n && full; ++i)
        for (std::size_t j = 1; j <= n && full; ++j) {
            const Elem d = dot(f, g.row(i), h.row(j));
            const Elem want = (j == n - i + 1) ? 1 : 0;
            if (d != want) full = false;
        }
    if (full) return DualityKind::Full;
    bool tri = true;
    for (std::size_t i = 1; i <= n && tri; ++i) {
        if (dot(f, g.row(i), h.row(n - i + 1)) == 0) tri = false;
        for (std::size_t j = 1; j < n - i + 1 && tri; ++j)
            if (dot(f, g.row(i), h.row(j)) != 0) tri = false;
    }
    return tri ? DualityKind::Triangular : DualityKind::Neither;
}

WBTable translate_wb_table(const WBTable& t, BasisPtr h) {
    if (check_duality(t.basis(), *h) != DualityKind::Full)
        fail(Err::NotDualPair, "translation requires the full duality relation");
    const std::size_t n = t.n();
    WBTable out(std::move(h), t.ubasis_ptr(), /*exhaustive=*/false);
    t.for_each([&](std::size_t i, std::size_t j, const WBEntry& e) {
        if (e.rho < 1) return;
        WBStatus st = e.status;
        if (st == WBStatus::WWB) st = WBStatus::OWB;  // the equivalence is not known for WWB
        if (st < WBStatus::OWB) return;
        out.set(n - e.rho + 1, j, WBEntry{st, n - i + 1});
    });
    return out;
}

std::vector<std::size_t> lambda_set(const WBTable& t, WBVariant variant, std::size_t i) {
    if (i < 1 || i > t.n()) fail(Err::IndexOutOfRange, "row " + std::to_string(i));
    std::vector<bool> seen(t.n() + 1, false);
    for_variant(t, variant, [&](std::size_t ii, std::size_t, const WBEntry& e) {
        if (ii == i) seen[e.rho] = true;
    });
    std::vector<std::size_t> out;
    for (std::size_t l = 1; l <= t.n(); ++l)
        if (seen[l]) out.push_back(l);
    return out;
}

std::vector<std::size_t> v_set(const WBTable& t, WBVariant variant, std::size_t l) {
    if (l < 1 || l > t.n()) fail(Err::IndexOutOfRange, "value " + std::to_string(l));
    std::vector<bool> seen(t.n() + 1, false);
    for_variant(t, variant, [&](std::size_t i, std::size_t, const WBEntry& e) {
        if (e.rho == l) seen[i] = true;
    });
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i <= t.n(); ++i)
        if (seen[i]) out.push_back(i);
    return out;
}

namespace {

using Bits = std::vector<std::uint64_t>;

Bits to_bits(const std::vector<std::size_t>& vals, std::size_t n) {
    Bits b((n + 64) / 64, 0);
    for (std::size_t v : vals) b[v / 64] |= (std::uint64_t{1} << (v % 64));
    return b;
}

std::size_t popcount_union(const Bits& acc) {
    std::size_t c = 0;
    for (std::uint64_t w : acc) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
}

// Exhaustive minimization of |union of t member sets| with incumbent pruning.
void min_union(const std::vector<Bits>& sets, std::size_t start, std::size_t left, Bits& acc,
               std::size_t& best) {
    if (left == 0) {
        best = std::min(best, popcount_union(acc));
        return;
    }
    if (popcount_union(acc) >= best) return;  // union only grows
    for (std::size_t k = start; k + left <= sets.size(); ++k) {
        Bits merged = acc;
        for (std::size_t w = 0; w < merged.size(); ++w) merged[w] |= sets[k][w];
        min_union(sets, k + 1, left - 1, merged, best);
    }
}

}  // namespace

std::size_t ghw_bound(const CodeHandle& code, const WBTable& t, WBVariant variant,
                      std::size_t tt) {
    if (!code.basis->same_rows(t.basis()))
        fail(Err::BasisMismatch, "table not built over the code basis");
    if (code.I.empty()) fail(Err::EmptyIndexSet, "bound over empty index set");
    if (tt < 1 || tt > code.dim()) fail(Err::TOutOfRange, "t = " + std::to_string(tt));
    std::vector<std::size_t> pool =
        code.side == Side::Primary ? code.I.members() : code.I.absent();
    std::vector<Bits> sets;
    sets.reserve(pool.size());
    for (std::size_t idx : pool) {
        const auto vals = code.side == Side::Primary ? lambda_set(t, variant, idx)
                                                     : v_set(t, variant, idx);
        sets.push_back(to_bits(vals, t.n() + 1));
    }
    std::size_t best = t.n() + 1;
    Bits acc((t.n() + 1 + 64) / 64, 0);
    min_union(sets, 0, tt, acc, best);
    return best;
}

}  // namespace frcodes
