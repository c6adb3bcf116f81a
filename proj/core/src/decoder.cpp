#include "frcodes/decoder.hpp"

#include <algorithm>
#include <limits>

namespace frcodes {

namespace {
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
}

const char* to_string(DecodeStatus s) {
    switch (s) {
        case DecodeStatus::Ok: return "ok";
        case DecodeStatus::NoCandidates: return "no_candidates";
        case DecodeStatus::TiedVote: return "tied_vote";
    }
    return "ok";
}

std::shared_ptr<const DecoderSetup> DecoderSetup::make(BasisPtr g, BasisPtr u, IndexSet I,
                                                       const WBTable* table_gu) {
    if (!g || !u) fail(Err::Invalid, "decoder needs both bases");
    if (g->n() != u->n()) fail(Err::DimensionMismatch, "basis lengths differ");
    if (!g->field().same_as(u->field())) fail(Err::BasisMismatch, "bases over different fields");
    if (I.n() != g->n()) fail(Err::DimensionMismatch, "index set range vs basis length");
    if (I.empty()) fail(Err::EmptyIndexSet, "code needs a non-empty index set");

    auto s = std::shared_ptr<DecoderSetup>(new DecoderSetup());
    s->g_ = g;
    s->u_ = u;
    s->I_ = I;
    s->Ibar_ = I.complement();
    s->h_ = dualize(*g);
    if (table_gu) {
        if (!table_gu->basis().same_rows(*g) || !table_gu->ubasis().same_rows(*u))
            fail(Err::BasisMismatch, "supplied table not built over (G,U)");
        s->table_ = std::make_shared<const WBTable>(translate_wb_table(*table_gu, s->h_));
    } else {
        s->table_ = std::make_shared<const WBTable>(build_wb_table(s->h_, u));
    }

    const std::size_t n = g->n();
    s->wb_by_rho_.assign(n + 1, {});
    s->table_->for_each([&](std::size_t i, std::size_t j, const WBEntry& e) {
        if (e.status == WBStatus::WB && e.rho >= 1) s->wb_by_rho_[e.rho].emplace_back(i, j);
    });
    for (auto& pool : s->wb_by_rho_) {
        std::sort(pool.begin(), pool.end());
        // Sound WB entries of equal rho have strictly increasing i and
        // strictly decreasing j; the round engine relies on that staircase.
        for (std::size_t k = 1; k < pool.size(); ++k)
            if (pool[k].first <= pool[k - 1].first || pool[k].second >= pool[k - 1].second)
                fail(Err::Invalid, "table entries violate the well-behaving structure");
    }

    std::size_t d = 0;
    bool first = true;
    for (std::size_t l : s->Ibar_.absent()) {
        const std::size_t m = mu_count(*s->table_, WBVariant::WB, l);
        if (first || m < d) d = m, first = false;
    }
    s->designed_distance_ = d;
    return s;
}

DecoderRun DecoderSetup::start(const Vec& received) const {
    return DecoderRun(shared_from_this(), received);
}

DecodeResult DecoderSetup::decode(const Vec& received) const {
    const Field& f = g_->field();
    DecoderRun run = start(received);
    DecodeResult out;
    while (auto lopt = run.next_unknown()) {
        const std::size_t l = *lopt;
        const auto& an = run.analysis(l);
        RoundRecord rec;
        rec.l = l;
        rec.candidates = an.candidates;
        rec.votes = an.votes;
        for (Elem v : an.votes) ++rec.tally[v];
        if (rec.candidates.empty()) {
            out.transcript.push_back(std::move(rec));
            out.status = DecodeStatus::NoCandidates;
            out.failed_l = l;
            return out;
        }
        std::size_t best = 0;
        Elem chosen = 0;
        bool tie = false;
        for (const auto& [value, count] : rec.tally) {
            if (count > best) {
                best = count;
                chosen = value;
                tie = false;
            } else if (count == best) {
                tie = true;
            }
        }
        if (tie) {
            out.transcript.push_back(std::move(rec));
            out.status = DecodeStatus::TiedVote;
            out.failed_l = l;
            return out;
        }
        rec.chosen = chosen;
        out.transcript.push_back(std::move(rec));
        run.set_syndrome(l, chosen);
    }
    out.status = DecodeStatus::Ok;
    out.error = run.error_estimate();
    out.codeword = vec_sub(f, received, out.error);
    out.syndromes.resize(n());
    for (std::size_t l = 1; l <= n(); ++l) out.syndromes[l - 1] = *run.syndromes()[l - 1];
    return out;
}

DecoderRun::DecoderRun(DecoderPtr setup, const Vec& received) : setup_(std::move(setup)) {
    const std::size_t n = setup_->n();
    if (received.size() != n) fail(Err::DimensionMismatch, "received word length");
    const Field& f = setup_->g_->field();
    for (Elem x : received)
        if (x >= f.q()) fail(Err::OutOfRange, "received entry not a field element");
    synd_.assign(n, std::nullopt);
    ehat_.assign(n, 0);
    sgrid_.assign(n * n, 0);
    sgrid_known_.assign(n * n, 0);
    for (std::size_t i : setup_->Ibar_.members()) {
        const Elem s = dot(f, setup_->h_->row(i), received);
        synd_[i - 1] = s;
        if (s != 0) {
            const Vec& grow = setup_->g_->row(n - i + 1);
            for (std::size_t k = 0; k < n; ++k) ehat_[k] = f.add(ehat_[k], f.mul(s, grow[k]));
        }
    }
}

std::optional<std::size_t> DecoderRun::next_unknown() const {
    for (std::size_t l = 1; l <= synd_.size(); ++l)
        if (!synd_[l - 1]) return l;
    return std::nullopt;
}

Elem DecoderRun::sval(std::size_t v, std::size_t w) {
    const std::size_t n = setup_->n();
    const std::size_t idx = (v - 1) * n + (w - 1);
    if (sgrid_known_[idx]) return sgrid_[idx];
    const Field& f = setup_->g_->field();
    const Vec& hv = setup_->h_->row(v);
    const Vec& uw = setup_->u_->row(w);
    Elem s = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (ehat_[k] == 0) continue;
        s = f.add(s, f.mul(f.mul(hv[k], uw[k]), ehat_[k]));
    }
    sgrid_[idx] = s;
    sgrid_known_[idx] = 1;
    return s;
}

const DecoderRun::Analysis& DecoderRun::analysis(std::size_t l) {
    const std::size_t n = setup_->n();
    if (l < 1 || l > n) fail(Err::IndexOutOfRange, "syndrome index " + std::to_string(l));
    if (synd_[l - 1]) fail(Err::PrefixUnknown, "syndrome s_" + std::to_string(l) + " already known");
    for (std::size_t k = 1; k < l; ++k)
        if (!synd_[k - 1])
            fail(Err::PrefixUnknown, "syndrome s_" + std::to_string(k) + " still unknown");
    auto found = rounds_.find(l);
    if (found != rounds_.end()) return found->second;

    const Field& f = setup_->g_->field();
    Analysis an;
    // One staircase elimination per round.  Rows enter in increasing order
    // with non-increasing column ranges (candidate j values strictly drop as
    // i grows), so the echelon stays valid for every later candidate, and
    // each candidate test plus its extension is a single reduction.
    struct EchRow {
        std::size_t pivot;
        Vec vals;  // vals[c] is the entry in column c+1
    };
    std::vector<EchRow> ech;
    std::vector<std::size_t> ech_of_col(n, kNone);

    // Reduce vals in place against the echelon; returns the leading nonzero
    // position or kNone when the row lies in the current span.
    const auto reduce = [&](Vec& vals, std::vector<std::pair<std::size_t, Elem>>* coeffs) {
        std::size_t c = 0;
        while (c < vals.size()) {
            if (vals[c] == 0) {
                ++c;
                continue;
            }
            const std::size_t k = ech_of_col[c];
            if (k == kNone) return c;
            const Elem t = vals[c];
            const Vec& ev = ech[k].vals;
            for (std::size_t w = c; w < vals.size(); ++w)
                vals[w] = f.sub(vals[w], f.mul(t, ev[w]));
            if (coeffs) coeffs->emplace_back(k, t);
        }
        return kNone;
    };
    const auto insert = [&](Vec vals, std::size_t p) {
        const Elem s = f.inv(vals[p]);
        for (Elem& x : vals) x = f.mul(x, s);
        ech_of_col[p] = ech.size();
        ech.push_back(EchRow{p, std::move(vals)});
    };

    std::size_t next_row = 1;
    for (const auto& [i, j] : setup_->wb_by_rho_[l]) {
        for (; next_row < i; ++next_row) {
            Vec vals(j);
            for (std::size_t w = 1; w <= j; ++w) vals[w - 1] = sval(next_row, w);
            const std::size_t p = reduce(vals, nullptr);
            if (p != kNone) insert(std::move(vals), p);
        }
        Vec prefix(j - 1);
        for (std::size_t w = 1; w < j; ++w) prefix[w - 1] = sval(i, w);
        std::vector<std::pair<std::size_t, Elem>> coeffs;
        const std::size_t p = reduce(prefix, &coeffs);
        const bool row_ok = p == kNone;
        const bool col_ok = ech_of_col[j - 1] == kNone;
        if (row_ok && col_ok) {
            Elem sprime = 0;
            for (const auto& [k, t] : coeffs) sprime = f.add(sprime, f.mul(t, ech[k].vals[j - 1]));
            const Vec prod = star(f, setup_->h_->row(i), setup_->u_->row(j));
            const Elem inner = dot(f, prod, ehat_);
            const Elem cl = dot(f, prod, setup_->g_->row(n - l + 1));
            if (cl == 0) fail(Err::Invalid, "table rho value inconsistent with the bases");
            an.candidates.emplace_back(i, j);
            an.votes.push_back(f.div(f.sub(sprime, inner), cl));
        }
        if (!row_ok) insert(std::move(prefix), p);
        next_row = i + 1;
    }
    return rounds_.emplace(l, std::move(an)).first->second;
}

std::vector<std::pair<std::size_t, std::size_t>> DecoderRun::find_candidates(std::size_t l) {
    return analysis(l).candidates;
}

Elem DecoderRun::vote(std::size_t i, std::size_t j, std::size_t l) {
    const Analysis& an = analysis(l);
    for (std::size_t k = 0; k < an.candidates.size(); ++k)
        if (an.candidates[k] == std::make_pair(i, j)) return an.votes[k];
    fail(Err::NotCandidate,
         "(" + std::to_string(i) + "," + std::to_string(j) + ") is not a candidate for s_" +
             std::to_string(l));
}

void DecoderRun::set_syndrome(std::size_t l, Elem value) {
    const std::size_t n = setup_->n();
    if (l < 1 || l > n) fail(Err::IndexOutOfRange, "syndrome index " + std::to_string(l));
    if (synd_[l - 1]) fail(Err::Invalid, "syndrome s_" + std::to_string(l) + " already set");
    for (std::size_t k = 1; k < l; ++k)
        if (!synd_[k - 1])
            fail(Err::PrefixUnknown, "syndrome s_" + std::to_string(k) + " still unknown");
    const Field& f = setup_->g_->field();
    if (value >= f.q()) fail(Err::OutOfRange, "syndrome value");
    synd_[l - 1] = value;
    if (value != 0) {
        const Vec& grow = setup_->g_->row(n - l + 1);
        for (std::size_t k = 0; k < n; ++k) ehat_[k] = f.add(ehat_[k], f.mul(value, grow[k]));
    }
}

}  // namespace frcodes
