#ifndef FRCODES_DECODER_HPP
#define FRCODES_DECODER_HPP

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "frcodes/wb.hpp"

namespace frcodes {

enum class DecodeStatus { Ok, NoCandidates, TiedVote };

const char* to_string(DecodeStatus s);

struct RoundRecord {
    std::size_t l = 0;
    std::vector<std::pair<std::size_t, std::size_t>> candidates;  // lexicographic
    std::vector<Elem> votes;                                      // aligned with candidates
    std::map<Elem, std::size_t> tally;
    std::optional<Elem> chosen;
};

struct DecodeResult {
    DecodeStatus status = DecodeStatus::Ok;
    std::size_t failed_l = 0;  // offending round when status != Ok
    Vec error;
    Vec codeword;
    Vec syndromes;  // s_1..s_n, complete only on success
    std::vector<RoundRecord> transcript;

    bool ok() const { return status == DecodeStatus::Ok; }
};

class DecoderRun;

// Everything a decoder needs that does not depend on the received word:
// the dual description H of the primary code C(G,I), a well-behaving table
// over (H,U), and the per-value candidate pools.  Immutable and shareable;
// independent decodes need no coordination.
class DecoderSetup : public std::enable_shared_from_this<DecoderSetup> {
  public:
    // table_gu, when given, must be built over (G,U) and is translated to
    // (H,U); otherwise (H,U) is classified exhaustively.
    static std::shared_ptr<const DecoderSetup> make(BasisPtr g, BasisPtr u, IndexSet I,
                                                    const WBTable* table_gu = nullptr);

    std::size_t n() const { return g_->n(); }
    const IndexedBasis& g() const { return *g_; }
    const IndexedBasis& h() const { return *h_; }
    const IndexedBasis& u() const { return *u_; }
    const IndexSet& I() const { return I_; }
    const IndexSet& Ibar() const { return Ibar_; }
    const WBTable& table() const { return *table_; }

    // min mu over values outside Ibar, i.e. the designed distance the table
    // certifies; decoding is guaranteed up to half of it.
    std::size_t designed_distance() const { return designed_distance_; }
    std::size_t radius() const {
        return designed_distance_ == 0 ? 0 : (designed_distance_ - 1) / 2;
    }

    // Full pipeline: initialize syndromes from r, majority-vote the unknown
    // ones in increasing order, then recover e and c = r - e.
    DecodeResult decode(const Vec& received) const;

    // Stepwise interface over the same engine.
    DecoderRun start(const Vec& received) const;

  private:
    friend class DecoderRun;
    DecoderSetup() = default;

    BasisPtr g_, h_, u_;
    IndexSet I_{IndexSet::full(1)}, Ibar_{IndexSet::full(1)};
    std::shared_ptr<const WBTable> table_;
    // WB entries grouped by rho value, sorted by ascending i (their j are
    // then strictly descending).
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> wb_by_rho_;
    std::size_t designed_distance_ = 0;
};

using DecoderPtr = std::shared_ptr<const DecoderSetup>;

// Per-received-word decoding state: the partially known syndrome vector
// s_1..s_n, the running combination ehat = sum s_k g_{n-k+1} over known k,
// and a lazily filled grid of derived entries s_vw = (h_v * u_w) . e.
class DecoderRun {
  public:
    const std::vector<std::optional<Elem>>& syndromes() const { return synd_; }
    std::optional<std::size_t> next_unknown() const;

    // Candidates for the smallest unknown value l: WB entries of rho l whose
    // three corner matrices agree in rank.  PrefixUnknown unless every
    // smaller syndrome is known.
    std::vector<std::pair<std::size_t, std::size_t>> find_candidates(std::size_t l);

    // The vote of candidate (i,j): extend row i inside the row space of
    // S(i-1,j), then solve for s_l in the linear expansion of s_ij.
    Elem vote(std::size_t i, std::size_t j, std::size_t l);

    void set_syndrome(std::size_t l, Elem value);

    // Current estimate sum s_k g_{n-k+1} over the known syndromes; equals
    // the error vector once all syndromes are known.
    const Vec& error_estimate() const { return ehat_; }

  private:
    friend class DecoderSetup;
    struct Analysis {
        std::vector<std::pair<std::size_t, std::size_t>> candidates;
        std::vector<Elem> votes;
    };

    DecoderRun(DecoderPtr setup, const Vec& received);
    Elem sval(std::size_t v, std::size_t w);
    const Analysis& analysis(std::size_t l);

    DecoderPtr setup_;
    std::vector<std::optional<Elem>> synd_;  // [l-1] holds s_l
    Vec ehat_;
    std::vector<Elem> sgrid_;
    std::vector<char> sgrid_known_;
    std::map<std::size_t, Analysis> rounds_;
};

}  // namespace frcodes

#endif
