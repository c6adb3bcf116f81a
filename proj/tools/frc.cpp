// frc: construct evaluation codes over small finite fields, compute Feng-Rao
// style bounds, derive dual bases, and run the majority-voting decoder.
//
// Subcommands: bounds, dualize, encode, decode, simulate, ghw.
// Exit codes: 0 success, 2 decode failure, 3 configuration error.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "frcodes/io.hpp"

using namespace frcodes;

namespace {

struct Options {
    std::string config_path;
    std::string out_path;
    bool json = false;
    bool exhaustive = false;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::optional<std::size_t> weight;
    std::optional<std::string> variant;
    std::optional<std::string> t_range;
    std::optional<std::string> message;
    std::optional<std::string> received;
};

// Everything a subcommand can draw on, assembled from the config file.
struct Job {
    Json raw;
    AlgebraPtr algebra;
    BasisPtr basis;   // G
    BasisPtr ubasis;  // U, defaults to G
    std::optional<SemigroupData> semigroup;
    std::optional<IndexSet> index_set;
    Side side = Side::Primary;
    WBVariant variant = WBVariant::WB;
    std::optional<WBTable> table;  // over (G,U)
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    std::size_t weight = 1;
};

Vec parse_csv_vec(const std::string& s, const Field& f) {
    Vec out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            out.push_back(f.decode(std::stoul(item)));
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            fail(Err::ConfigError, "cannot parse vector entry '" + item + "'");
        }
    }
    return out;
}

Job load_job(const Options& opt) {
    if (opt.config_path.empty()) fail(Err::ConfigError, "--config is required");
    Job job;
    job.raw = load_json_file(opt.config_path);
    const Json& cfg = job.raw;
    if (!cfg.is_object()) fail(Err::ConfigError, "config must be a JSON object");

    if (cfg.contains("algebra")) {
        job.algebra = algebra_from_json(cfg["algebra"]);
        job.basis = job.algebra->eval_basis();
        job.semigroup = SemigroupData::from_algebra(*job.algebra);
    } else if (cfg.contains("basis")) {
        job.basis = basis_from_json(cfg["basis"]);
    }
    if (cfg.contains("semigroup")) job.semigroup = semigroup_from_json(cfg["semigroup"]);
    if (!job.basis && !job.semigroup)
        fail(Err::ConfigError, "config needs one of \"algebra\", \"basis\", \"semigroup\"");

    if (job.basis) {
        job.ubasis = job.basis;
        if (cfg.contains("u_basis")) {
            Mat rows = matrix_from_json(cfg["u_basis"], job.basis->field());
            job.ubasis = IndexedBasis::create(job.basis->field_ptr(), std::move(rows));
        }
    }

    const std::size_t n = job.basis ? job.basis->n() : job.semigroup->size();
    if (cfg.contains("index_set")) {
        job.index_set = index_set_from_json(cfg["index_set"], n);
    } else if (cfg.contains("target_dim")) {
        if (!job.algebra) fail(Err::ConfigError, "target_dim needs an algebra config");
        const auto dim = cfg["target_dim"].get<std::size_t>();
        job.index_set = design_improved_code(*job.algebra, dim,
                                             cfg.value("side", "primary") == "dual"
                                                 ? Side::Dual
                                                 : Side::Primary);
    }

    if (cfg.value("side", "primary") == "dual") job.side = Side::Dual;
    std::string variant = cfg.value("variant", "wb");
    if (opt.variant) variant = *opt.variant;
    if (variant == "owb") job.variant = WBVariant::OWB;
    else if (variant != "wb") fail(Err::ConfigError, "variant must be wb or owb");

    if (cfg.contains("table")) {
        if (!job.basis) fail(Err::ConfigError, "table needs a basis");
        job.table = wb_table_from_json(cfg["table"], job.basis, job.ubasis);
    }

    job.seed = opt.seed ? *opt.seed : cfg.value("seed", std::uint64_t{1});
    job.trials = opt.trials ? *opt.trials : cfg.value("trials", std::size_t{100});
    job.weight = opt.weight ? *opt.weight : cfg.value("weight", std::size_t{1});
    return job;
}

void emit(const Options& opt, const Json& machine, const std::string& human) {
    if (!opt.out_path.empty()) {
        save_json_file(opt.out_path, machine);
        return;
    }
    if (opt.json)
        std::cout << machine.dump(2) << "\n";
    else
        std::cout << human;
}

std::string expo_str(const Expo& e) {
    std::string s = "(";
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(e[k]);
    }
    return s + ")";
}

// The decoder setup for decode/simulate: an explicit table wins, then the
// semigroup-certified table of an algebra, then exhaustive classification.
DecoderPtr make_setup(const Job& job) {
    if (!job.basis) fail(Err::ConfigError, "decoding needs an algebra or basis config");
    if (!job.index_set) fail(Err::ConfigError, "decoding needs index_set or target_dim");
    if (job.table) return DecoderSetup::make(job.basis, job.ubasis, *job.index_set, &*job.table);
    if (job.algebra && job.ubasis == job.basis) {
        WBTable t = semigroup_wb_table(*job.algebra);
        return DecoderSetup::make(job.basis, job.ubasis, *job.index_set, &t);
    }
    return DecoderSetup::make(job.basis, job.ubasis, *job.index_set);
}

int cmd_bounds(const Options& opt) {
    Job job = load_job(opt);
    const std::size_t n = job.basis ? job.basis->n() : job.semigroup->size();
    Json out{{"n", n}};
    std::ostringstream human;
    human << "n = " << n << "\n";

    std::vector<std::size_t> sigma_row, mu_row;
    if (opt.exhaustive || (!job.semigroup && job.basis)) {
        if (!job.basis) fail(Err::ConfigError, "exhaustive bounds need a basis");
        WBTable t = build_wb_table(job.basis, job.ubasis);
        for (std::size_t i = 1; i <= n; ++i) {
            sigma_row.push_back(sigma_count(t, job.variant, i));
            mu_row.push_back(mu_count(t, job.variant, i));
        }
        out["table"] = "exhaustive";
        out["variant"] = job.variant == WBVariant::WB ? "wb" : "owb";
    } else {
        for (std::size_t i = 1; i <= n; ++i) {
            sigma_row.push_back(job.semigroup->sigma_at(i));
            mu_row.push_back(job.semigroup->mu_at(i));
        }
        out["table"] = "order";
    }
    out["sigma"] = sigma_row;
    out["mu"] = mu_row;

    human << "idx";
    if (job.semigroup && !opt.exhaustive) human << "  alpha";
    human << "  sigma  mu\n";
    for (std::size_t i = 1; i <= n; ++i) {
        human << "  " << i;
        if (job.semigroup && !opt.exhaustive) human << "  " << expo_str(job.semigroup->alpha(i));
        human << "  " << sigma_row[i - 1] << "  " << mu_row[i - 1] << "\n";
    }

    if (job.index_set) {
        std::size_t d = 0;
        if (opt.exhaustive || (!job.semigroup && job.basis)) {
            WBTable t = build_wb_table(job.basis, job.ubasis);
            d = min_distance_bound(make_code(job.basis, *job.index_set, job.side), t, job.variant);
        } else {
            d = job.semigroup->order_bound(*job.index_set, job.side);
        }
        out["designed_d"] = d;
        out["index_set"] = index_set_to_json(*job.index_set);
        out["side"] = job.side == Side::Primary ? "primary" : "dual";
        const std::size_t dim =
            job.side == Side::Primary ? job.index_set->size() : n - job.index_set->size();
        out["dim"] = dim;
        human << "[" << n << "," << dim << "] " << (job.side == Side::Primary ? "primary" : "dual")
              << " code, designed_d = " << d << "\n";
    }
    emit(opt, out, human.str());
    return 0;
}

int cmd_dualize(const Options& opt) {
    Job job = load_job(opt);
    if (!job.basis) fail(Err::ConfigError, "dualize needs an algebra or basis config");
    BasisPtr h = dualize(*job.basis);
    if (check_duality(*job.basis, *h) != DualityKind::Full)
        fail(Err::ConfigError, "derived basis fails the duality check");
    Json out = basis_to_json(*h);
    std::ostringstream human;
    for (std::size_t i = 1; i <= h->n(); ++i) {
        human << "h_" << i << " =";
        for (Elem x : h->row(i)) human << " " << x;
        human << "\n";
    }
    emit(opt, out, human.str());
    return 0;
}

int cmd_encode(const Options& opt) {
    Job job = load_job(opt);
    if (!job.basis || !job.index_set) fail(Err::ConfigError, "encode needs a basis and index_set");
    CodeHandle code = job.algebra ? construct_code(*job.algebra, *job.index_set, job.side)
                                  : make_code(job.basis, *job.index_set, job.side);
    Vec message;
    if (opt.message) message = parse_csv_vec(*opt.message, job.basis->field());
    else if (job.raw.contains("message")) message = vec_from_json(job.raw["message"], job.basis->field());
    else fail(Err::ConfigError, "encode needs --message or a \"message\" config entry");
    Vec c = encode(code, message);
    Json out{{"codeword", vec_to_json(c)}};
    if (code.designed_distance) out["designed_d"] = *code.designed_distance;
    std::ostringstream human;
    human << "codeword:";
    for (Elem x : c) human << " " << x;
    human << "\n";
    emit(opt, out, human.str());
    return 0;
}

int cmd_decode(const Options& opt) {
    Job job = load_job(opt);
    DecoderPtr setup = make_setup(job);
    Vec received;
    if (opt.received) received = parse_csv_vec(*opt.received, job.basis->field());
    else if (job.raw.contains("received"))
        received = vec_from_json(job.raw["received"], job.basis->field());
    else fail(Err::ConfigError, "decode needs --received or a \"received\" config entry");

    DecodeResult res = setup->decode(received);
    Json out = decode_result_to_json(res);
    out["designed_d"] = setup->designed_distance();
    out["radius"] = setup->radius();
    std::ostringstream human;
    human << "status: " << to_string(res.status) << "\n";
    if (res.ok()) {
        human << "error:   ";
        for (Elem x : res.error) human << " " << x;
        human << "\ncodeword:";
        for (Elem x : res.codeword) human << " " << x;
        human << "\n";
    } else {
        human << "failed at s_" << res.failed_l << "\n";
    }
    emit(opt, out, human.str());
    return res.ok() ? 0 : 2;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

int cmd_simulate(const Options& opt) {
    Job job = load_job(opt);
    DecoderPtr setup = make_setup(job);
    const std::size_t n = setup->n();
    const Field& f = setup->g().field();
    if (job.weight > n) fail(Err::ConfigError, "error weight exceeds the code length");
    if (job.trials < 1) fail(Err::ConfigError, "need at least one trial");
    CodeHandle code = make_code(job.basis, *job.index_set, Side::Primary);

    std::size_t successes = 0, tied = 0, nocand = 0, wrong = 0;
    std::map<std::size_t, std::size_t> weight_hist;
    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t trial = 0; trial < job.trials; ++trial) {
        // Deterministic per-trial stream: mt19937_64 seeded from the master
        // seed and the trial index through splitmix64.
        std::mt19937_64 rng(splitmix64(job.seed + 1 + trial));
        std::uniform_int_distribution<std::uint32_t> elem(0, f.q() - 1);
        std::uniform_int_distribution<std::uint32_t> nonzero(1, f.q() - 1);

        Vec message(code.I.size());
        for (Elem& x : message) x = elem(rng);
        Vec c = encode(code, message);

        Vec e(n, 0);
        std::vector<std::size_t> pos(n);
        for (std::size_t k = 0; k < n; ++k) pos[k] = k;
        for (std::size_t k = 0; k < job.weight; ++k) {
            std::uniform_int_distribution<std::size_t> pick(k, n - 1);
            std::swap(pos[k], pos[pick(rng)]);
            e[pos[k]] = nonzero(rng);
        }
        ++weight_hist[hamming_weight(e)];

        DecodeResult res = setup->decode(vec_add(f, c, e));
        if (!res.ok()) {
            if (res.status == DecodeStatus::TiedVote) ++tied;
            else ++nocand;
        } else if (res.error == e) {
            ++successes;
        } else {
            ++wrong;
        }
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    Json hist = Json::object();
    for (const auto& [w, c] : weight_hist) hist[std::to_string(w)] = c;
    Json out{{"prng", "mt19937_64 seeded by splitmix64(seed + 1 + trial)"},
             {"seed", job.seed},
             {"trials", job.trials},
             {"weight", job.weight},
             {"designed_d", setup->designed_distance()},
             {"radius", setup->radius()},
             {"successes", successes},
             {"failures",
              Json{{"tied_vote", tied}, {"no_candidates", nocand}, {"wrong_codeword", wrong}}},
             {"error_weight_histogram", std::move(hist)},
             {"wall_ms", ms}};
    std::ostringstream human;
    human << "trials " << job.trials << "  weight " << job.weight << "  successes " << successes
          << "  tied " << tied << "  no-candidates " << nocand << "  wrong " << wrong << "  ("
          << ms << " ms)\n";
    emit(opt, out, human.str());
    return 0;
}

int cmd_ghw(const Options& opt) {
    Job job = load_job(opt);
    if (!job.basis || !job.index_set) fail(Err::ConfigError, "ghw needs a basis and index_set");
    CodeHandle code = make_code(job.basis, *job.index_set, job.side);
    std::optional<WBTable> table;
    if (job.table) table = *job.table;
    else if (job.algebra && !opt.exhaustive) table = semigroup_wb_table(*job.algebra);
    else table = build_wb_table(job.basis, job.ubasis);

    std::size_t t_min = 1, t_max = code.dim();
    const std::string range = opt.t_range ? *opt.t_range : job.raw.value("t", std::string{});
    if (!range.empty()) {
        const auto colon = range.find(':');
        try {
            if (colon == std::string::npos) {
                t_min = t_max = std::stoul(range);
            } else {
                t_min = std::stoul(range.substr(0, colon));
                t_max = std::stoul(range.substr(colon + 1));
            }
        } catch (const std::exception&) {
            fail(Err::ConfigError, "cannot parse t range '" + range + "'");
        }
    }
    if (t_min < 1 || t_max > code.dim() || t_min > t_max)
        fail(Err::TOutOfRange, "t range " + std::to_string(t_min) + ":" + std::to_string(t_max));

    Json bounds = Json::array();
    std::ostringstream human;
    for (std::size_t t = t_min; t <= t_max; ++t) {
        const std::size_t b = ghw_bound(code, *table, job.variant, t);
        bounds.push_back(Json{{"t", t}, {"bound", b}});
        human << "d_" << t << " >= " << b << "\n";
    }
    Json out{{"n", code.n()}, {"dim", code.dim()}, {"bounds", std::move(bounds)}};
    emit(opt, out, human.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"evaluation codes, Feng-Rao style bounds, and majority-voting decoding"};
    app.require_subcommand(1);
    Options opt;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", opt.config_path, "job configuration file (JSON)")->required();
        cmd->add_flag("--json", opt.json, "machine-readable output");
        cmd->add_option("--out", opt.out_path, "write JSON output to this path");
        cmd->add_option("--variant", opt.variant, "bound variant: wb or owb");
        return cmd;
    };

    auto* bounds = add_common(app.add_subcommand("bounds", "per-index sigma/mu values and code bounds"));
    bounds->add_flag("--exhaustive", opt.exhaustive, "classify all pairs instead of the order route");
    add_common(app.add_subcommand("dualize", "derive and print the dual description basis"));
    auto* enc = add_common(app.add_subcommand("encode", "encode a message"));
    enc->add_option("--message", opt.message, "comma-separated message symbols");
    auto* dec = add_common(app.add_subcommand("decode", "decode a received word"));
    dec->add_option("--received", opt.received, "comma-separated received symbols");
    auto* sim = add_common(app.add_subcommand("simulate", "Monte-Carlo decoding over a q-ary channel"));
    sim->add_option("--seed", opt.seed, "master PRNG seed");
    sim->add_option("--trials", opt.trials, "number of trials");
    sim->add_option("--weight", opt.weight, "planted error weight");
    auto* ghw = add_common(app.add_subcommand("ghw", "generalized Hamming weight bounds"));
    ghw->add_option("--t", opt.t_range, "weight index or MIN:MAX range");
    ghw->add_flag("--exhaustive", opt.exhaustive, "classify all pairs instead of the order route");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bounds->parsed()) return cmd_bounds(opt);
        if (app.get_subcommand("dualize")->parsed()) return cmd_dualize(opt);
        if (enc->parsed()) return cmd_encode(opt);
        if (dec->parsed()) return cmd_decode(opt);
        if (sim->parsed()) return cmd_simulate(opt);
        if (ghw->parsed()) return cmd_ghw(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
