#include "frcodes/io.hpp"

#include <fstream>

namespace frcodes {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(Err::ConfigError, what); }

std::uint64_t get_uint(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned()) {
        if (j.contains(key) && j[key].is_number_integer() && j[key].get<std::int64_t>() >= 0)
            return static_cast<std::uint64_t>(j[key].get<std::int64_t>());
        bad(std::string("expected non-negative integer field \"") + key + "\"");
    }
    return j[key].get<std::uint64_t>();
}

std::vector<std::uint32_t> get_u32_list(const Json& j) {
    if (!j.is_array()) bad("expected an integer array");
    std::vector<std::uint32_t> out;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<std::int64_t>() < 0) bad("expected non-negative integers");
        out.push_back(static_cast<std::uint32_t>(x.get<std::int64_t>()));
    }
    return out;
}

}  // namespace

Json field_to_json(const Field& f) {
    Json j{{"p", f.p()}, {"m", f.m()}};
    if (f.m() > 1) j["poly"] = f.modulus();
    return j;
}

FieldPtr field_from_json(const Json& j) {
    if (!j.is_object()) bad("field spec must be an object");
    const auto p = static_cast<std::uint32_t>(get_uint(j, "p"));
    const auto m = j.contains("m") ? static_cast<std::uint32_t>(get_uint(j, "m")) : 1u;
    std::vector<std::uint32_t> poly;
    if (j.contains("poly")) poly = get_u32_list(j["poly"]);
    try {
        return Field::create(p, m, poly);
    } catch (const Error& e) {
        bad(std::string("invalid field spec: ") + e.what());
    }
}

Json vec_to_json(const Vec& v) { return Json(v); }

Vec vec_from_json(const Json& j, const Field& f) {
    Vec out;
    for (std::uint32_t x : get_u32_list(j)) {
        if (x >= f.q()) bad("vector entry " + std::to_string(x) + " outside the field");
        out.push_back(x);
    }
    return out;
}

Json matrix_to_json(const Mat& m) {
    Json j = Json::array();
    for (const Vec& row : m) j.push_back(vec_to_json(row));
    return j;
}

Mat matrix_from_json(const Json& j, const Field& f) {
    if (!j.is_array()) bad("matrix must be an array of rows");
    Mat out;
    for (const auto& row : j) out.push_back(vec_from_json(row, f));
    return out;
}

Json basis_to_json(const IndexedBasis& b) {
    return Json{{"field", field_to_json(b.field())}, {"rows", matrix_to_json(b.rows())}};
}

BasisPtr basis_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("rows"))
        bad("basis needs \"field\" and \"rows\"");
    FieldPtr f = field_from_json(j["field"]);
    Mat rows = matrix_from_json(j["rows"], *f);
    try {
        return IndexedBasis::create(std::move(f), std::move(rows));
    } catch (const Error& e) {
        bad(std::string("invalid basis: ") + e.what());
    }
}

Json wb_table_to_json(const WBTable& t) {
    Json entries = Json::array();
    t.for_each([&](std::size_t i, std::size_t j, const WBEntry& e) {
        entries.push_back(
            Json{{"i", i}, {"j", j}, {"status", to_string(e.status)}, {"rho", e.rho}});
    });
    return Json{{"n", t.n()},
                {"completeness", t.exhaustive() ? "exhaustive" : "partial"},
                {"entries", std::move(entries)}};
}

WBTable wb_table_from_json(const Json& j, BasisPtr b, BasisPtr u) {
    if (!j.is_object() || !j.contains("entries")) bad("table needs \"entries\"");
    const bool exhaustive =
        j.contains("completeness") && j["completeness"].get<std::string>() == "exhaustive";
    WBTable out(std::move(b), std::move(u), exhaustive);
    if (j.contains("n") && get_uint(j, "n") != out.n()) bad("table size vs basis length");
    for (const auto& e : j["entries"]) {
        const auto i = static_cast<std::size_t>(get_uint(e, "i"));
        const auto jj = static_cast<std::size_t>(get_uint(e, "j"));
        const auto rho = static_cast<std::size_t>(get_uint(e, "rho"));
        if (!e.contains("status") || !e["status"].is_string()) bad("entry needs a status string");
        const auto st = wb_status_from_string(e["status"].get<std::string>());
        if (!st) bad("unknown status " + e["status"].get<std::string>());
        if (i < 1 || i > out.n() || jj < 1 || jj > out.n() || rho > out.n())
            bad("table entry out of range");
        out.set(i, jj, WBEntry{*st, rho});
    }
    return out;
}

Json index_set_to_json(const IndexSet& s) { return Json(s.members()); }

IndexSet index_set_from_json(const Json& j, std::size_t n) {
    std::vector<std::size_t> members;
    for (std::uint32_t x : get_u32_list(j)) members.push_back(x);
    try {
        return IndexSet::of(n, std::move(members));
    } catch (const Error& e) {
        bad(std::string("invalid index set: ") + e.what());
    }
}

Json order_to_json(const MonomialOrder& o) {
    const char* kind = "graded-lex";
    if (o.kind == MonomialOrder::Kind::Lex) kind = "lex";
    if (o.kind == MonomialOrder::Kind::GradedReverseLex) kind = "graded-reverse-lex";
    return Json{{"kind", kind}, {"priority", o.priority}};
}

MonomialOrder order_from_json(const Json& j, std::size_t vars) {
    MonomialOrder o;
    o.priority = MonomialOrder::default_priority(vars);
    if (j.is_null()) return o;
    if (!j.is_object()) bad("order must be an object");
    if (j.contains("kind")) {
        const std::string k = j["kind"].get<std::string>();
        if (k == "graded-lex") o.kind = MonomialOrder::Kind::GradedLex;
        else if (k == "lex") o.kind = MonomialOrder::Kind::Lex;
        else if (k == "graded-reverse-lex") o.kind = MonomialOrder::Kind::GradedReverseLex;
        else bad("unknown monomial order kind " + k);
    }
    if (j.contains("priority")) {
        o.priority.clear();
        for (std::uint32_t x : get_u32_list(j["priority"])) o.priority.push_back(x);
    }
    return o;
}

AlgebraPtr algebra_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("point_sets"))
        bad("algebra needs \"field\" and \"point_sets\"");
    FieldPtr f = field_from_json(j["field"]);
    if (!j["point_sets"].is_array() || j["point_sets"].empty())
        bad("point_sets must be a non-empty array of arrays");
    const std::size_t vars =
        j.contains("vars") ? static_cast<std::size_t>(get_uint(j, "vars")) : j["point_sets"].size();
    std::vector<Vec> sets;
    for (const auto& s : j["point_sets"]) sets.push_back(vec_from_json(s, *f));
    MonomialOrder order = order_from_json(j.contains("order") ? j["order"] : Json(), vars);
    try {
        return MonomialAlgebra::build(std::move(f), vars, std::move(order), std::move(sets));
    } catch (const Error& e) {
        bad(std::string("invalid algebra: ") + e.what());
    }
}

Json algebra_to_json(const MonomialAlgebra& a) {
    Json sets = Json::array();
    for (const Vec& s : a.point_sets()) sets.push_back(vec_to_json(s));
    return Json{{"field", field_to_json(a.field())},
                {"vars", a.vars()},
                {"order", order_to_json(a.order())},
                {"point_sets", std::move(sets)}};
}

SemigroupData semigroup_from_json(const Json& j) {
    if (!j.is_object()) bad("semigroup spec must be an object");
    try {
        if (j.contains("box")) return SemigroupData::box(get_u32_list(j["box"]));
        if (j.contains("generators"))
            return SemigroupData::numerical(get_u32_list(j["generators"]),
                                            get_u32_list(j["delta"]));
    } catch (const Error& e) {
        bad(std::string("invalid semigroup: ") + e.what());
    }
    bad("semigroup needs either \"box\" or \"generators\"+\"delta\"");
}

Json transcript_to_json(const std::vector<RoundRecord>& rounds) {
    Json out = Json::array();
    for (const RoundRecord& r : rounds) {
        Json cands = Json::array();
        for (const auto& [i, j] : r.candidates) cands.push_back(Json::array({i, j}));
        Json tally = Json::array();
        for (const auto& [value, count] : r.tally)
            tally.push_back(Json{{"value", value}, {"count", count}});
        Json rec{{"l", r.l},
                 {"candidates", std::move(cands)},
                 {"votes", Json(r.votes)},
                 {"tally", std::move(tally)}};
        if (r.chosen) rec["chosen"] = *r.chosen;
        out.push_back(std::move(rec));
    }
    return out;
}

Json decode_result_to_json(const DecodeResult& r) {
    Json out{{"status", to_string(r.status)}, {"transcript", transcript_to_json(r.transcript)}};
    if (r.status != DecodeStatus::Ok) {
        out["failed_l"] = r.failed_l;
    } else {
        out["error"] = vec_to_json(r.error);
        out["codeword"] = vec_to_json(r.codeword);
        out["syndromes"] = vec_to_json(r.syndromes);
    }
    return out;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        bad("cannot parse " + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) bad("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace frcodes
