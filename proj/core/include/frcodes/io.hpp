#ifndef FRCODES_IO_HPP
#define FRCODES_IO_HPP

#include <string>

#include "json.hpp"

#include "frcodes/algebra.hpp"
#include "frcodes/decoder.hpp"
#include "frcodes/semigroup.hpp"

namespace frcodes {

using Json = nlohmann::json;

// All vectors and matrices travel as integers under the canonical element
// encoding.  Parsers throw ConfigError on malformed input.

Json field_to_json(const Field& f);
FieldPtr field_from_json(const Json& j);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j, const Field& f);

Json matrix_to_json(const Mat& m);
Mat matrix_from_json(const Json& j, const Field& f);

Json basis_to_json(const IndexedBasis& b);       // {"field":..., "rows":[[...]]}
BasisPtr basis_from_json(const Json& j);

Json wb_table_to_json(const WBTable& t);         // {"n","completeness","entries":[...]}
WBTable wb_table_from_json(const Json& j, BasisPtr b, BasisPtr u);

Json index_set_to_json(const IndexSet& s);
IndexSet index_set_from_json(const Json& j, std::size_t n);

MonomialOrder order_from_json(const Json& j, std::size_t vars);
Json order_to_json(const MonomialOrder& o);

AlgebraPtr algebra_from_json(const Json& j);     // {"field","vars","order","point_sets"}
Json algebra_to_json(const MonomialAlgebra& a);

SemigroupData semigroup_from_json(const Json& j);  // {"r","generators","delta"} or {"r","box"}

Json transcript_to_json(const std::vector<RoundRecord>& rounds);
Json decode_result_to_json(const DecodeResult& r);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace frcodes

#endif
