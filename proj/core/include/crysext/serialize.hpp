#pragma once

#include "crysext/breuil.hpp"
#include "crysext/characters.hpp"
#include "crysext/weight_explicit.hpp"

#include <nlohmann/json.hpp>

namespace crysext {

using Json = nlohmann::ordered_json;

// Field elements are always strings ("2", "a^2+2a+1") so that GF(p^f)
// elements are unambiguous. Readers throw Error(invalid_argument) with the
// offending key path in the message.

Json to_json(const FieldElem& x);
FieldElem field_from_json(const Json& j, const Context& ctx, const std::string& path = "$");

Json to_json(const TruncPoly& poly);  ///< [[deg, "coeff"], ...], increasing degree
TruncPoly poly_from_json(const Json& j, const Context& ctx, const std::string& path = "$");

Json to_json(const FullChar& chi);  ///< {"exp": int, "frob": "..."}
FullChar char_from_json(const Json& j, const Context& ctx, const std::string& path = "$");

Json to_json(const SerreWeight& a);  ///< {"a1": int, "a2": int}
SerreWeight weight_from_json(const Json& j, const std::string& path = "$");

Json to_json(const JDelta& jd);  ///< {"J": "full" | "empty", "delta": int}
JDelta jdelta_from_json(const Json& j, const std::string& path = "$");

Json to_json(const ValidPair& vp);  ///< {"x", "y", "k", "l"}
ValidPair valid_pair_from_json(const Json& j, const std::string& path = "$");

Json to_json(const RankOneBM& m);  ///< {"x", "c", "k"}
RankOneBM rank_one_from_json(const Json& j, const Context& ctx, const std::string& path = "$");

Json to_json(const ExtBM& p);  ///< {"x", "y", "lambda", "c", "d", "k", "l"}
ExtBM ext_from_json(const Json& j, const Context& ctx, const std::string& path = "$");

Json to_json(const Context& ctx);  ///< {"p", "e", "f", "cyclotomic_scalar"}
Context context_from_json(const Json& j, const std::string& path = "$");

}  // namespace crysext
