#pragma once

#include <json.hpp>

#include "affbgg/bgg.hpp"
#include "affbgg/characters.hpp"
#include "affbgg/integral.hpp"
#include "affbgg/parabolic.hpp"

namespace affbgg {

using nlohmann::json;

json rat_json(const Rat& r);          // "p" or "p/q" string
json ratvec_json(const RatVec& v);
json intvec_json(const IntVec& v);

json root_system_json(const RootSystemData& rs);
json affine_root_json(const AffineRoot& r);
json weight_json(const AffineWeight& w);

json integral_system_json(const IntegralSystem& sys);
json admissible_weight_json(const RootSystemData& rs, const AdmissibleWeight& aw);

/// Complex export per the documented schema: lambda, kind, grades, edges with
/// signs, verification summary, plus enough context to reload and re-verify.
json complex_json(const IntegralSystem& sys, const ComplexTruncation& c);

json character_json(const RootSystemData& rs, const CharacterSeries& s);
std::string character_csv(const CharacterSeries& s);

}  // namespace affbgg
